#ifndef PALAB_INTUTIL_HPP
#define PALAB_INTUTIL_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace palab {

using std::int64_t;

// Deterministic trial division. All callers stay far below the cap, so no
// probabilistic machinery is needed anywhere in the library.
bool is_prime_i64(int64_t n);

inline constexpr int64_t kFactorCap = 1'000'000'000;

// Prime factorization (p, exponent) pairs, ascending. Throws CapExceeded for
// n > cap; trial division would stop being "runs in seconds" beyond it.
std::vector<std::pair<int64_t, int>> factorize(int64_t n,
                                               int64_t cap = kFactorCap);

// Extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g.
int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y);

// Inverse of a modulo m (m > 1, gcd(a, m) = 1).
int64_t inv_mod(int64_t a, int64_t m);

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod);

// Legendre symbol (a|p) for odd prime p: 1, -1, or 0.
int legendre(int64_t a, int64_t p);

// Square root of a modulo an odd prime p via Tonelli-Shanks; -1 if a is a
// non-residue. Returns the smaller of the two roots.
int64_t sqrt_mod(int64_t a, int64_t p);

bool is_squarefree(int64_t n);

// Floor square root, exact for n >= 0.
int64_t isqrt_i64(int64_t n);

}  // namespace palab

#endif
