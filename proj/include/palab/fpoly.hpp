#ifndef PALAB_FPOLY_HPP
#define PALAB_FPOLY_HPP

#include <compare>
#include <string>
#include <vector>

namespace palab {

// Univariate polynomial over the prime field F_p, dense little-endian
// coefficients in [0, p). Trailing coefficient nonzero; the zero polynomial
// has an empty vector. Serves three roles: moduli of polynomial quotient
// rings, canonical primes of F_p[x], and numerators/denominators of rational
// functions over F_p(t).
struct FpPoly {
  int p = 2;
  std::vector<int> c;

  bool is_zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }  // -1 for zero
  int lead() const { return c.empty() ? 0 : c.back(); }
  bool is_monic() const { return lead() == 1; }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }

  bool operator==(const FpPoly&) const = default;
  // Canonical order: degree, then coefficients from the top down.
  std::strong_ordering operator<=>(const FpPoly& o) const;
};

FpPoly fp_zero(int p);
FpPoly fp_one(int p);
FpPoly fp_const(int p, long long v);
FpPoly fp_x(int p);
FpPoly fp_from_coeffs(int p, std::vector<long long> coeffs);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_neg(const FpPoly& a);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, int k);
// Quotient and remainder; b nonzero.
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
bool fp_divides(const FpPoly& a, const FpPoly& b);  // a | b
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);    // monic (or zero)
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_pow(const FpPoly& a, int e);
int fp_eval(const FpPoly& a, int x);

// Irreducibility by trial division over all lower-degree monic irreducibles.
bool fp_is_irreducible(const FpPoly& a);

// All monic irreducibles of exactly degree d, in canonical order.
std::vector<FpPoly> fp_monic_irreducibles(int p, int d);

// Smallest monic irreducible (canonical order over all degrees) that is not
// in `avoid`. Searches degree 1 upward.
FpPoly fp_smallest_irreducible_avoiding(int p, const std::vector<FpPoly>& avoid);

// Text form, e.g. "x^3+2x+1". `var` is the variable letter.
std::string fp_to_string(const FpPoly& a, char var = 'x');
// Parser for the same grammar: terms joined by '+'/'-', each
// `coeff`, `coeff var`, `coeff*var`, `var^k`, ... Coefficients reduced mod p.
FpPoly fp_parse(const std::string& text, int p, char var = 'x');

}  // namespace palab

#endif
