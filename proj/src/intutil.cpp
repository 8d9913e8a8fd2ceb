#include "palab/intutil.hpp"

#include <cmath>
#include <string>

#include "palab/errors.hpp"

namespace palab {

bool is_prime_i64(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n, int64_t cap) {
  if (n <= 0) throw PreconditionError("factorize: argument must be positive");
  if (n > cap)
    throw CapExceeded("factorize: " + std::to_string(n) +
                      " exceeds trial-division cap " + std::to_string(cap));
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) n /= d, ++e;
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  int64_t x1, y1;
  int64_t g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

int64_t inv_mod(int64_t a, int64_t m) {
  int64_t x, y;
  a %= m;
  if (a < 0) a += m;
  int64_t g = egcd(a, m, x, y);
  if (g != 1) throw PreconditionError("inv_mod: arguments not coprime");
  x %= m;
  if (x < 0) x += m;
  return x;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
  base %= mod;
  if (base < 0) base += mod;
  // __int128 intermediates keep 63-bit moduli safe.
  unsigned __int128 r = 1, b = (unsigned __int128)base;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return (int64_t)r;
}

int legendre(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  int64_t e = pow_mod(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int64_t sqrt_mod(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) return -1;
  // Tonelli-Shanks.
  int64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  int64_t root;
  if (s == 1) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    int64_t z = 2;
    while (legendre(z, p) != -1) ++z;
    int64_t m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p),
            r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      int64_t i = 0, tt = t;
      while (tt != 1) {
        tt = (int64_t)((unsigned __int128)tt * tt % p);
        ++i;
      }
      int64_t b = c;
      for (int64_t j = 0; j < m - i - 1; ++j)
        b = (int64_t)((unsigned __int128)b * b % p);
      m = i;
      c = (int64_t)((unsigned __int128)b * b % p);
      t = (int64_t)((unsigned __int128)t * c % p);
      r = (int64_t)((unsigned __int128)r * b % p);
    }
    root = r;
  }
  return std::min(root, p - root);
}

bool is_squarefree(int64_t n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

int64_t isqrt_i64(int64_t n) {
  if (n < 0) return -1;
  int64_t r = (int64_t)std::sqrt((double)n);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace palab
