#include "palab/fpoly.hpp"

#include <algorithm>
#include <cctype>

#include "palab/errors.hpp"
#include "palab/intutil.hpp"

namespace palab {

namespace {

void trim(FpPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

int norm_coef(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return (int)r;
}

}  // namespace

std::strong_ordering FpPoly::operator<=>(const FpPoly& o) const {
  if (deg() != o.deg()) return deg() <=> o.deg();
  for (int i = deg(); i >= 0; --i)
    if (c[i] != o.c[i]) return c[i] <=> o.c[i];
  return std::strong_ordering::equal;
}

FpPoly fp_zero(int p) { return FpPoly{p, {}}; }
FpPoly fp_one(int p) { return FpPoly{p, {1}}; }

FpPoly fp_const(int p, long long v) {
  FpPoly a{p, {norm_coef(v, p)}};
  trim(a);
  return a;
}

FpPoly fp_x(int p) { return FpPoly{p, {0, 1}}; }

FpPoly fp_from_coeffs(int p, std::vector<long long> coeffs) {
  FpPoly a{p, {}};
  a.c.reserve(coeffs.size());
  for (auto v : coeffs) a.c.push_back(norm_coef(v, p));
  trim(a);
  return a;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  FpPoly r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    int v = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
    r.c[i] = v % a.p;
  }
  trim(r);
  return r;
}

FpPoly fp_neg(const FpPoly& a) {
  FpPoly r = a;
  for (auto& v : r.c) v = v ? a.p - v : 0;
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) { return fp_add(a, fp_neg(b)); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return fp_zero(a.p);
  FpPoly r{a.p, std::vector<int>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (int)((r.c[i + j] + (long long)a.c[i] * b.c[j]) % a.p);
  trim(r);
  return r;
}

FpPoly fp_scale(const FpPoly& a, int k) {
  FpPoly r = a;
  k = norm_coef(k, a.p);
  for (auto& v : r.c) v = (int)((long long)v * k % a.p);
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw PreconditionError("fp_divmod: division by zero");
  FpPoly rem = a, quot{a.p, {}};
  if (rem.deg() >= b.deg()) quot.c.resize(rem.deg() - b.deg() + 1, 0);
  int inv_lead = (int)inv_mod(b.lead(), a.p);
  while (rem.deg() >= b.deg()) {
    int shift = rem.deg() - b.deg();
    int q = (int)((long long)rem.lead() * inv_lead % a.p);
    quot.c[shift] = q;
    for (int i = 0; i <= b.deg(); ++i) {
      long long v = rem.c[shift + i] - (long long)q * b.c[i];
      rem.c[shift + i] = norm_coef(v, a.p);
    }
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

bool fp_divides(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero()) return b.is_zero();
  return fp_mod(b, a).is_zero();
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = fp_mod(x, y);
    x = y;
    y = r;
  }
  return fp_monic(x);
}

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return fp_scale(a, (int)inv_mod(a.lead(), a.p));
}

FpPoly fp_pow(const FpPoly& a, int e) {
  FpPoly r = fp_one(a.p), b = a;
  while (e > 0) {
    if (e & 1) r = fp_mul(r, b);
    b = fp_mul(b, b);
    e >>= 1;
  }
  return r;
}

int fp_eval(const FpPoly& a, int x) {
  long long r = 0;
  x = norm_coef(x, a.p);
  for (int i = a.deg(); i >= 0; --i) r = (r * x + a.c[i]) % a.p;
  return (int)r;
}

bool fp_is_irreducible(const FpPoly& a) {
  if (a.deg() < 1) return false;
  if (a.deg() == 1) return true;
  for (int d = 1; 2 * d <= a.deg(); ++d)
    for (const FpPoly& q : fp_monic_irreducibles(a.p, d))
      if (fp_mod(a, q).is_zero()) return false;
  return true;
}

std::vector<FpPoly> fp_monic_irreducibles(int p, int d) {
  std::vector<FpPoly> out;
  // Enumerate monic polynomials of degree d by their lower coefficients,
  // low-index digit fastest, which matches the canonical poly order.
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    FpPoly f{p, std::vector<int>(d + 1, 0)};
    long long rest = code;
    for (int i = 0; i < d; ++i) {
      f.c[i] = (int)(rest % p);
      rest /= p;
    }
    f.c[d] = 1;
    if (fp_is_irreducible(f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FpPoly fp_smallest_irreducible_avoiding(int p,
                                        const std::vector<FpPoly>& avoid) {
  for (int d = 1;; ++d) {
    for (const FpPoly& f : fp_monic_irreducibles(p, d)) {
      bool bad = false;
      for (const FpPoly& g : avoid)
        if (g == f) { bad = true; break; }
      if (!bad) return f;
    }
  }
}

std::string fp_to_string(const FpPoly& a, char var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.deg(); i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(a.c[i]);
    } else {
      if (a.c[i] != 1) out += std::to_string(a.c[i]);
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

FpPoly fp_parse(const std::string& text, int p, char var) {
  FpPoly acc = fp_zero(p);
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  if (i >= text.size()) throw ParseError("empty polynomial", i);
  bool first = true;
  while (true) {
    skip_ws();
    int sign = 1;
    if (!first || (i < text.size() && (text[i] == '+' || text[i] == '-'))) {
      if (i >= text.size()) break;
      if (text[i] == '+') { ++i; }
      else if (text[i] == '-') { sign = -1; ++i; }
      else if (!first) throw ParseError("expected '+' or '-'", i);
    }
    first = false;
    skip_ws();
    long long coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      coeff = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i]))
        coeff = coeff * 10 + (text[i++] - '0');
      saw_coeff = true;
    }
    int exp = 0;
    skip_ws();
    if (i < text.size() && (text[i] == '*' )) { ++i; skip_ws(); }
    if (i < text.size() && text[i] == var) {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          throw ParseError("expected exponent", i);
        exp = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
          exp = exp * 10 + (text[i++] - '0');
      }
    } else if (!saw_coeff) {
      throw ParseError(std::string("expected coefficient or '") + var + "'", i);
    }
    FpPoly term{p, std::vector<int>(exp + 1, 0)};
    term.c[exp] = norm_coef(sign * coeff, p);
    trim(term);
    acc = fp_add(acc, term);
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '+' && text[i] != '-')
      throw ParseError("unexpected character in polynomial", i);
  }
  return acc;
}

}  // namespace palab
