#include "palab/finring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "palab/errors.hpp"
#include "palab/intutil.hpp"

namespace palab {

namespace {

long long powll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_cap(long long order, int cap, const std::string& what) {
  if (order > cap)
    throw CapExceeded(what + ": order " + std::to_string(order) +
                      " exceeds cap " + std::to_string(cap));
}

}  // namespace

RingPtr FiniteRing::residue(long n, int cap) {
  if (n < 2) throw PreconditionError("Z/n requires n >= 2 (need 1 != 0)");
  check_cap(n, cap, "Z/" + std::to_string(n));
  auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
  r->kind_ = Kind::Residue;
  r->order_ = (int)n;
  r->one_ = 1;
  r->res_n_ = n;
  r->name_ = "Z/" + std::to_string(n);
  return r;
}

RingPtr FiniteRing::poly_quotient(FpPoly modulus, int cap) {
  if (!is_prime_i64(modulus.p))
    throw PreconditionError("F_p[x]/(f): p must be prime");
  if (modulus.deg() < 1)
    throw PreconditionError("F_p[x]/(f): modulus must have degree >= 1");
  modulus = fp_monic(modulus);
  long long order = powll(modulus.p, modulus.deg());
  check_cap(order, cap, "F" + std::to_string(modulus.p) + "[x]/(...)");
  auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
  r->kind_ = Kind::PolyQuotient;
  r->order_ = (int)order;
  r->one_ = 1;
  r->pq_mod_ = modulus;
  r->name_ = "F" + std::to_string(modulus.p) + "[x]/(" +
             fp_to_string(modulus) + ")";
  return r;
}

RingPtr FiniteRing::product(RingPtr a, RingPtr b, int cap) {
  long long order = (long long)a->order() * b->order();
  check_cap(order, cap, "product ring");
  auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
  r->kind_ = Kind::Product;
  r->order_ = (int)order;
  r->left_ = a;
  r->right_ = b;
  r->one_ = a->one() * b->order() + b->one();
  r->name_ = a->name() + " x " + b->name();
  return r;
}

RingPtr FiniteRing::table(int order, std::vector<int> add, std::vector<int> mul,
                          std::string name, bool trusted, int cap) {
  if (order < 2) throw PreconditionError("table ring: order must be >= 2");
  check_cap(order, cap, "table ring");
  if ((int)add.size() != order * order || (int)mul.size() != order * order)
    throw PreconditionError("table ring: matrices must be order x order");
  for (int v : add)
    if (v < 0 || v >= order)
      throw PreconditionError("table ring: entry out of range");
  for (int v : mul)
    if (v < 0 || v >= order)
      throw PreconditionError("table ring: entry out of range");
  auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
  r->kind_ = Kind::Table;
  r->order_ = order;
  r->one_ = 1;
  r->add_table_ = std::move(add);
  r->mul_table_ = std::move(mul);
  r->name_ = std::move(name);
  if (!trusted) r->verify_axioms();
  return r;
}

RingPtr FiniteRing::corner(RingPtr parent, int e) {
  if (parent->mul(e, e) != e)
    throw PreconditionError("corner: element is not idempotent");
  if (e == 0) throw PreconditionError("corner: zero idempotent gives 1 = 0");
  auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
  r->kind_ = Kind::Corner;
  r->parent_ = parent;
  std::vector<char> seen(parent->order(), 0);
  for (int x = 0; x < parent->order(); ++x) {
    int ex = parent->mul(e, x);
    if (!seen[ex]) {
      seen[ex] = 1;
      r->pelems_.push_back(ex);
    }
  }
  std::sort(r->pelems_.begin(), r->pelems_.end());
  r->order_ = (int)r->pelems_.size();
  r->pindex_.assign(parent->order(), -1);
  for (int i = 0; i < r->order_; ++i) r->pindex_[r->pelems_[i]] = i;
  r->one_ = r->pindex_[e];
  r->name_ = "corner(e=" + parent->elem_name(e) + ") of " + parent->name();
  if (r->order_ < 2)
    throw PreconditionError("corner: resulting ring has 1 = 0");
  return r;
}

RingPtr FiniteRing::quotient_of(RingPtr parent, std::vector<int> rep,
                                std::string name) {
  auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
  r->kind_ = Kind::Quotient;
  r->parent_ = parent;
  r->prep_ = std::move(rep);
  for (int x = 0; x < parent->order(); ++x)
    if (r->prep_[x] == x) r->pelems_.push_back(x);
  // Coset reps are minimal, so 0 represents the zero coset and the list is
  // ascending already.
  r->order_ = (int)r->pelems_.size();
  if (r->order_ < 2)
    throw PreconditionError("quotient: resulting ring has 1 = 0");
  r->pindex_.assign(parent->order(), -1);
  for (int i = 0; i < r->order_; ++i) r->pindex_[r->pelems_[i]] = i;
  r->one_ = r->pindex_[r->prep_[parent->one()]];
  r->name_ = std::move(name);
  return r;
}

int FiniteRing::add(int a, int b) const {
  switch (kind_) {
    case Kind::Residue:
      return (int)(((long)a + b) % res_n_);
    case Kind::PolyQuotient: {
      int p = pq_mod_.p;
      long long r = 0, pw = 1, aa = a, bb = b;
      for (int i = 0; i < pq_mod_.deg(); ++i) {
        r += (aa % p + bb % p) % p * pw;
        aa /= p;
        bb /= p;
        pw *= p;
      }
      return (int)r;
    }
    case Kind::Product: {
      int bo = right_->order();
      return left_->add(a / bo, b / bo) * bo + right_->add(a % bo, b % bo);
    }
    case Kind::Table:
      return add_table_[a * order_ + b];
    case Kind::Corner:
      return pindex_[parent_->add(pelems_[a], pelems_[b])];
    case Kind::Quotient:
      return pindex_[prep_[parent_->add(pelems_[a], pelems_[b])]];
  }
  return 0;
}

int FiniteRing::mul(int a, int b) const {
  switch (kind_) {
    case Kind::Residue:
      return (int)(((long long)a * b) % res_n_);
    case Kind::PolyQuotient: {
      int p = pq_mod_.p;
      std::vector<long long> ca, cb;
      long long aa = a, bb = b;
      for (int i = 0; i < pq_mod_.deg(); ++i) {
        ca.push_back(aa % p);
        cb.push_back(bb % p);
        aa /= p;
        bb /= p;
      }
      FpPoly prod = fp_mod(fp_mul(fp_from_coeffs(p, ca), fp_from_coeffs(p, cb)),
                           pq_mod_);
      long long r = 0, pw = 1;
      for (int i = 0; i < pq_mod_.deg(); ++i) {
        r += (i <= prod.deg() ? prod.c[i] : 0) * pw;
        pw *= p;
      }
      return (int)r;
    }
    case Kind::Product: {
      int bo = right_->order();
      return left_->mul(a / bo, b / bo) * bo + right_->mul(a % bo, b % bo);
    }
    case Kind::Table:
      return mul_table_[a * order_ + b];
    case Kind::Corner:
      return pindex_[parent_->mul(pelems_[a], pelems_[b])];
    case Kind::Quotient:
      return pindex_[prep_[parent_->mul(pelems_[a], pelems_[b])]];
  }
  return 0;
}

int FiniteRing::neg(int a) const {
  switch (kind_) {
    case Kind::Residue:
      return a == 0 ? 0 : (int)(res_n_ - a);
    case Kind::PolyQuotient: {
      int p = pq_mod_.p;
      long long r = 0, pw = 1, aa = a;
      for (int i = 0; i < pq_mod_.deg(); ++i) {
        long long d = aa % p;
        r += (d ? p - d : 0) * pw;
        aa /= p;
        pw *= p;
      }
      return (int)r;
    }
    case Kind::Product: {
      int bo = right_->order();
      return left_->neg(a / bo) * bo + right_->neg(a % bo);
    }
    case Kind::Table: {
      for (int b = 0; b < order_; ++b)
        if (add_table_[a * order_ + b] == 0) return b;
      throw ValidationBug("table ring: element without additive inverse");
    }
    case Kind::Corner:
      return pindex_[parent_->neg(pelems_[a])];
    case Kind::Quotient:
      return pindex_[prep_[parent_->neg(pelems_[a])]];
  }
  return 0;
}

int FiniteRing::pow(int a, long e) const {
  int r = one_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int FiniteRing::from_int(long long k) const {
  if (kind_ == Kind::Residue) {
    long long v = k % res_n_;
    if (v < 0) v += res_n_;
    return (int)v;
  }
  int acc = 0;
  bool negate = k < 0;
  unsigned long long m = negate ? -(unsigned long long)k : (unsigned long long)k;
  m %= 2ull * order_;  // bounds the loop; the additive order of 1 divides |R|
  for (unsigned long long i = 0; i < m; ++i) acc = add(acc, one_);
  return negate ? neg(acc) : acc;
}

bool FiniteRing::is_unit(int a) const { return inverse(a).has_value(); }

std::optional<int> FiniteRing::inverse(int a) const {
  for (int b = 0; b < order_; ++b)
    if (mul(a, b) == one_) return b;
  return std::nullopt;
}

ElemSet FiniteRing::units() const {
  ElemSet s(order_);
  for (int a = 0; a < order_; ++a)
    if (is_unit(a)) s.set(a);
  return s;
}

std::string FiniteRing::elem_name(int a) const {
  switch (kind_) {
    case Kind::Residue:
      return std::to_string(a);
    case Kind::PolyQuotient: {
      int p = pq_mod_.p;
      std::vector<long long> cs;
      long long aa = a;
      for (int i = 0; i < pq_mod_.deg(); ++i) {
        cs.push_back(aa % p);
        aa /= p;
      }
      return fp_to_string(fp_from_coeffs(p, cs));
    }
    case Kind::Product: {
      int bo = right_->order();
      return "(" + left_->elem_name(a / bo) + "," + right_->elem_name(a % bo) +
             ")";
    }
    case Kind::Table:
      return "#" + std::to_string(a);
    case Kind::Corner:
    case Kind::Quotient:
      return parent_->elem_name(pelems_[a]);
  }
  return "?";
}

int FiniteRing::parse_elem(const std::string& text) const {
  std::string t;
  for (char ch : text)
    if (!std::isspace((unsigned char)ch)) t += ch;
  if (t.empty()) throw ParseError("empty element", 0);
  if (t[0] == '#') {
    int idx = std::stoi(t.substr(1));
    if (idx < 0 || idx >= order_) throw ParseError("element index out of range", 1);
    return idx;
  }
  if (kind_ == Kind::Product && t.front() == '(' && t.back() == ')') {
    // Split at the comma balancing parentheses.
    int depth = 0;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      else if (t[i] == ')') --depth;
      else if (t[i] == ',' && depth == 0) {
        int a = left_->parse_elem(t.substr(1, i - 1));
        int b = right_->parse_elem(t.substr(i + 1, t.size() - i - 2));
        return a * right_->order() + b;
      }
    }
    throw ParseError("malformed pair element", 0);
  }
  if (kind_ == Kind::PolyQuotient && t.find('x') != std::string::npos) {
    FpPoly f = fp_mod(fp_parse(t, pq_mod_.p), pq_mod_);
    long long r = 0, pw = 1;
    for (int i = 0; i < pq_mod_.deg(); ++i) {
      r += (i <= f.deg() ? f.c[i] : 0) * pw;
      pw *= pq_mod_.p;
    }
    return (int)r;
  }
  // Integer literal: canonical image of k.
  std::size_t pos = 0;
  long long k = std::stoll(t, &pos);
  if (pos != t.size()) throw ParseError("malformed element literal", pos);
  return from_int(k);
}

void FiniteRing::verify_axioms() const {
  const int n = order_;
  if (one_ == 0) throw PreconditionError(name_ + ": ring needs 1 != 0");
  for (int a = 0; a < n; ++a) {
    if (add(a, 0) != a) throw PreconditionError(name_ + ": 0 is not neutral");
    if (mul(a, one_) != a) throw PreconditionError(name_ + ": 1 is not neutral");
    bool has_neg = false;
    for (int b = 0; b < n; ++b)
      if (add(a, b) == 0) has_neg = true;
    if (!has_neg) throw PreconditionError(name_ + ": missing additive inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a))
        throw PreconditionError(name_ + ": addition not commutative");
      if (mul(a, b) != mul(b, a))
        throw PreconditionError(name_ + ": multiplication not commutative");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
          throw PreconditionError(name_ + ": addition not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw PreconditionError(name_ + ": multiplication not associative");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw PreconditionError(name_ + ": distributivity fails");
      }
}

int FiniteRing::pair_index(int a, int b) const {
  return a * right_->order() + b;
}

std::pair<int, int> FiniteRing::pair_split(int e) const {
  int bo = right_->order();
  return {e / bo, e % bo};
}

int FiniteRing::parent_to_self(int parent_elem) const {
  if (kind_ == Kind::Quotient) return pindex_[prep_[parent_elem]];
  int idx = pindex_[parent_elem];
  if (idx < 0) throw PreconditionError("element not in corner ring");
  return idx;
}

// ---------------------------------------------------------------------------
// Ring-expression parsing.

namespace {

// Split a ring expression at top-level " x " separators (never inside the
// parenthesized modulus of a polynomial quotient atom).
std::vector<std::string> split_product(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (depth == 0 && s[i] == ' ' && i + 2 < s.size() && s[i + 1] == 'x' &&
             s[i + 2] == ' ') {
      parts.push_back(s.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

RingPtr parse_atom(const std::string& atom, int cap) {
  if (atom.rfind("Z/", 0) == 0) {
    std::size_t pos = 0;
    long n = std::stol(atom.substr(2), &pos);
    if (pos + 2 != atom.size()) throw ParseError("malformed Z/n atom", pos + 2);
    return FiniteRing::residue(n, cap);
  }
  if (!atom.empty() && atom[0] == 'F') {
    std::size_t br = atom.find("[x]/(");
    if (br == std::string::npos || atom.back() != ')')
      throw ParseError("malformed F_p[x]/(f) atom", 0);
    long p = std::stol(atom.substr(1, br - 1));
    std::string poly = atom.substr(br + 5, atom.size() - br - 6);
    return FiniteRing::poly_quotient(fp_parse(poly, (int)p), cap);
  }
  if (atom.rfind("table:", 0) == 0)
    return read_table_ring(atom.substr(6));
  throw ParseError("unrecognized ring atom '" + atom + "'", 0);
}

}  // namespace

RingPtr parse_ring(const std::string& spec, int cap) {
  std::string s = spec;
  // Trim outer whitespace only; inner spaces are significant for products.
  while (!s.empty() && std::isspace((unsigned char)s.front())) s.erase(s.begin());
  while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
  if (s.empty()) throw ParseError("empty ring expression", 0);
  std::vector<std::string> parts = split_product(s);
  RingPtr r = parse_atom(parts[0], cap);
  for (std::size_t i = 1; i < parts.size(); ++i)
    r = FiniteRing::product(r, parse_atom(parts[i], cap), cap);
  return r;
}

std::string canonical_ring_spec(const std::string& spec) {
  return parse_ring(spec)->name();
}

RingPtr parse_table_ring_text(const std::string& body, const std::string& name,
                              int cap) {
  std::istringstream in(body);
  int n;
  if (!(in >> n)) throw ParseError("table ring: missing order", 0);
  if (n > cap)
    throw CapExceeded("table ring: order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  auto read_matrix = [&](const char* which) {
    std::vector<int> m(n * n);
    for (int& v : m)
      if (!(in >> v))
        throw ParseError(std::string("table ring: truncated ") + which, 0);
    return m;
  };
  std::vector<int> add = read_matrix("addition matrix");
  std::vector<int> mul = read_matrix("multiplication matrix");
  return FiniteRing::table(n, std::move(add), std::move(mul), name, false, cap);
}

RingPtr read_table_ring(const std::string& filename, int cap) {
  std::ifstream f(filename);
  if (!f) throw PreconditionError("cannot open table ring file " + filename);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_table_ring_text(ss.str(), "table:" + filename, cap);
}

// ---------------------------------------------------------------------------
// Homomorphisms.

RingHom::RingHom(RingPtr src, RingPtr dst, std::vector<int> map, bool verify)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
  if ((int)map_.size() != src_->order())
    throw PreconditionError("hom: map size mismatch");
  if (verify) {
    if (map_[src_->one()] != dst_->one())
      throw PreconditionError("hom: does not preserve 1");
    const int n = src_->order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (map_[src_->add(a, b)] != dst_->add(map_[a], map_[b]))
          throw PreconditionError("hom: does not preserve addition");
        if (map_[src_->mul(a, b)] != dst_->mul(map_[a], map_[b]))
          throw PreconditionError("hom: does not preserve multiplication");
      }
  }
}

bool RingHom::is_bijective() const {
  if (src_->order() != dst_->order()) return false;
  std::vector<char> hit(dst_->order(), 0);
  for (int v : map_) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

RingHom RingHom::identity(RingPtr r) {
  std::vector<int> m(r->order());
  std::iota(m.begin(), m.end(), 0);
  return RingHom(r, r, std::move(m), false);
}

RingHom RingHom::reduction(RingPtr zn, RingPtr zm) {
  if (zn->kind() != FiniteRing::Kind::Residue ||
      zm->kind() != FiniteRing::Kind::Residue)
    throw PreconditionError("reduction: both rings must be Z/n");
  long n = zn->residue_modulus(), m = zm->residue_modulus();
  if (n % m != 0) throw PreconditionError("reduction: target modulus must divide source");
  std::vector<int> map(n);
  for (long i = 0; i < n; ++i) map[i] = (int)(i % m);
  return RingHom(zn, zm, std::move(map));
}

RingHom RingHom::projection(RingPtr prod, int which) {
  if (prod->kind() != FiniteRing::Kind::Product)
    throw PreconditionError("projection: source must be a product");
  RingPtr dst = prod->factor(which);
  std::vector<int> map(prod->order());
  for (int e = 0; e < prod->order(); ++e) {
    auto [a, b] = prod->pair_split(e);
    map[e] = which == 0 ? a : b;
  }
  return RingHom(prod, dst, std::move(map));
}

RingHom RingHom::diagonal(RingPtr r, RingPtr rxr) {
  if (rxr->kind() != FiniteRing::Kind::Product)
    throw PreconditionError("diagonal: target must be a product");
  std::vector<int> map(r->order());
  for (int a = 0; a < r->order(); ++a) map[a] = rxr->pair_index(a, a);
  return RingHom(r, rxr, std::move(map));
}

RingHom RingHom::unit_image(RingPtr src, RingPtr dst) {
  std::vector<int> map(src->order());
  // Well defined only when every source element is a multiple of 1 (prime
  // rings Z/n); the constructor's exhaustive check rejects anything else.
  for (int a = 0; a < src->order(); ++a) map[a] = dst->from_int(a);
  return RingHom(src, dst, std::move(map));
}

RingHom RingHom::crt(RingPtr zn, RingPtr prod) {
  if (zn->kind() != FiniteRing::Kind::Residue ||
      prod->kind() != FiniteRing::Kind::Product)
    throw PreconditionError("crt: expects Z/n and a product of residue rings");
  std::vector<int> map(zn->order());
  for (int a = 0; a < zn->order(); ++a) map[a] = prod->from_int(a);
  return RingHom(zn, prod, std::move(map));
}

RingHom RingHom::compose(const RingHom& f, const RingHom& g) {
  if (f.target() != g.source())
    throw PreconditionError("compose: middle rings differ");
  std::vector<int> map(f.source()->order());
  for (int a = 0; a < f.source()->order(); ++a) map[a] = g(f(a));
  return RingHom(f.source(), g.target(), std::move(map), false);
}

}  // namespace palab
