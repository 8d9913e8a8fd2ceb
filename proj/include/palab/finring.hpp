#ifndef PALAB_FINRING_HPP
#define PALAB_FINRING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "palab/elemset.hpp"
#include "palab/fpoly.hpp"

namespace palab {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

inline constexpr int kDefaultRingCap = 4096;
inline constexpr int kTableRingCap = 16;

// A fully materialized finite commutative ring with 1 != 0. Elements are the
// indices 0..order-1; index 0 is always zero. The construction tree is kept
// so that element naming and canonical ordering follow the constructor
// expression. Immutable; all operations are pure.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
  enum class Kind { Residue, PolyQuotient, Product, Table, Corner, Quotient };

  static RingPtr residue(long n, int cap = kDefaultRingCap);       // Z/n
  static RingPtr poly_quotient(FpPoly modulus,
                               int cap = kDefaultRingCap);         // F_p[x]/(f)
  static RingPtr product(RingPtr a, RingPtr b, int cap = kDefaultRingCap);
  // Explicit operation tables; axioms are verified unless `trusted`.
  static RingPtr table(int order, std::vector<int> add, std::vector<int> mul,
                       std::string name, bool trusted = false,
                       int cap = kTableRingCap);
  // Corner ring e*parent for an idempotent e, identity e. Internal use via
  // localize(); elements are the distinct values e*r in ascending index order.
  static RingPtr corner(RingPtr parent, int idempotent);
  // Quotient parent/I by coset representatives. `rep` maps each parent
  // element to the smallest member of its coset.
  static RingPtr quotient_of(RingPtr parent, std::vector<int> rep,
                             std::string name);

  Kind kind() const { return kind_; }
  int order() const { return order_; }
  int zero() const { return 0; }
  int one() const { return one_; }

  int add(int a, int b) const;
  int mul(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int pow(int a, long e) const;

  // Canonical image of an integer, k |-> k*1.
  int from_int(long long k) const;

  bool is_unit(int a) const;
  std::optional<int> inverse(int a) const;
  ElemSet units() const;

  std::string elem_name(int a) const;
  // Accepts integers (canonical image), "#k" raw indices, "(a,b)" pairs for
  // products and polynomials in x for polynomial quotient rings.
  int parse_elem(const std::string& text) const;

  const std::string& name() const { return name_; }

  // Exhaustive commutative-ring axiom check; cost is cubic in the order.
  void verify_axioms() const;

  // Construction details, used by homomorphism builders.
  long residue_modulus() const { return res_n_; }
  const FpPoly& quotient_modulus() const { return pq_mod_; }
  RingPtr factor(int i) const { return i == 0 ? left_ : right_; }
  RingPtr parent() const { return parent_; }
  // Corner: element list into the parent. Quotient: coset reps.
  const std::vector<int>& parent_elems() const { return pelems_; }
  int pair_index(int a, int b) const;            // Product encode
  std::pair<int, int> pair_split(int e) const;   // Product decode
  int parent_to_self(int parent_elem) const;     // Corner/Quotient projection

private:
  FiniteRing() = default;

  Kind kind_ = Kind::Residue;
  int order_ = 0;
  int one_ = 1;
  std::string name_;

  long res_n_ = 0;       // Residue
  FpPoly pq_mod_;        // PolyQuotient
  RingPtr left_, right_; // Product
  std::vector<int> add_table_, mul_table_;  // Table
  RingPtr parent_;       // Corner / Quotient
  std::vector<int> pelems_;   // Corner: members; Quotient: coset reps (sorted)
  std::vector<int> pindex_;   // parent element -> own index (or via rep)
  std::vector<int> prep_;     // Quotient: parent element -> coset rep
};

// Ring-expression grammar:
//   ring := atom | ring " x " ring
//   atom := "Z/" nat | "F" prime "[x]/(" poly ")" | "table:" filename
std::string canonical_ring_spec(const std::string& spec);
RingPtr parse_ring(const std::string& spec, int cap = kDefaultRingCap);

// Table-ring file format: order n, then the n*n addition and multiplication
// matrices row-major, whitespace separated; element 0 is zero, element 1 one.
RingPtr read_table_ring(const std::string& filename, int cap = kTableRingCap);
RingPtr parse_table_ring_text(const std::string& body, const std::string& name,
                              int cap = kTableRingCap);

// A unital ring homomorphism between finite rings, stored as the full value
// table. Verified exhaustively at construction.
class RingHom {
public:
  RingHom(RingPtr src, RingPtr dst, std::vector<int> map, bool verify = true);

  const RingPtr& source() const { return src_; }
  const RingPtr& target() const { return dst_; }
  int operator()(int a) const { return map_[a]; }
  bool is_bijective() const;

  static RingHom identity(RingPtr r);
  static RingHom reduction(RingPtr zn, RingPtr zm);   // Z/n -> Z/m, m | n
  static RingHom projection(RingPtr prod, int which); // product components
  static RingHom diagonal(RingPtr r, RingPtr rxr);    // r -> r x r
  // k*1 |-> k*1; exists iff characteristics are compatible (verified).
  static RingHom unit_image(RingPtr src, RingPtr dst);
  static RingHom crt(RingPtr zn, RingPtr prod);       // Z/ab -> Z/a x Z/b
  static RingHom compose(const RingHom& f, const RingHom& g);  // g after f

private:
  RingPtr src_, dst_;
  std::vector<int> map_;
};

}  // namespace palab

#endif
