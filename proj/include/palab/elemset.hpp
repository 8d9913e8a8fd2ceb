#ifndef PALAB_ELEMSET_HPP
#define PALAB_ELEMSET_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace palab {

// Dense subset of {0, ..., n-1}. Used for materialized ideals, multiplicative
// sets and subrings of a finite ring. Immutable use after construction keeps
// concurrent reads safe.
class ElemSet {
public:
  ElemSet() = default;
  explicit ElemSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }

  bool subset_of(const ElemSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  ElemSet& operator|=(const ElemSet& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  bool operator==(const ElemSet&) const = default;

  // Total order; ties all witness selection to a fixed, replayable choice.
  // Compares the sorted element lists lexicographically.
  std::strong_ordering operator<=>(const ElemSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t diff = w_[k] ^ o.w_[k];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        // The side owning the lowest differing element sorts first.
        return (w_[k] & low) ? std::strong_ordering::less
                             : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  // Smallest member, -1 when empty.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }

  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace palab

#endif
