#ifndef GSN_PERM_HPP
#define GSN_PERM_HPP

#include <string>
#include <utility>
#include <vector>

namespace gsn {

// Permutation of {1..N}. Points are 0-based internally; all text I/O is
// 1-based, matching the usual disjoint-cycle notation.
class Permutation {
public:
  explicit Permutation(int degree);                 // identity
  explicit Permutation(std::vector<int> images);    // 0-based image table

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int v) const { return img_[v]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> img_;
};

// compose(a,b): b applied first, result(v) = a(b(v)).
Permutation compose(const Permutation& a, const Permutation& b);
// mul(a,b): a applied first. This is the group product used for words.
Permutation mul(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
Permutation power(const Permutation& a, long e);

// Multiset of cycle lengths, descending, plus fixed point count.
struct CycleType {
  std::vector<std::pair<int, int>> cycles;  // (length >= 2, multiplicity)
  int fixed_points = 0;
  bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Permutation& a);
std::string format_cycle_type(const CycleType& t);  // e.g. "9^4 3^15"

// Injective key for permutations of a fixed degree; key length depends
// only on the degree.
std::string canonical_key(const Permutation& a);

// Disjoint-cycle text, 1-based: "(1,28,55)(2,29,56)". Omitted points are
// fixed. Throws std::invalid_argument on malformed text, repeated points
// or points out of range.
Permutation parse_cycles(const std::string& text, int degree);

// Cycles ordered by smallest moved point, each rotated to start at its
// smallest element. Identity prints as "()".
std::string format_cycles(const Permutation& a);

}  // namespace gsn

#endif
