#ifndef GSN_CHAIN_HPP
#define GSN_CHAIN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <unordered_map>
#include <vector>

#include "gsn/perm.hpp"

namespace gsn {

using BigInt = boost::multiprecision::cpp_int;

// Base-and-strong-generating-set structure (deterministic Schreier-Sims).
// Base points are chosen as the smallest moved point each time a new
// level is needed, so identical generator lists give identical chains.
class StabilizerChain {
public:
  struct Level {
    int base_point;                                // 0-based
    std::vector<Permutation> gens;                 // fix all earlier base points
    std::vector<int> orbit;                        // BFS discovery order
    std::unordered_map<int, Permutation> transversal;  // point -> rep, rep maps base->point
  };

  // Throws std::invalid_argument on an empty list or mixed degrees.
  static StabilizerChain build(const std::vector<Permutation>& generators);

  BigInt order() const;
  bool contains(const Permutation& p) const;  // sifting; throws on degree mismatch

  int degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

private:
  int degree_ = 0;
  std::vector<Level> levels_;

  void update_level(std::size_t l);
  void sift_in(std::size_t l, Permutation g);
};

}  // namespace gsn

#endif
