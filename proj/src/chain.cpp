#include "gsn/chain.hpp"

#include <deque>
#include <stdexcept>

namespace gsn {

namespace {

int min_moved(const Permutation& g) {
  for (int v = 0; v < g.degree(); ++v)
    if (g(v) != v) return v;
  return -1;
}

}  // namespace

StabilizerChain StabilizerChain::build(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  StabilizerChain c;
  c.degree_ = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != c.degree_) throw std::invalid_argument("degree mismatch in generators");
    c.sift_in(0, g);
  }
  return c;
}

void StabilizerChain::update_level(std::size_t l) {
  Level& lev = levels_[l];
  lev.orbit.clear();
  lev.transversal.clear();
  lev.orbit.push_back(lev.base_point);
  lev.transversal.emplace(lev.base_point, Permutation(degree_));
  std::deque<int> queue{lev.base_point};
  while (!queue.empty()) {
    int pt = queue.front();
    queue.pop_front();
    for (const auto& g : lev.gens) {
      int to = g(pt);
      if (!lev.transversal.count(to)) {
        lev.transversal.emplace(to, mul(lev.transversal.at(pt), g));
        lev.orbit.push_back(to);
        queue.push_back(to);
      }
    }
  }
  // Schreier generators of the stabilizer of the base point.
  for (std::size_t oi = 0; oi < levels_[l].orbit.size(); ++oi) {
    int pt = levels_[l].orbit[oi];
    for (std::size_t gi = 0; gi < levels_[l].gens.size(); ++gi) {
      const Permutation g = levels_[l].gens[gi];
      const Permutation t = levels_[l].transversal.at(pt);
      const Permutation t2 = levels_[l].transversal.at(g(pt));
      Permutation s = mul(mul(t, g), inverse(t2));
      sift_in(l + 1, std::move(s));
      // sifting may append generators at this level? It cannot: sift_in
      // only touches levels >= l+1, but it may invalidate the references
      // above, hence the copies.
    }
  }
}

void StabilizerChain::sift_in(std::size_t l, Permutation g) {
  // peel off known cosets until the residue escapes the chain
  std::size_t j = l;
  while (!g.is_identity() && j < levels_.size()) {
    auto it = levels_[j].transversal.find(g(levels_[j].base_point));
    if (it == levels_[j].transversal.end()) break;
    g = mul(g, inverse(it->second));
    ++j;
  }
  if (g.is_identity()) return;
  if (j == levels_.size()) {
    Level lev;
    lev.base_point = min_moved(g);
    levels_.push_back(std::move(lev));
  }
  // the residue fixes every base above level j, so it is a strong generator
  // for each level from the entry level down to j; earlier orbits may grow
  for (std::size_t m = l; m <= j; ++m) levels_[m].gens.push_back(g);
  for (std::size_t m = j + 1; m-- > l;) update_level(m);
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& lev : levels_) n *= static_cast<unsigned long>(lev.orbit.size());
  return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in contains");
  Permutation g = p;
  for (const auto& lev : levels_) {
    if (g.is_identity()) return true;
    auto it = lev.transversal.find(g(lev.base_point));
    if (it == lev.transversal.end()) return false;
    g = mul(g, inverse(it->second));
  }
  return g.is_identity();
}

}  // namespace gsn
