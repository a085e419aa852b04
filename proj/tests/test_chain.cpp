#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "gsn/chain.hpp"
#include "gsn/tree.hpp"

using namespace gsn;

namespace {

// brute-force closure, the oracle for order and membership
std::set<std::vector<int>> closure(const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen;
  std::deque<Permutation> queue;
  Permutation id(gens.front().degree());
  seen.insert(id.images());
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation next = mul(cur, g);
      if (seen.insert(next.images()).second) queue.push_back(next);
    }
  }
  return seen;
}

std::vector<Permutation> full_symmetric(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("symmetric group order") {
  std::vector<Permutation> gens{parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)};
  auto chain = StabilizerChain::build(gens);
  CHECK(chain.order() == 24);
  CHECK(chain.contains(parse_cycles("(1,3)(2,4)", 4)));
}

TEST_CASE("membership obstructions") {
  auto chain = StabilizerChain::build({parse_cycles("(1,2,3)", 3)});
  CHECK(chain.order() == 3);
  CHECK(chain.contains(Permutation(3)));
  CHECK_FALSE(chain.contains(parse_cycles("(1,2)", 3)));
  CHECK_THROWS_AS(chain.contains(Permutation(4)), std::invalid_argument);
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(StabilizerChain::build({}), std::invalid_argument);
  CHECK_THROWS_AS(StabilizerChain::build({Permutation(3), Permutation(4)}),
                  std::invalid_argument);
}

TEST_CASE("chain construction is deterministic") {
  std::vector<Permutation> gens{parse_cycles("(1,2,3)", 5), parse_cycles("(3,4,5)", 5)};
  auto a = StabilizerChain::build(gens);
  auto b = StabilizerChain::build(gens);
  CHECK(a.order() == b.order());
  REQUIRE(a.levels().size() == b.levels().size());
  for (std::size_t i = 0; i < a.levels().size(); ++i)
    CHECK(a.levels()[i].base_point == b.levels()[i].base_point);
}

TEST_CASE("chain invariants hold") {
  std::vector<Permutation> gens{parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)};
  auto chain = StabilizerChain::build(gens);
  BigInt prod = 1;
  for (std::size_t i = 0; i < chain.levels().size(); ++i) {
    const auto& lev = chain.levels()[i];
    prod *= static_cast<unsigned long>(lev.transversal.size());
    for (const auto& g : lev.gens)
      for (std::size_t j = 0; j < i; ++j)
        CHECK(g(chain.levels()[j].base_point) == chain.levels()[j].base_point);
  }
  CHECK(prod == chain.order());
}

TEST_CASE("order and membership match brute force on subgroups of Sym(4)") {
  // every ordered pair: the chain outcome may depend on the presentation,
  // not only on the subgroup, so no dedup here
  auto s4 = full_symmetric(4);
  for (const auto& a : s4) {
    for (const auto& b : s4) {
      if (a.is_identity() && b.is_identity()) continue;
      std::vector<Permutation> gens{a, b};
      auto elems = closure(gens);
      auto chain = StabilizerChain::build(gens);
      CHECK(chain.order() == elems.size());
      for (const auto& p : s4)
        CHECK(chain.contains(p) == (elems.count(p.images()) > 0));
    }
  }
}

TEST_CASE("order matches brute force on 2-generated subgroups of Sym(5)") {
  auto s5 = full_symmetric(5);
  std::size_t tested = 0;
  for (std::size_t i = 0; i < s5.size(); i += 7) {
    for (std::size_t j = i; j < s5.size(); j += 13) {
      std::vector<Permutation> gens{s5[i], s5[j]};
      auto chain = StabilizerChain::build(gens);
      CHECK(chain.order() == closure(gens).size());
      ++tested;
    }
  }
  CHECK(tested > 10);
}

TEST_CASE("partial sift keeps the earlier orbits complete") {
  // the second generator sifts through level 0 and leaves a residue that
  // must still enlarge the level-0 orbit
  Permutation a = parse_cycles("(1,4,7)(2,5,8)(3,6,9)", 9);
  Permutation b = parse_cycles("(1,7,5)(2,8,6)(3,9,4)", 9);
  auto chain = StabilizerChain::build({a, b});
  CHECK(chain.order() == 27);
  CHECK(chain.order() == closure({a, b}).size());
}

TEST_CASE("quotient generator chain orders") {
  Evaluator ev(TreeParams{3});
  auto chain1 = StabilizerChain::build({ev.generator_perm(Gen::x, 1)});
  CHECK(chain1.order() == 3);

  std::vector<Permutation> gens2{ev.generator_perm(Gen::x, 2), ev.generator_perm(Gen::y, 2)};
  auto chain2 = StabilizerChain::build(gens2);
  CHECK(chain2.order() == closure(gens2).size());
}
