#include <doctest.h>

#include <random>

#include "gsn/nielsen.hpp"
#include "gsn/words.hpp"

using namespace gsn;

namespace {

TupleVertex abelian_pair(const HandlePtr& h, std::vector<long> a, std::vector<long> b) {
  GroupElement ea, eb;
  ea.residues = std::move(a);
  eb.residues = std::move(b);
  return make_vertex(h, {ea, eb});
}

TupleVertex random_quotient_pair(const HandlePtr& h, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> len(1, 20);
  auto rand_elem = [&] {
    Evaluator ev(TreeParams{h->p()});
    std::vector<Gen> letters;
    int L = len(rng);
    for (int i = 0; i < L; ++i) letters.push_back(static_cast<Gen>(pick(rng)));
    GroupElement e;
    e.perm = ev.evaluate(reduce(letters), h->depth());
    return e;
  };
  return make_vertex(h, {rand_elem(), rand_elem()});
}

}  // namespace

TEST_CASE("elementary moves") {
  auto h = GroupHandle::abelian({5, 5});
  TupleVertex t = abelian_pair(h, {1, 0}, {0, 1});

  MoveSet ms = MoveSet::nielsen(2);
  CHECK(ms.moves().size() == 6);

  Move r12{Move::Type::RightMul, 0, 1, +1, 0};
  TupleVertex t2 = apply_move(h, r12, t);
  CHECK(t2.elements[0].residues == std::vector<long>{1, 1});
  CHECK(t2.elements[1].residues == std::vector<long>{0, 1});

  Move r12m{Move::Type::RightMul, 0, 1, -1, 0};
  CHECK(apply_move(h, r12m, t2).key == t.key);

  Move i1{Move::Type::Invert, 0, 0, +1, 0};
  CHECK(apply_move(h, i1, apply_move(h, i1, t)).key == t.key);
}

TEST_CASE("every move has an inverse in its move set") {
  auto h = GroupHandle::quotient(3, 2);
  std::mt19937 rng(5);
  for (const MoveSet& ms : {MoveSet::nielsen(2), MoveSet::andrews_curtis(2, {})}) {
    for (int trial = 0; trial < 20; ++trial) {
      TupleVertex t = random_quotient_pair(h, rng);
      for (const TupleVertex& nb : neighbors(h, t, ms)) {
        bool reachable_back = false;
        for (const TupleVertex& back : neighbors(h, nb, ms))
          if (back.key == t.key) reachable_back = true;
        CHECK(reachable_back);
      }
    }
  }
}

TEST_CASE("neighbors of a generating tuple are generating") {
  // in a finite p-group normal generation equals generation, so even the
  // conjugation moves preserve the property
  auto h = GroupHandle::quotient(3, 2);
  std::mt19937 rng(17);
  for (const MoveSet& ms : {MoveSet::nielsen(2), MoveSet::andrews_curtis(2, {})}) {
    TupleVertex t = make_vertex(h, h->generators());
    REQUIRE(h->is_generating(t.elements));
    std::uniform_int_distribution<std::size_t> pick(0, ms.moves().size() - 1);
    for (int step = 0; step < 60; ++step) {
      auto nbs = neighbors(h, t, ms);
      for (const auto& nb : nbs) CHECK(h->is_generating(nb.elements));
      t = nbs[pick(rng)];
    }
  }
}

TEST_CASE("abelian component counts match the classification") {
  MoveSet ms2 = MoveSet::nielsen(2);
  CHECK(explore_exhaustive(GroupHandle::abelian({3, 3}), 2, ms2).components.size() == 1);
  CHECK(explore_exhaustive(GroupHandle::abelian({5, 5}), 2, ms2).components.size() == 2);
  CHECK(explore_exhaustive(GroupHandle::abelian({7, 7}), 2, ms2).components.size() == 3);
  MoveSet ms3 = MoveSet::nielsen(3);
  CHECK(explore_exhaustive(GroupHandle::abelian({5, 5}), 3, ms3).components.size() == 1);
}

TEST_CASE("exhaustive report structure") {
  auto h = GroupHandle::abelian({5, 5});
  ComponentReport r = explore_exhaustive(h, 2, MoveSet::nielsen(2));
  CHECK(r.verdict == "exact");
  std::size_t sum = 0;
  for (const auto& c : r.components) sum += c.size;
  CHECK(sum == r.total_generating);
  // |GL(2,5)| = (25-1)(25-5)
  CHECK(r.total_generating == 480);
}

TEST_CASE("parallel explorer matches the serial reference") {
  auto h = GroupHandle::abelian({7, 7});
  MoveSet ms = MoveSet::nielsen(2);
  ComponentReport serial = explore_exhaustive(h, 2, ms, 1000000, 1);
  ComponentReport parallel = explore_exhaustive(h, 2, ms, 1000000, 4);
  REQUIRE(serial.components.size() == parallel.components.size());
  CHECK(serial.total_generating == parallel.total_generating);
  for (std::size_t i = 0; i < serial.components.size(); ++i) {
    CHECK(serial.components[i].size == parallel.components[i].size);
    CHECK(serial.components[i].representative.key == parallel.components[i].representative.key);
  }

  auto q = GroupHandle::quotient(3, 2);
  ComponentReport qs = explore_exhaustive(q, 2, ms, 1000000, 1);
  ComponentReport qp = explore_exhaustive(q, 2, ms, 1000000, 4);
  CHECK(qs.total_generating == qp.total_generating);
  CHECK(qs.components.size() == qp.components.size());
}

TEST_CASE("exhaustive enumeration cap propagates") {
  auto q4 = GroupHandle::quotient(3, 4);
  CHECK_THROWS_AS(explore_exhaustive(q4, 2, MoveSet::nielsen(2), 10000),
                  std::runtime_error);
}

TEST_CASE("fingerprint invariance under single Nielsen moves") {
  auto h = GroupHandle::quotient(3, 3);
  MoveSet ms = MoveSet::nielsen(2);
  std::mt19937 rng(71);
  std::uniform_int_distribution<std::size_t> pick(0, ms.moves().size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    TupleVertex t = random_quotient_pair(h, rng);
    CycleType fp = fingerprint(h, t);
    TupleVertex nb = apply_move(h, ms.moves()[pick(rng)], t);
    CHECK(fingerprint(h, nb) == fp);
  }
}

TEST_CASE("fingerprint preconditions") {
  auto ab = GroupHandle::abelian({5, 5});
  CHECK_THROWS_AS(fingerprint(ab, abelian_pair(ab, {1, 0}, {0, 1})), std::invalid_argument);
  auto q = GroupHandle::quotient(3, 2);
  CHECK_THROWS_AS(fingerprint(q, make_vertex(q, {q->generators()[0]})), std::invalid_argument);
}

TEST_CASE("seeded exploration certifies the separation") {
  TreeParams p3{3};
  auto h = GroupHandle::quotient(3, 4);
  Evaluator ev(p3);
  auto as_elem = [&](const ElemPtr& e) {
    GroupElement g;
    g.perm = ev.evaluate(e, 4);
    return g;
  };
  ScenarioPair A = pair_x_y(p3), B = pair_z1x_y(p3);
  TupleVertex sa = make_vertex(h, {as_elem(A.u), as_elem(A.v)});
  TupleVertex sb = make_vertex(h, {as_elem(B.u), as_elem(B.v)});
  ComponentReport r = explore_seeded(h, {sa, sb}, MoveSet::nielsen(2), 10000);
  CHECK(r.verdict == "certified-distinct");
  CHECK(r.components.size() == 2);

  // two seeds one move apart merge
  TupleVertex sa2 = apply_move(h, Move{Move::Type::Invert, 0, 0, +1, 0}, sa);
  ComponentReport m = explore_seeded(h, {sa, sa2}, MoveSet::nielsen(2), 500);
  CHECK(m.verdict == "merged");

  ComponentReport one = explore_seeded(h, {sa}, MoveSet::nielsen(2), 100);
  CHECK(one.components.size() == 1);
  CHECK(one.verdict == "exact-for-reachability");

  GroupElement id = h->identity();
  CHECK_THROWS_AS(explore_seeded(h, {make_vertex(h, {id, id})}, MoveSet::nielsen(2), 10),
                  std::invalid_argument);
}

TEST_CASE("separation depth of the certified pairs") {
  TreeParams p3{3};
  auto d = separation_depth(pair_x_y(p3), pair_z1x_y(p3), p3, 4);
  REQUIRE(d.has_value());
  CHECK(*d <= 4);
  CHECK_FALSE(separation_depth(pair_x_y(p3), pair_x_y(p3), p3, 5).has_value());
}

TEST_CASE("certificates") {
  TreeParams p3{3};
  Certificate c = certify_distinct(pair_x_y(p3), pair_z1x_y(p3), p3, 4);
  CHECK(c.distinct);
  CHECK(c.type_a != c.type_b);
  // the certificate text embeds re-checkable cycle text
  Permutation pa = parse_cycles(c.comm_a, 81);
  CHECK(format_cycle_type(cycle_type(pa)) == c.type_a);

  Certificate same = certify_distinct(pair_x_y(p3), pair_x_y(p3), p3, 4);
  CHECK_FALSE(same.distinct);

  // swapped pair: commutators are inverse, same cycle type
  ScenarioPair swapped{"(y, x)", parse_word("y", p3), parse_word("x", p3)};
  Certificate sw = certify_distinct(pair_x_y(p3), swapped, p3, 4);
  CHECK_FALSE(sw.distinct);
}
