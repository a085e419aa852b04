#include <doctest.h>

#include <deque>
#include <set>

#include "gsn/group.hpp"

using namespace gsn;

namespace {

// brute-force closure of a tuple inside an abelian handle
std::size_t abelian_closure_size(const HandlePtr& h, const std::vector<GroupElement>& tuple) {
  std::set<std::string> seen;
  std::deque<GroupElement> queue;
  GroupElement id = h->identity();
  seen.insert(h->key(id));
  queue.push_back(id);
  while (!queue.empty()) {
    GroupElement cur = queue.front();
    queue.pop_front();
    for (const auto& g : tuple) {
      for (const auto& e : {h->mul(cur, g), h->mul(cur, h->invert(g))}) {
        if (seen.insert(h->key(e)).second) queue.push_back(e);
      }
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("abelian arithmetic") {
  auto h = GroupHandle::abelian({5, 5});
  GroupElement a, b;
  a.residues = {1, 2};
  b.residues = {4, 3};
  CHECK(h->mul(a, b) == h->identity());
  CHECK(h->invert(a).residues == std::vector<long>{4, 3});
  CHECK(h->order() == 25);
}

TEST_CASE("abelian handle validation") {
  CHECK_THROWS_AS(GroupHandle::abelian({}), std::invalid_argument);
  CHECK_THROWS_AS(GroupHandle::abelian({4, 3}), std::invalid_argument);  // 3 does not divide 4
  CHECK_THROWS_AS(GroupHandle::abelian({5, 1}), std::invalid_argument);
  CHECK_NOTHROW(GroupHandle::abelian({6, 3}));
  CHECK_NOTHROW(GroupHandle::abelian({12, 6, 2}));
}

TEST_CASE("canonical key injective on (Z/3)^2") {
  auto h = GroupHandle::abelian({3, 3});
  std::set<std::string> keys;
  auto en = h->enumerate(100);
  CHECK(en.elements.size() == 9);
  for (const auto& e : en.elements) keys.insert(h->key(e));
  CHECK(keys.size() == 9);
}

TEST_CASE("descriptor parsing") {
  auto h = GroupHandle::parse("abelian:5,5");
  CHECK(h->order() == 25);
  auto q = GroupHandle::parse("quotient:p=3,depth=1");
  CHECK(q->order() == 3);
  CHECK(q->descriptor() == "quotient:p=3,depth=1");
  CHECK_THROWS_AS(GroupHandle::parse("ring:2"), std::invalid_argument);
  CHECK_THROWS_AS(GroupHandle::parse("quotient:p=4,depth=1"), std::invalid_argument);
  CHECK_THROWS_AS(GroupHandle::parse("nonsense"), std::invalid_argument);
}

TEST_CASE("quotient orders against enumeration oracle") {
  auto q1 = GroupHandle::quotient(3, 1);
  CHECK(q1->order() == 3);
  auto en1 = q1->enumerate(100);
  CHECK(en1.elements.size() == 3);

  auto q2 = GroupHandle::quotient(3, 2);
  auto en2 = q2->enumerate(1000000);
  CHECK_FALSE(en2.capped);
  CHECK(q2->order() == en2.elements.size());
}

TEST_CASE("enumerate caps") {
  auto q4 = GroupHandle::quotient(3, 4);
  auto res = q4->enumerate(10000);
  CHECK(res.capped);
  CHECK(res.visited == 10000);
  CHECK(res.elements.empty());
  CHECK(q4->order() > 10000);
}

TEST_CASE("tower compatibility of enumerated quotient elements") {
  auto q2 = GroupHandle::quotient(3, 2);
  auto q1 = GroupHandle::quotient(3, 1);
  for (const auto& e : q2->enumerate(1000000).elements) {
    Permutation down = project(*e.perm, 3, 1);
    CHECK(q1->chain().contains(down));
  }
}

TEST_CASE("is_generating on quotients") {
  auto q4 = GroupHandle::quotient(3, 4);
  CHECK(q4->is_generating(q4->generators()));
  CHECK_FALSE(q4->is_generating({q4->generators()[0]}));
  CHECK_THROWS_AS(q4->is_generating({}), std::invalid_argument);
}

TEST_CASE("abelian is_generating basics") {
  auto h = GroupHandle::abelian({5, 5});
  GroupElement e1, e2, e3;
  e1.residues = {1, 0};
  e2.residues = {0, 1};
  e3.residues = {2, 0};
  CHECK(h->is_generating({e1, e2}));
  CHECK_FALSE(h->is_generating({e1, e3}));
  CHECK(h->is_generating({e2, e1}));  // order of the tuple is immaterial
}

TEST_CASE("abelian is_generating agrees with brute force on (Z/m)^2") {
  for (long m : {2, 3, 4, 5, 6}) {
    auto h = GroupHandle::abelian({m, m});
    auto elems = h->enumerate(100).elements;
    REQUIRE(elems.size() == static_cast<std::size_t>(m * m));
    for (const auto& a : elems)
      for (const auto& b : elems) {
        bool brute = abelian_closure_size(h, {a, b}) == static_cast<std::size_t>(m * m);
        CHECK(h->is_generating({a, b}) == brute);
      }
  }
}
