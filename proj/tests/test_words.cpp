#include <doctest.h>

#include "gsn/words.hpp"

using namespace gsn;

namespace {
const TreeParams P3{3};
}

TEST_CASE("letters and whitespace") {
  Evaluator ev(P3);
  CHECK(ev.evaluate(parse_word("x", P3), 2) == ev.generator_perm(Gen::x, 2));
  CHECK(ev.evaluate(parse_word("X", P3), 2) == ev.generator_perm(Gen::x_inv, 2));
  CHECK(ev.evaluate(parse_word(" y  X \tY x y ", P3), 3) ==
        ev.evaluate(reduce({Gen::y, Gen::x_inv, Gen::y_inv, Gen::x, Gen::y}), 3));
}

TEST_CASE("powers and grouping") {
  Evaluator ev(P3);
  CHECK(ev.evaluate(parse_word("x^3", P3), 3).is_identity());
  CHECK(ev.evaluate(parse_word("x^-1", P3), 3) == ev.generator_perm(Gen::x_inv, 3));
  CHECK(ev.evaluate(parse_word("(xy)^-1", P3), 3) ==
        ev.evaluate(reduce({Gen::y_inv, Gen::x_inv}), 3));
  CHECK(ev.evaluate(parse_word("x^0", P3), 3).is_identity());
  CHECK(ev.evaluate(parse_word("(x y)^2", P3), 3) ==
        ev.evaluate(reduce({Gen::x, Gen::y, Gen::x, Gen::y}), 3));
}

TEST_CASE("comm and z") {
  Evaluator ev(P3);
  CHECK(ev.evaluate(parse_word("comm(x,y)", P3), 4) ==
        ev.evaluate(reduce({Gen::x_inv, Gen::y_inv, Gen::x, Gen::y}), 4));
  CHECK(ev.evaluate(parse_word("z(1)", P3), 4) == ev.evaluate(parse_word("comm(x,y)", P3), 4));
  // z(2) stabilizes level 2
  CHECK(ev.evaluate(parse_word("z(2)", P3), 2).is_identity());
  CHECK(ev.evaluate(parse_word("y z(3)", P3), 3) == ev.evaluate(parse_word("y", P3), 3));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_word("", P3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("q", P3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("(xy", P3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("comm(x)", P3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("z(0)", P3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x^", P3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x)", P3), std::invalid_argument);
}
