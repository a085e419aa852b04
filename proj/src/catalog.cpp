#include "gsn/catalog.hpp"

#include <map>
#include <stdexcept>

namespace gsn {

namespace {

ElemPtr word_of(const char* s) {
  std::vector<Gen> letters;
  for (const char* c = s; *c; ++c) {
    switch (*c) {
      case 'x': letters.push_back(Gen::x); break;
      case 'X': letters.push_back(Gen::x_inv); break;
      case 'y': letters.push_back(Gen::y); break;
      case 'Y': letters.push_back(Gen::y_inv); break;
      default: throw std::logic_error("bad letter");
    }
  }
  return TreeElement::word(std::move(letters));
}

}  // namespace

ElemPtr z_element(int n, const TreeParams& params) {
  if (n < 1) throw std::invalid_argument("z(n) needs n >= 1");
  static std::map<std::pair<int, int>, ElemPtr> cache;
  auto key = std::make_pair(params.p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  ElemPtr e;
  if (n == 1) {
    e = word_of("XYxy");  // [x,y]
  } else {
    std::vector<ElemPtr> secs(params.p, TreeElement::identity());
    secs[params.p - 1] = z_element(n - 1, params);
    e = TreeElement::node(0, std::move(secs), params.p);
  }
  cache.emplace(key, e);
  return e;
}

ElemPtr x_yzn_commutator(int n, const TreeParams& params) {
  ElemPtr x = word_of("x");
  ElemPtr yzn = TreeElement::product({word_of("y"), z_element(n, params)});
  return commutator(x, yzn, params.p);
}

ElemPtr x_yzn_commutator_sections(int n, const TreeParams& params) {
  if (n < 2) throw std::invalid_argument("section form needs n >= 2");
  const int p = params.p;
  ElemPtr zprev = z_element(n - 1, params);
  std::vector<ElemPtr> secs(p, TreeElement::identity());
  secs[0] = TreeElement::product({inverse(zprev, p), word_of("Yx")});
  if (p == 3) {
    // the middle coordinates collapse: (z^{-1}y^{-1}x, x, x y z)
    secs[1] = word_of("x");
    secs[2] = TreeElement::product({word_of("xy"), zprev});
  } else {
    secs[1] = power(word_of("x"), p - 2, p);
    secs[2] = word_of("x");
    secs[p - 1] = TreeElement::product({word_of("y"), zprev});
  }
  return TreeElement::node(0, std::move(secs), p);
}

IdentityReport verify_identity(Evaluator& ev, const ElemPtr& lhs, const ElemPtr& rhs,
                               const std::vector<int>& depths) {
  IdentityReport r;
  for (int d : depths) {
    bool eq = ev.evaluate(lhs, d) == ev.evaluate(rhs, d);
    r.per_depth.emplace_back(d, eq);
    if (!eq) r.pass = false;
  }
  return r;
}

DistinctnessCheck check_distinct_types(Evaluator& ev, const std::string& label,
                                       const std::vector<NamedElement>& elems, int depth,
                                       bool pairwise) {
  DistinctnessCheck c;
  c.label = label;
  c.depth = depth;
  c.distinct = true;
  std::vector<CycleType> types;
  for (const auto& ne : elems) {
    c.names.push_back(ne.name);
    types.push_back(cycle_type(ev.evaluate(ne.element, depth)));
    c.types.push_back(format_cycle_type(types.back()));
  }
  for (std::size_t i = 0; i < types.size(); ++i)
    for (std::size_t j = i + 1; j < types.size(); ++j)
      if ((pairwise || i == 0) && types[i] == types[j]) c.distinct = false;
  return c;
}

AssumptionReport assumption_checks(Evaluator& ev) {
  if (ev.params().p != 3) throw std::invalid_argument("assumption checks are for p=3");
  const TreeParams& P = ev.params();
  AssumptionReport r;

  ElemPtr z2 = z_element(2, P);
  r.checks.push_back(check_distinct_types(
      ev, "level-3: x vs xy, y^-1 x",
      {{"x", word_of("x")}, {"xy", word_of("xy")}, {"Yx", word_of("Yx")}}, 3, false));
  r.checks.push_back(check_distinct_types(
      ev, "level-3: x vs x y z2, z2^-1 y^-1 x",
      {{"x", word_of("x")},
       {"xyz2", TreeElement::product({word_of("xy"), z2})},
       {"z2^-1Yx", TreeElement::product({inverse(z2, 3), word_of("Yx")})}},
      3, false));
  r.checks.push_back(check_distinct_types(
      ev, "level-4: y, y z1",
      {{"y", word_of("y")}, {"yz1", TreeElement::product({word_of("y"), z_element(1, P)})}}, 4));
  for (const auto& c : r.checks)
    if (!c.distinct) r.pass = false;
  return r;
}

ScenarioPair pair_x_y(const TreeParams&) { return {"(x, y)", word_of("x"), word_of("y")}; }

ScenarioPair pair_z1x_y(const TreeParams&) {
  return {"(x^-1 y^-1 x y x, y)", word_of("XYxyx"), word_of("y")};
}

ScenarioPair pair_x_yzn(int n, const TreeParams& params) {
  return {"(x, y z" + std::to_string(n) + ")", word_of("x"),
          TreeElement::product({word_of("y"), z_element(n, params)})};
}

}  // namespace gsn
