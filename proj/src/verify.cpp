#include "gsn/verify.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "gsn/catalog.hpp"
#include "gsn/nielsen.hpp"
#include "gsn/words.hpp"

namespace gsn {

std::string load_golden(const std::string& data_dir, const std::string& name) {
  std::string path = data_dir + "/golden/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

ScenarioResult check_golden_perm(Evaluator& ev, const std::string& name, const ElemPtr& elem,
                                 int depth, const std::string& data_dir,
                                 const std::string& file) {
  ScenarioResult r;
  r.name = name;
  Permutation got = ev.evaluate(elem, depth);
  Permutation want = parse_cycles(load_golden(data_dir, file), got.degree());
  r.pass = got == want;
  if (!r.pass)
    r.detail = "expected " + format_cycles(want) + "\n     got " + format_cycles(got);
  return r;
}

ScenarioResult check_identity(Evaluator& ev, const std::string& name, const ElemPtr& lhs,
                              const ElemPtr& rhs, const std::vector<int>& depths) {
  ScenarioResult r;
  r.name = name;
  IdentityReport rep = verify_identity(ev, lhs, rhs, depths);
  r.pass = rep.pass;
  if (!r.pass) {
    std::ostringstream os;
    for (auto [d, eq] : rep.per_depth)
      if (!eq) os << "depth " << d << ": unequal  ";
    r.detail = os.str();
  }
  return r;
}

}  // namespace

VerifySuite run_verify_suite(const std::string& data_dir) {
  VerifySuite suite;
  TreeParams p3{3};
  Evaluator ev(p3);

  auto w = [&](const char* s) { return parse_word(s, p3); };

  suite.results.push_back(
      check_golden_perm(ev, "pi(x) at level 4", w("x"), 4, data_dir, "pi_x.txt"));
  suite.results.push_back(
      check_golden_perm(ev, "pi(y) at level 4", w("y"), 4, data_dir, "pi_y.txt"));
  suite.results.push_back(check_golden_perm(ev, "pi(y x^-1 y^-1 x y) at level 4", w("y X Y x y"),
                                            4, data_dir, "example_yXYxy.txt"));

  {
    ScenarioResult r;
    r.name = "cycle type of the example differs from pi(y)";
    CycleType a = cycle_type(ev.evaluate(w("y X Y x y"), 4));
    CycleType b = cycle_type(ev.evaluate(w("y"), 4));
    r.pass = !(a == b);
    if (!r.pass) r.detail = "cycle types coincide: " + format_cycle_type(a);
    suite.results.push_back(r);
  }

  // z_1 = [x,y] = (y^-1 x, x, x y)
  {
    std::vector<ElemPtr> secs{w("Yx"), w("x"), w("xy")};
    suite.results.push_back(check_identity(ev, "z1 = (y^-1 x, x, x y)", z_element(1, p3),
                                           TreeElement::node(0, secs, 3), {1, 2, 3, 4}));
  }
  for (int n : {2, 3, 4}) {
    suite.results.push_back(check_identity(
        ev, "[x, y z" + std::to_string(n) + "] = (z" + std::to_string(n - 1) +
                "^-1 y^-1 x, x, x y z" + std::to_string(n - 1) + ")",
        x_yzn_commutator(n, p3), x_yzn_commutator_sections(n, p3), {1, 2, 3, 4}));
  }
  {
    TreeParams p5{5};
    Evaluator ev5(p5);
    suite.results.push_back(check_identity(
        ev5, "[x, y z3] section formula, p=5", x_yzn_commutator(3, p5),
        x_yzn_commutator_sections(3, p5), {1, 2, 3}));
  }

  suite.results.push_back(check_golden_perm(ev, "[u,v] for (u,v)=(x,y) at level 4",
                                            w("comm(x,y)"), 4, data_dir, "comm_x_y.txt"));
  suite.results.push_back(check_golden_perm(ev, "[u',v'] for (u',v')=(X Y x y x, y) at level 4",
                                            w("comm(X Y x y x, y)"), 4, data_dir,
                                            "comm_z1x_y.txt"));
  {
    ScenarioResult r;
    r.name = "certificate: (x,y) vs (x^-1 y^-1 x y x, y) distinct at level 4";
    Certificate c = certify_distinct(pair_x_y(p3), pair_z1x_y(p3), p3, 4);
    r.pass = c.distinct;
    if (!r.pass) r.detail = "cycle types coincide: " + c.type_a;
    suite.results.push_back(r);
  }

  {
    AssumptionReport rep = assumption_checks(ev);
    for (const auto& c : rep.checks) {
      ScenarioResult r;
      r.name = "distinct cycle types: " + c.label;
      r.pass = c.distinct;
      if (!r.pass) {
        std::ostringstream os;
        for (std::size_t i = 0; i < c.names.size(); ++i)
          os << c.names[i] << " -> " << c.types[i] << "  ";
        r.detail = os.str();
      }
      suite.results.push_back(r);
    }
  }

  for (const auto& r : suite.results)
    if (!r.pass) suite.pass = false;
  return suite;
}

std::string VerifySuite::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
    if (!r.pass && !r.detail.empty()) os << "      " << r.detail << "\n";
  }
  os << (pass ? "all scenarios passed" : "FAILURES present") << "\n";
  return os.str();
}

nlohmann::json VerifySuite::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["scenarios"] = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json s{{"name", r.name}, {"pass", r.pass}};
    if (!r.pass) s["detail"] = r.detail;
    j["scenarios"].push_back(s);
  }
  return j;
}

}  // namespace gsn
