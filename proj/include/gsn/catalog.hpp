#ifndef GSN_CATALOG_HPP
#define GSN_CATALOG_HPP

#include <string>
#include <vector>

#include "gsn/tree.hpp"

namespace gsn {

struct NamedElement {
  std::string name;
  ElemPtr element;
};

struct ScenarioPair {
  std::string label;
  ElemPtr u;
  ElemPtr v;
};

// z(1) = [x,y] as a word; z(n) = (1,...,1, z(n-1)) with the nontrivial
// section in the last coordinate. Children are shared across calls.
ElemPtr z_element(int n, const TreeParams& params);

// [x, y z(n)].
ElemPtr x_yzn_commutator(int n, const TreeParams& params);
// Wreath form (z_{n-1}^{-1} y^{-1} x, x^{p-2}, x, 1,...,1, y z_{n-1});
// for p=3 this is (z_{n-1}^{-1} y^{-1} x, x, x y z_{n-1}).
ElemPtr x_yzn_commutator_sections(int n, const TreeParams& params);

struct IdentityReport {
  std::vector<std::pair<int, bool>> per_depth;  // (depth, equal)
  bool pass = true;
};
IdentityReport verify_identity(Evaluator& ev, const ElemPtr& lhs, const ElemPtr& rhs,
                               const std::vector<int>& depths);

// Pairwise cycle-type distinctness of a set of elements at one level.
struct DistinctnessCheck {
  std::string label;
  int depth;
  std::vector<std::string> names;
  std::vector<std::string> types;
  bool distinct;
};
// With pairwise=false only the first element must differ from every other
// one; later elements may share a type among themselves.
DistinctnessCheck check_distinct_types(Evaluator& ev, const std::string& label,
                                       const std::vector<NamedElement>& elems, int depth,
                                       bool pairwise = true);

struct AssumptionReport {
  std::vector<DistinctnessCheck> checks;
  bool pass = true;
};
// The level-3 and level-4 cycle-type separations backing the conjugacy
// arguments for p=3.
AssumptionReport assumption_checks(Evaluator& ev);

// The generating pairs used in the separation scenarios.
ScenarioPair pair_x_y(const TreeParams& params);
ScenarioPair pair_z1x_y(const TreeParams& params);   // (x^{-1}y^{-1}xy * x, y)
ScenarioPair pair_x_yzn(int n, const TreeParams& params);

}  // namespace gsn

#endif
