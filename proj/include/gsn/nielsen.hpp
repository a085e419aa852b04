#ifndef GSN_NIELSEN_HPP
#define GSN_NIELSEN_HPP

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gsn/catalog.hpp"
#include "gsn/group.hpp"

namespace gsn {

// One elementary move on k-tuples.
struct Move {
  enum class Type { RightMul, Invert, Conjugate };
  Type type;
  int i = 0;         // target slot
  int j = 0;         // source slot (RightMul)
  int sign = +1;     // RightMul exponent
  int conj = 0;      // conjugator index (Conjugate)
};

// R_ij^{+-} and I_j, optionally extended by AC_{i,w} conjugations; closed
// under inverses by construction. Move order is fixed: all R^{+}, all
// R^{-}, all I, then AC moves by (slot, conjugator index).
class MoveSet {
public:
  static MoveSet nielsen(int k);
  static MoveSet andrews_curtis(int k, std::vector<GeneratorWord> conjugators);

  int arity() const { return k_; }
  bool has_conjugations() const { return !conjugators_.empty(); }
  const std::vector<Move>& moves() const { return moves_; }
  const std::vector<GeneratorWord>& conjugators() const { return conjugators_; }
  std::string describe() const;

private:
  int k_ = 0;
  std::vector<Move> moves_;
  std::vector<GeneratorWord> conjugators_;
};

struct TupleVertex {
  std::vector<GroupElement> elements;
  std::string key;  // concatenated canonical keys
};
TupleVertex make_vertex(const HandlePtr& h, std::vector<GroupElement> elements);

TupleVertex apply_move(const HandlePtr& h, const Move& m, const TupleVertex& t);
std::vector<TupleVertex> neighbors(const HandlePtr& h, const TupleVertex& t,
                                   const MoveSet& ms);

// Cycle type of the commutator of a pair; constant on Nielsen components
// of quotient groups. Throws on wrong arity or abelian handles.
CycleType fingerprint(const HandlePtr& h, const TupleVertex& t);

struct ComponentInfo {
  std::size_t size = 0;       // exact size (exhaustive) or visited count (seeded)
  TupleVertex representative;
  std::optional<CycleType> fp;
};

struct ComponentReport {
  std::string mode;       // "exhaustive" | "seeded"
  std::string group;
  std::string moveset;
  std::vector<ComponentInfo> components;
  std::size_t total_generating = 0;  // exhaustive
  bool cap_hit = false;
  std::string verdict;    // "exact" | "merged" | "certified-distinct" | "inconclusive"
  nlohmann::json to_json(const HandlePtr& h) const;
};

// Enumerates every generating k-tuple and unions along moves. element_cap
// bounds the group enumeration; CapExceeded surfaces as std::runtime_error.
// threads > 1 uses the OpenMP kernels; the partition is the same either way.
ComponentReport explore_exhaustive(const HandlePtr& h, int k, const MoveSet& ms,
                                   std::size_t element_cap = 1000000, int threads = 1);

// BFS from each seed up to node_cap nodes per seed; regions that touch are
// merged. Distinct fingerprints certify distinct components. Throws
// std::invalid_argument on a non-generating seed.
ComponentReport explore_seeded(const HandlePtr& h, const std::vector<TupleVertex>& seeds,
                               const MoveSet& ms, std::size_t node_cap);

// Smallest depth <= max_depth at which the commutator cycle types of the
// two pairs differ. Absence of a separation decides nothing.
std::optional<int> separation_depth(const ScenarioPair& a, const ScenarioPair& b,
                                    const TreeParams& params, int max_depth);

struct Certificate {
  std::string label_a, label_b;
  int p = 0, depth = 0;
  std::string comm_a, comm_b;          // canonical cycle text
  std::string type_a, type_b;
  bool distinct = false;
  nlohmann::json to_json() const;
  std::string to_text() const;
};
Certificate certify_distinct(const ScenarioPair& a, const ScenarioPair& b,
                             const TreeParams& params, int depth);

}  // namespace gsn

#endif
