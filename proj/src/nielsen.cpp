#include "gsn/nielsen.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsn {

MoveSet MoveSet::nielsen(int k) {
  if (k < 1) throw std::invalid_argument("arity must be >= 1");
  MoveSet ms;
  ms.k_ = k;
  for (int sign : {+1, -1})
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) ms.moves_.push_back({Move::Type::RightMul, i, j, sign, 0});
  for (int j = 0; j < k; ++j) ms.moves_.push_back({Move::Type::Invert, j, 0, +1, 0});
  return ms;
}

MoveSet MoveSet::andrews_curtis(int k, std::vector<GeneratorWord> conjugators) {
  MoveSet ms = nielsen(k);
  if (conjugators.empty()) {
    conjugators = {GeneratorWord{{Gen::x}}, GeneratorWord{{Gen::x_inv}},
                   GeneratorWord{{Gen::y}}, GeneratorWord{{Gen::y_inv}}};
  }
  // close under inverses
  std::vector<GeneratorWord> closed = conjugators;
  for (const auto& w : conjugators) {
    GeneratorWord wi = inverse(w);
    if (std::find(closed.begin(), closed.end(), wi) == closed.end()) closed.push_back(wi);
  }
  ms.conjugators_ = std::move(closed);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < static_cast<int>(ms.conjugators_.size()); ++c)
      ms.moves_.push_back({Move::Type::Conjugate, i, 0, +1, c});
  return ms;
}

std::string MoveSet::describe() const {
  std::string s = conjugators_.empty() ? "nielsen" : "andrews_curtis";
  s += ":k=" + std::to_string(k_);
  return s;
}

TupleVertex make_vertex(const HandlePtr& h, std::vector<GroupElement> elements) {
  TupleVertex t;
  t.elements = std::move(elements);
  for (const auto& e : t.elements) t.key += h->key(e);
  return t;
}

TupleVertex apply_move(const HandlePtr& h, const Move& m, const TupleVertex& t) {
  std::vector<GroupElement> out = t.elements;
  const int k = static_cast<int>(out.size());
  if (m.i >= k || m.j >= k) throw std::invalid_argument("move arity mismatch");
  switch (m.type) {
    case Move::Type::RightMul: {
      GroupElement rhs = m.sign > 0 ? out[m.j] : h->invert(out[m.j]);
      out[m.i] = h->mul(out[m.i], rhs);
      break;
    }
    case Move::Type::Invert:
      out[m.i] = h->invert(out[m.i]);
      break;
    case Move::Type::Conjugate:
      throw std::invalid_argument("conjugation moves need a move set context");
  }
  return make_vertex(h, std::move(out));
}

namespace {

GroupElement eval_conjugator(const HandlePtr& h, const GeneratorWord& w) {
  if (h->kind() == GroupHandle::Kind::Quotient) {
    Evaluator ev(TreeParams{h->p()});
    GroupElement e;
    e.perm = ev.evaluate(w, h->depth());
    return e;
  }
  // In an abelian group every conjugation is trivial.
  return h->identity();
}

TupleVertex apply_move_with(const HandlePtr& h, const MoveSet& ms, const Move& m,
                            const TupleVertex& t,
                            const std::vector<GroupElement>& conj_elems) {
  if (m.type != Move::Type::Conjugate) return apply_move(h, m, t);
  std::vector<GroupElement> out = t.elements;
  const GroupElement& w = conj_elems[static_cast<std::size_t>(m.conj)];
  out[m.i] = h->mul(h->mul(h->invert(w), out[m.i]), w);
  (void)ms;
  return make_vertex(h, std::move(out));
}

std::vector<GroupElement> conjugator_elements(const HandlePtr& h, const MoveSet& ms) {
  std::vector<GroupElement> out;
  out.reserve(ms.conjugators().size());
  for (const auto& w : ms.conjugators()) out.push_back(eval_conjugator(h, w));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<TupleVertex> neighbors(const HandlePtr& h, const TupleVertex& t, const MoveSet& ms) {
  auto conj = conjugator_elements(h, ms);
  std::vector<TupleVertex> out;
  out.reserve(ms.moves().size());
  for (const auto& m : ms.moves()) out.push_back(apply_move_with(h, ms, m, t, conj));
  return out;
}

CycleType fingerprint(const HandlePtr& h, const TupleVertex& t) {
  if (h->kind() != GroupHandle::Kind::Quotient)
    throw std::invalid_argument("fingerprint needs a quotient handle");
  if (t.elements.size() != 2) throw std::invalid_argument("fingerprint needs a pair");
  const Permutation& u = *t.elements[0].perm;
  const Permutation& v = *t.elements[1].perm;
  Permutation comm = mul(mul(mul(inverse(u), inverse(v)), u), v);
  return cycle_type(comm);
}

nlohmann::json ComponentReport::to_json(const HandlePtr& h) const {
  nlohmann::json j;
  j["mode"] = mode;
  j["group"] = group;
  j["moveset"] = moveset;
  j["verdict"] = verdict;
  j["caps"] = {{"hit", cap_hit}};
  if (mode == "exhaustive") j["total_generating"] = total_generating;
  j["components"] = nlohmann::json::array();
  for (const auto& c : components) {
    nlohmann::json cj;
    cj[mode == "exhaustive" ? "size" : "visited"] = c.size;
    nlohmann::json rep = nlohmann::json::array();
    for (const auto& e : c.representative.elements) rep.push_back(h->describe(e));
    cj["representative"] = rep;
    if (c.fp) cj["fingerprint"] = format_cycle_type(*c.fp);
    j["components"].push_back(cj);
  }
  return j;
}

ComponentReport explore_exhaustive(const HandlePtr& h, int k, const MoveSet& ms,
                                   std::size_t element_cap, int threads) {
  if (ms.arity() != k) throw std::invalid_argument("move set arity mismatch");
  auto en = h->enumerate(element_cap);
  if (en.capped) throw std::runtime_error("CapExceeded: group enumeration hit the cap");
  const std::vector<GroupElement>& elems = en.elements;
  const std::size_t n = elems.size();

  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > 100000000 / n) throw std::runtime_error("CapExceeded: tuple space too large");
    total *= n;
  }

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(h->key(elems[i]), i);

  auto tuple_at = [&](std::size_t flat) {
    std::vector<GroupElement> t(static_cast<std::size_t>(k));
    for (int s = k - 1; s >= 0; --s) {
      t[static_cast<std::size_t>(s)] = elems[flat % n];
      flat /= n;
    }
    return t;
  };
  auto flat_of = [&](const TupleVertex& t) {
    std::size_t flat = 0;
    for (const auto& e : t.elements) flat = flat * n + index.at(h->key(e));
    return flat;
  };

  std::vector<char> generating(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) if (threads > 1)
#endif
  for (long long f = 0; f < static_cast<long long>(total); ++f)
    generating[static_cast<std::size_t>(f)] =
        h->is_generating(tuple_at(static_cast<std::size_t>(f))) ? 1 : 0;

  auto conj = conjugator_elements(h, ms);
  const std::size_t m = ms.moves().size();
  std::vector<std::size_t> edges(total * m, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) if (threads > 1)
#endif
  for (long long f = 0; f < static_cast<long long>(total); ++f) {
    if (!generating[static_cast<std::size_t>(f)]) continue;
    TupleVertex t = make_vertex(h, tuple_at(static_cast<std::size_t>(f)));
    for (std::size_t mi = 0; mi < m; ++mi)
      edges[static_cast<std::size_t>(f) * m + mi] =
          flat_of(apply_move_with(h, ms, ms.moves()[mi], t, conj));
  }

  UnionFind uf(total);
  for (std::size_t f = 0; f < total; ++f) {
    if (!generating[f]) continue;
    for (std::size_t mi = 0; mi < m; ++mi) uf.unite(static_cast<int>(f),
                                                    static_cast<int>(edges[f * m + mi]));
  }

  std::map<int, ComponentInfo> comps;  // root -> info, root order = smallest flat index
  std::size_t gen_count = 0;
  for (std::size_t f = 0; f < total; ++f) {
    if (!generating[f]) continue;
    ++gen_count;
    int root = uf.find(static_cast<int>(f));
    auto [it, fresh] = comps.try_emplace(root);
    if (fresh) {
      it->second.representative = make_vertex(h, tuple_at(f));
      if (k == 2 && h->kind() == GroupHandle::Kind::Quotient && !ms.has_conjugations())
        it->second.fp = fingerprint(h, it->second.representative);
    }
    ++it->second.size;
  }

  ComponentReport r;
  r.mode = "exhaustive";
  r.group = h->descriptor();
  r.moveset = ms.describe();
  r.total_generating = gen_count;
  for (auto& [root, info] : comps) r.components.push_back(std::move(info));
  r.verdict = "exact";
  return r;
}

ComponentReport explore_seeded(const HandlePtr& h, const std::vector<TupleVertex>& seeds,
                               const MoveSet& ms, std::size_t node_cap) {
  for (const auto& s : seeds)
    if (!h->is_generating(s.elements)) throw std::invalid_argument("non-generating seed");

  auto conj = conjugator_elements(h, ms);
  const std::size_t ns = seeds.size();
  UnionFind uf(ns);
  std::unordered_map<std::string, std::size_t> owner;  // key -> seed index
  std::vector<std::size_t> visited(ns, 0);
  bool cap_hit = false;

  for (std::size_t si = 0; si < ns; ++si) {
    std::deque<TupleVertex> frontier;
    if (owner.count(seeds[si].key)) {
      uf.unite(static_cast<int>(si), static_cast<int>(owner.at(seeds[si].key)));
      continue;
    }
    owner.emplace(seeds[si].key, si);
    frontier.push_back(seeds[si]);
    visited[si] = 1;
    while (!frontier.empty() && visited[si] < node_cap) {
      TupleVertex cur = frontier.front();
      frontier.pop_front();
      for (const auto& mv : ms.moves()) {
        TupleVertex nb = apply_move_with(h, ms, mv, cur, conj);
        auto it = owner.find(nb.key);
        if (it != owner.end()) {
          if (it->second != si) uf.unite(static_cast<int>(si), static_cast<int>(it->second));
          continue;
        }
        if (visited[si] >= node_cap) {
          cap_hit = true;
          break;
        }
        owner.emplace(nb.key, si);
        ++visited[si];
        frontier.push_back(std::move(nb));
      }
    }
    if (!frontier.empty()) cap_hit = true;
  }

  // group seeds by region
  std::map<int, std::vector<std::size_t>> regions;
  for (std::size_t si = 0; si < ns; ++si) regions[uf.find(static_cast<int>(si))].push_back(si);

  ComponentReport r;
  r.mode = "seeded";
  r.group = h->descriptor();
  r.moveset = ms.describe();
  r.cap_hit = cap_hit;
  std::vector<CycleType> fps;
  const bool can_fp =
      h->kind() == GroupHandle::Kind::Quotient && ms.arity() == 2 && !ms.has_conjugations();
  for (auto& [root, members] : regions) {
    ComponentInfo info;
    info.representative = seeds[members.front()];
    for (std::size_t si : members) info.size += visited[si];
    if (can_fp) {
      info.fp = fingerprint(h, info.representative);
      fps.push_back(*info.fp);
    }
    r.components.push_back(std::move(info));
  }

  if (regions.size() <= 1) {
    r.verdict = ns <= 1 ? "exact-for-reachability" : "merged";
  } else if (can_fp) {
    bool all_distinct = true;
    for (std::size_t i = 0; i < fps.size(); ++i)
      for (std::size_t j = i + 1; j < fps.size(); ++j)
        if (fps[i] == fps[j]) all_distinct = false;
    r.verdict = all_distinct ? "certified-distinct" : "inconclusive";
  } else {
    r.verdict = "inconclusive";
  }
  return r;
}

std::optional<int> separation_depth(const ScenarioPair& a, const ScenarioPair& b,
                                    const TreeParams& params, int max_depth) {
  Evaluator ev(params);
  ElemPtr ca = commutator(a.u, a.v, params.p);
  ElemPtr cb = commutator(b.u, b.v, params.p);
  for (int d = 1; d <= max_depth; ++d) {
    if (cycle_type(ev.evaluate(ca, d)) != cycle_type(ev.evaluate(cb, d))) return d;
  }
  return std::nullopt;
}

Certificate certify_distinct(const ScenarioPair& a, const ScenarioPair& b,
                             const TreeParams& params, int depth) {
  Evaluator ev(params);
  Certificate c;
  c.label_a = a.label;
  c.label_b = b.label;
  c.p = params.p;
  c.depth = depth;
  Permutation pa = ev.evaluate(commutator(a.u, a.v, params.p), depth);
  Permutation pb = ev.evaluate(commutator(b.u, b.v, params.p), depth);
  c.comm_a = format_cycles(pa);
  c.comm_b = format_cycles(pb);
  CycleType ta = cycle_type(pa), tb = cycle_type(pb);
  c.type_a = format_cycle_type(ta);
  c.type_b = format_cycle_type(tb);
  c.distinct = !(ta == tb);
  return c;
}

nlohmann::json Certificate::to_json() const {
  return nlohmann::json{{"pairA", label_a},       {"pairB", label_b}, {"p", p},
                        {"depth", depth},         {"commA", comm_a},  {"commB", comm_b},
                        {"cycle_typeA", type_a},  {"cycle_typeB", type_b},
                        {"verdict", distinct ? "distinct" : "not-distinct"}};
}

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "pair A: " << label_a << "\n";
  os << "pair B: " << label_b << "\n";
  os << "p=" << p << " depth=" << depth << "\n";
  os << "[A] = " << comm_a << "\n";
  os << "    cycle type " << type_a << "\n";
  os << "[B] = " << comm_b << "\n";
  os << "    cycle type " << type_b << "\n";
  os << "verdict: " << (distinct ? "distinct" : "not-distinct") << "\n";
  return os.str();
}

}  // namespace gsn
