#include "gsn/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gsn {

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (out.empty() || out.back() != d) out.push_back(d);
      n /= d;
    }
  if (n > 1 && (out.empty() || out.back() != n)) out.push_back(n);
  return out;
}

// Rank of a matrix over F_q (rows = residue vectors of the tuple).
int rank_mod(std::vector<std::vector<long>> m, long q) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % q != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    // normalize pivot to 1 mod q
    long inv = 1, a = ((m[rank][c] % q) + q) % q;
    for (long t = 1; t < q; ++t)
      if (a * t % q == 1) {
        inv = t;
        break;
      }
    for (int cc = 0; cc < cols; ++cc) m[rank][cc] = ((m[rank][cc] * inv) % q + q) % q;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] % q == 0) continue;
      long f = ((m[r][c] % q) + q) % q;
      for (int cc = 0; cc < cols; ++cc)
        m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

HandlePtr GroupHandle::quotient(int p, int depth) {
  if (!is_valid_tree_p(p)) throw std::invalid_argument("p must be an odd prime >= 3");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  auto h = std::shared_ptr<GroupHandle>(new GroupHandle());
  h->kind_ = Kind::Quotient;
  h->p_ = p;
  h->depth_ = depth;
  Evaluator ev(TreeParams{p});
  auto elem = [&](Gen g) {
    GroupElement e;
    e.perm = ev.generator_perm(g, depth);
    return e;
  };
  h->generators_ = {elem(Gen::x), elem(Gen::y)};
  h->alphabet_ = {elem(Gen::x), elem(Gen::x_inv), elem(Gen::y), elem(Gen::y_inv)};
  std::vector<Permutation> gens{*h->generators_[0].perm, *h->generators_[1].perm};
  h->chain_ = std::make_unique<StabilizerChain>(StabilizerChain::build(gens));
  h->order_ = h->chain_->order();
  return h;
}

HandlePtr GroupHandle::abelian(std::vector<long> moduli) {
  if (moduli.empty()) throw std::invalid_argument("abelian group needs at least one modulus");
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 2) throw std::invalid_argument("moduli must be >= 2");
    if (i + 1 < moduli.size() && moduli[i] % moduli[i + 1] != 0)
      throw std::invalid_argument("moduli must form a divisibility chain m_r | ... | m_1");
  }
  auto h = std::shared_ptr<GroupHandle>(new GroupHandle());
  h->kind_ = Kind::Abelian;
  h->moduli_ = std::move(moduli);
  h->order_ = 1;
  for (long m : h->moduli_) h->order_ *= m;
  const std::size_t r = h->moduli_.size();
  for (std::size_t i = 0; i < r; ++i) {
    GroupElement e;
    e.residues.assign(r, 0);
    e.residues[i] = 1;
    h->generators_.push_back(e);
  }
  for (const auto& g : h->generators_) {
    h->alphabet_.push_back(g);
    h->alphabet_.push_back(h->invert(g));
  }
  return h;
}

HandlePtr GroupHandle::parse(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad group descriptor");
  std::string kind = descriptor.substr(0, colon);
  std::string rest = descriptor.substr(colon + 1);
  if (kind == "quotient") {
    int p = -1, depth = -1;
    std::istringstream is(rest);
    std::string part;
    while (std::getline(is, part, ',')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad quotient descriptor");
      std::string name = part.substr(0, eq);
      int value = std::stoi(part.substr(eq + 1));
      if (name == "p")
        p = value;
      else if (name == "depth")
        depth = value;
      else
        throw std::invalid_argument("unknown quotient parameter: " + name);
    }
    if (p < 0 || depth < 0) throw std::invalid_argument("quotient descriptor needs p and depth");
    return quotient(p, depth);
  }
  if (kind == "abelian") {
    std::vector<long> moduli;
    std::istringstream is(rest);
    std::string part;
    while (std::getline(is, part, ',')) moduli.push_back(std::stol(part));
    return abelian(std::move(moduli));
  }
  throw std::invalid_argument("unknown group kind: " + kind);
}

std::string GroupHandle::descriptor() const {
  if (kind_ == Kind::Quotient)
    return "quotient:p=" + std::to_string(p_) + ",depth=" + std::to_string(depth_);
  std::string s = "abelian:";
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(moduli_[i]);
  }
  return s;
}

GroupElement GroupHandle::identity() const {
  GroupElement e;
  if (kind_ == Kind::Quotient)
    e.perm = Permutation(generators_[0].perm->degree());
  else
    e.residues.assign(moduli_.size(), 0);
  return e;
}

GroupElement GroupHandle::mul(const GroupElement& a, const GroupElement& b) const {
  GroupElement e;
  if (kind_ == Kind::Quotient) {
    e.perm = gsn::mul(*a.perm, *b.perm);
  } else {
    if (a.residues.size() != moduli_.size() || b.residues.size() != moduli_.size())
      throw std::invalid_argument("handle mismatch");
    e.residues.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      e.residues[i] = (a.residues[i] + b.residues[i]) % moduli_[i];
  }
  return e;
}

GroupElement GroupHandle::invert(const GroupElement& a) const {
  GroupElement e;
  if (kind_ == Kind::Quotient) {
    e.perm = gsn::inverse(*a.perm);
  } else {
    e.residues.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      e.residues[i] = (moduli_[i] - a.residues[i]) % moduli_[i];
  }
  return e;
}

bool GroupHandle::equal(const GroupElement& a, const GroupElement& b) const { return a == b; }

std::string GroupHandle::key(const GroupElement& a) const {
  if (kind_ == Kind::Quotient) return canonical_key(*a.perm);
  std::string k;
  k.reserve(a.residues.size() * 4);
  for (long v : a.residues) {
    unsigned long u = static_cast<unsigned long>(v);
    for (int s = 24; s >= 0; s -= 8) k.push_back(static_cast<char>(u >> s));
  }
  return k;
}

std::string GroupHandle::describe(const GroupElement& a) const {
  if (kind_ == Kind::Quotient) return format_cycles(*a.perm);
  std::string s = "(";
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.residues[i]);
  }
  return s + ")";
}

BigInt GroupHandle::order() const { return order_; }

const StabilizerChain& GroupHandle::chain() const {
  if (!chain_) throw std::logic_error("chain is only available for quotient handles");
  return *chain_;
}

bool GroupHandle::is_generating(const std::vector<GroupElement>& tuple) const {
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  if (kind_ == Kind::Quotient) {
    std::vector<Permutation> gens;
    gens.reserve(tuple.size());
    for (const auto& e : tuple) gens.push_back(*e.perm);
    return StabilizerChain::build(gens).order() == order_;
  }
  // Frattini criterion: for every prime q | m_1 the residue matrix must
  // have full rank on the coordinates divisible by q.
  std::vector<std::vector<long>> m;
  for (const auto& e : tuple) {
    if (e.residues.size() != moduli_.size()) throw std::invalid_argument("handle mismatch");
    m.push_back(e.residues);
  }
  for (long q : prime_factors(moduli_[0])) {
    int need = 0;
    for (long mi : moduli_)
      if (mi % q == 0) ++need;
    // columns with m_i not divisible by q are identically "free"; rank of
    // the full matrix mod q cannot exceed need+extra, so restrict columns.
    std::vector<std::vector<long>> restricted;
    for (const auto& row : m) {
      std::vector<long> r;
      for (std::size_t i = 0; i < moduli_.size(); ++i)
        if (moduli_[i] % q == 0) r.push_back(row[i]);
      restricted.push_back(std::move(r));
    }
    if (rank_mod(std::move(restricted), q) != need) return false;
  }
  return true;
}

GroupHandle::EnumResult GroupHandle::enumerate(std::size_t cap) const {
  if (cap == 0) throw std::invalid_argument("cap must be positive");
  EnumResult res;
  std::unordered_set<std::string> seen;
  std::deque<GroupElement> queue;
  GroupElement id = identity();
  seen.insert(key(id));
  res.elements.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    GroupElement cur = queue.front();
    queue.pop_front();
    for (const auto& g : alphabet_) {
      GroupElement next = mul(cur, g);
      std::string k = key(next);
      if (seen.count(k)) continue;
      if (res.elements.size() >= cap) {
        res.capped = true;
        res.visited = cap;
        res.elements.clear();
        return res;
      }
      seen.insert(std::move(k));
      res.elements.push_back(next);
      queue.push_back(std::move(next));
    }
  }
  res.visited = res.elements.size();
  return res;
}

}  // namespace gsn
