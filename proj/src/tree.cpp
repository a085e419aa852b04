#include "gsn/tree.hpp"

#include <sstream>
#include <stdexcept>

namespace gsn {

bool is_valid_tree_p(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long long leaf_count(int p, int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  long long n = 1;
  for (int i = 0; i < depth; ++i) {
    if (n > (1LL << 40)) throw std::overflow_error("p^depth too large");
    n *= p;
  }
  return n;
}

int leaf_index(const VertexPath& path, int p, int depth) {
  if (static_cast<int>(path.size()) != depth)
    throw std::invalid_argument("path length does not match depth");
  long long idx = 0;
  for (int letter : path) {
    if (letter < 1 || letter > p) throw std::invalid_argument("path letter out of range");
    idx = idx * p + (letter - 1);
  }
  return static_cast<int>(idx + 1);
}

Gen inverse(Gen g) {
  switch (g) {
    case Gen::x: return Gen::x_inv;
    case Gen::x_inv: return Gen::x;
    case Gen::y: return Gen::y_inv;
    case Gen::y_inv: return Gen::y;
  }
  throw std::logic_error("bad generator");
}

char gen_char(Gen g) {
  switch (g) {
    case Gen::x: return 'x';
    case Gen::x_inv: return 'X';
    case Gen::y: return 'y';
    case Gen::y_inv: return 'Y';
  }
  throw std::logic_error("bad generator");
}

GeneratorWord reduce(std::vector<Gen> letters) {
  std::vector<Gen> out;
  for (Gen g : letters) {
    if (!out.empty() && out.back() == inverse(g))
      out.pop_back();
    else
      out.push_back(g);
  }
  return GeneratorWord{std::move(out)};
}

GeneratorWord inverse(const GeneratorWord& w) {
  std::vector<Gen> out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push_back(inverse(*it));
  return GeneratorWord{std::move(out)};
}

GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b) {
  std::vector<Gen> out = a.letters;
  out.insert(out.end(), b.letters.begin(), b.letters.end());
  return reduce(std::move(out));
}

std::string format_word(const GeneratorWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (Gen g : w.letters) s.push_back(gen_char(g));
  return s;
}

VertexPath act_generator(Gen g, const VertexPath& path, const TreeParams& params) {
  const int p = params.p;
  if (path.empty()) return path;  // every automorphism fixes the root
  VertexPath out = path;
  switch (g) {
    case Gen::x:
      out[0] = out[0] % p + 1;
      return out;
    case Gen::x_inv:
      out[0] = (out[0] + p - 2) % p + 1;
      return out;
    case Gen::y:
    case Gen::y_inv: {
      // y = (x, x^{-1}, 1, ..., 1, y); inverses invert each section.
      const bool inv = (g == Gen::y_inv);
      VertexPath tail(path.begin() + 1, path.end());
      if (path[0] == 1)
        tail = act_generator(inv ? Gen::x_inv : Gen::x, tail, params);
      else if (path[0] == 2)
        tail = act_generator(inv ? Gen::x : Gen::x_inv, tail, params);
      else if (path[0] == p)
        tail = act_generator(g, tail, params);
      out.assign(1, path[0]);
      out.insert(out.end(), tail.begin(), tail.end());
      return out;
    }
  }
  throw std::logic_error("bad generator");
}

ElemPtr TreeElement::word(GeneratorWord w) {
  auto e = std::make_shared<TreeElement>();
  e->kind_ = Kind::Word;
  e->word_ = std::move(w);
  return e;
}

ElemPtr TreeElement::word(std::vector<Gen> letters) { return word(reduce(std::move(letters))); }

ElemPtr TreeElement::node(int root_exp, std::vector<ElemPtr> sections, int p) {
  if (static_cast<int>(sections.size()) != p)
    throw std::invalid_argument("node needs exactly p sections");
  auto e = std::make_shared<TreeElement>();
  e->kind_ = Kind::Node;
  e->root_exp_ = ((root_exp % p) + p) % p;
  e->children_ = std::move(sections);
  return e;
}

ElemPtr TreeElement::product(std::vector<ElemPtr> factors) {
  std::vector<ElemPtr> flat;
  for (auto& f : factors) {
    if (!f) throw std::invalid_argument("null factor");
    if (f->is_identity_word()) continue;
    if (f->kind() == Kind::Product)
      flat.insert(flat.end(), f->factors().begin(), f->factors().end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.empty()) return identity();
  if (flat.size() == 1) return flat.front();
  auto e = std::make_shared<TreeElement>();
  e->kind_ = Kind::Product;
  e->children_ = std::move(flat);
  return e;
}

ElemPtr TreeElement::identity() {
  static const ElemPtr id = TreeElement::word(GeneratorWord{});
  return id;
}

ElemPtr inverse(const ElemPtr& e, int p) {
  switch (e->kind()) {
    case TreeElement::Kind::Word:
      return TreeElement::word(inverse(e->as_word()));
    case TreeElement::Kind::Node: {
      // (x^i(g_1..g_p))^{-1} = x^{-i}(h_1..h_p), h_t = g_{pi^{-i}(t)}^{-1}.
      const int i = e->root_exp();
      std::vector<ElemPtr> secs(p);
      for (int t = 0; t < p; ++t) secs[t] = inverse(e->sections()[((t - i) % p + p) % p], p);
      return TreeElement::node(-i, std::move(secs), p);
    }
    case TreeElement::Kind::Product: {
      std::vector<ElemPtr> rev;
      for (auto it = e->factors().rbegin(); it != e->factors().rend(); ++it)
        rev.push_back(inverse(*it, p));
      return TreeElement::product(std::move(rev));
    }
  }
  throw std::logic_error("bad element kind");
}

ElemPtr commutator(const ElemPtr& a, const ElemPtr& b, int p) {
  return TreeElement::product({inverse(a, p), inverse(b, p), a, b});
}

ElemPtr power(const ElemPtr& e, long k, int p) {
  ElemPtr base = k < 0 ? inverse(e, p) : e;
  if (k < 0) k = -k;
  std::vector<ElemPtr> factors(static_cast<std::size_t>(k), base);
  return TreeElement::product(std::move(factors));
}

namespace {

// Wreath form of a single generator: root exponent and sections as words.
struct GenWreath {
  int root_exp;
  std::vector<std::vector<Gen>> sections;
};

GenWreath gen_wreath(Gen g, int p) {
  GenWreath w;
  w.sections.assign(p, {});
  switch (g) {
    case Gen::x: w.root_exp = 1; break;
    case Gen::x_inv: w.root_exp = p - 1; break;
    case Gen::y:
      w.root_exp = 0;
      w.sections[0] = {Gen::x};
      w.sections[1] = {Gen::x_inv};
      w.sections[p - 1] = {Gen::y};
      break;
    case Gen::y_inv:
      w.root_exp = 0;
      w.sections[0] = {Gen::x_inv};
      w.sections[1] = {Gen::x};
      w.sections[p - 1] = {Gen::y_inv};
      break;
  }
  return w;
}

}  // namespace

std::pair<int, std::vector<GeneratorWord>> decompose(const GeneratorWord& w,
                                                     const TreeParams& params) {
  const int p = params.p;
  // Fold g*h = x^{i+j}(g_s h_{pi^i(s)}) over the letters, leftmost first.
  int root = 0;
  std::vector<std::vector<Gen>> secs(p);
  for (Gen letter : w.letters) {
    GenWreath h = gen_wreath(letter, p);
    for (int s = 0; s < p; ++s) {
      const auto& tail = h.sections[(s + root) % p];
      secs[s].insert(secs[s].end(), tail.begin(), tail.end());
    }
    root = (root + h.root_exp) % p;
  }
  std::vector<GeneratorWord> out;
  out.reserve(p);
  for (auto& s : secs) out.push_back(reduce(std::move(s)));
  return {root, std::move(out)};
}

std::pair<int, std::vector<ElemPtr>> decompose_elem(const ElemPtr& e, const TreeParams& params) {
  const int p = params.p;
  switch (e->kind()) {
    case TreeElement::Kind::Word: {
      auto [root, words] = decompose(e->as_word(), params);
      std::vector<ElemPtr> secs;
      secs.reserve(p);
      for (auto& w : words) secs.push_back(TreeElement::word(std::move(w)));
      return {root, std::move(secs)};
    }
    case TreeElement::Kind::Node:
      return {e->root_exp(), e->sections()};
    case TreeElement::Kind::Product: {
      int root = 0;
      std::vector<std::vector<ElemPtr>> secs(p);
      for (const auto& f : e->factors()) {
        auto [j, h] = decompose_elem(f, params);
        for (int s = 0; s < p; ++s) {
          const auto& piece = h[(s + root) % p];
          if (!piece->is_identity_word()) secs[s].push_back(piece);
        }
        root = (root + j) % p;
      }
      std::vector<ElemPtr> out;
      out.reserve(p);
      for (auto& s : secs) out.push_back(TreeElement::product(std::move(s)));
      return {root, std::move(out)};
    }
  }
  throw std::logic_error("bad element kind");
}

ElemPtr section(const ElemPtr& e, const VertexPath& path, const TreeParams& params) {
  ElemPtr cur = e;
  for (int letter : path) {
    if (letter < 1 || letter > params.p) throw std::invalid_argument("path letter out of range");
    cur = decompose_elem(cur, params).second[letter - 1];
  }
  return cur;
}

Permutation project(const Permutation& a, int p, int d) {
  const long long lo = leaf_count(p, d);
  if (a.degree() != lo * p) throw std::invalid_argument("degree is not p^(d+1)");
  std::vector<int> img(static_cast<std::size_t>(lo));
  for (long long u = 0; u < lo; ++u) {
    int target = a(static_cast<int>(u * p)) / p;
    for (int w = 1; w < p; ++w)
      if (a(static_cast<int>(u * p + w)) / p != target)
        throw std::invalid_argument("permutation does not preserve sibling blocks");
    img[static_cast<std::size_t>(u)] = target;
  }
  return Permutation(std::move(img));
}

Evaluator::Evaluator(TreeParams params) : params_(params) {
  if (!is_valid_tree_p(params_.p)) throw std::invalid_argument("p must be an odd prime >= 3");
}

Permutation Evaluator::generator_perm(Gen g, int depth) {
  auto key = std::make_pair(static_cast<int>(g), depth);
  auto it = gen_memo_.find(key);
  if (it != gen_memo_.end()) return it->second;

  const int p = params_.p;
  const int n = static_cast<int>(leaf_count(p, depth));
  Permutation result(n);
  if (depth > 0) {
    std::vector<int> img(n);
    const int block = n / p;
    if (g == Gen::x || g == Gen::x_inv) {
      const int shift = (g == Gen::x) ? 1 : p - 1;
      for (int s = 0; s < p; ++s) {
        const int t = (s + shift) % p;
        for (int v = 0; v < block; ++v) img[s * block + v] = t * block + v;
      }
    } else {
      const bool inv = (g == Gen::y_inv);
      std::vector<Permutation> secs;
      secs.reserve(p);
      secs.push_back(generator_perm(inv ? Gen::x_inv : Gen::x, depth - 1));
      secs.push_back(generator_perm(inv ? Gen::x : Gen::x_inv, depth - 1));
      for (int s = 2; s < p - 1; ++s) secs.push_back(Permutation(block));
      secs.push_back(generator_perm(g, depth - 1));
      for (int s = 0; s < p; ++s)
        for (int v = 0; v < block; ++v) img[s * block + v] = s * block + secs[s](v);
    }
    result = Permutation(std::move(img));
  }
  gen_memo_.emplace(key, result);
  return result;
}

Permutation Evaluator::evaluate(const GeneratorWord& w, int depth) {
  Permutation r(static_cast<int>(leaf_count(params_.p, depth)));
  for (Gen g : w.letters) r = mul(r, generator_perm(g, depth));
  return r;
}

Permutation Evaluator::evaluate(const ElemPtr& e, int depth) {
  auto key = std::make_pair(e.get(), depth);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const int p = params_.p;
  Permutation result(static_cast<int>(leaf_count(p, depth)));
  if (depth > 0) {
    switch (e->kind()) {
      case TreeElement::Kind::Word:
        result = evaluate(e->as_word(), depth);
        break;
      case TreeElement::Kind::Node: {
        // Sections act inside their subtrees first, then x^i at the root.
        const int n = result.degree();
        const int block = n / p;
        const int shift = e->root_exp();
        std::vector<int> img(n);
        for (int s = 0; s < p; ++s) {
          Permutation q = evaluate(e->sections()[s], depth - 1);
          const int t = (s + shift) % p;
          for (int v = 0; v < block; ++v) img[s * block + v] = t * block + q(v);
        }
        result = Permutation(std::move(img));
        break;
      }
      case TreeElement::Kind::Product:
        for (const auto& f : e->factors()) result = mul(result, evaluate(f, depth));
        break;
    }
  }
  memo_.emplace(key, result);
  pinned_.push_back(e);
  return result;
}

}  // namespace gsn
