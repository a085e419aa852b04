#include "gsn/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gsn {

Permutation::Permutation(int degree) : img_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> img(a.degree());
  for (int v = 0; v < a.degree(); ++v) img[v] = a(b(v));
  return Permutation(std::move(img));
}

Permutation mul(const Permutation& a, const Permutation& b) { return compose(b, a); }

Permutation inverse(const Permutation& a) {
  std::vector<int> img(a.degree());
  for (int v = 0; v < a.degree(); ++v) img[a(v)] = v;
  return Permutation(std::move(img));
}

Permutation power(const Permutation& a, long e) {
  Permutation base = e < 0 ? inverse(a) : a;
  if (e < 0) e = -e;
  Permutation r(a.degree());
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

CycleType cycle_type(const Permutation& a) {
  std::vector<char> seen(a.degree(), 0);
  std::map<int, int> counts;  // length -> multiplicity
  int fixed = 0;
  for (int v = 0; v < a.degree(); ++v) {
    if (seen[v]) continue;
    int len = 0, w = v;
    do {
      seen[w] = 1;
      w = a(w);
      ++len;
    } while (w != v);
    if (len == 1)
      ++fixed;
    else
      ++counts[len];
  }
  CycleType t;
  t.fixed_points = fixed;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    t.cycles.emplace_back(it->first, it->second);
  return t;
}

std::string format_cycle_type(const CycleType& t) {
  std::ostringstream os;
  bool first = true;
  for (auto [len, mult] : t.cycles) {
    if (!first) os << ' ';
    first = false;
    os << len << '^' << mult;
  }
  if (t.fixed_points > 0) {
    if (!first) os << ' ';
    os << "1^" << t.fixed_points;
  }
  if (t.cycles.empty() && t.fixed_points == 0) os << "-";
  return os.str();
}

std::string canonical_key(const Permutation& a) {
  const bool wide = a.degree() > 0xFFFF;
  std::string key;
  key.reserve(static_cast<std::size_t>(a.degree()) * (wide ? 4 : 2));
  for (int v = 0; v < a.degree(); ++v) {
    unsigned u = static_cast<unsigned>(a(v));
    if (wide) {
      key.push_back(static_cast<char>(u >> 24));
      key.push_back(static_cast<char>(u >> 16));
    }
    key.push_back(static_cast<char>(u >> 8));
    key.push_back(static_cast<char>(u));
  }
  return key;
}

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle text");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point in cycle text");
      int pt = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        pt = pt * 10 + (text[i++] - '0');
      if (pt < 1 || pt > degree) throw std::invalid_argument("point out of range");
      if (used[pt - 1]) throw std::invalid_argument("repeated point");
      used[pt - 1] = 1;
      cycle.push_back(pt - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      img[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

std::string format_cycles(const Permutation& a) {
  std::vector<char> seen(a.degree(), 0);
  std::ostringstream os;
  bool any = false;
  for (int v = 0; v < a.degree(); ++v) {
    if (seen[v] || a(v) == v) continue;
    // v is the smallest point of its cycle: earlier points are all seen
    os << '(';
    int w = v;
    bool first = true;
    do {
      if (!first) os << ',';
      first = false;
      os << (w + 1);
      seen[w] = 1;
      w = a(w);
    } while (w != v);
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace gsn
