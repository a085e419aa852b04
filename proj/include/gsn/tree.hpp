#ifndef GSN_TREE_HPP
#define GSN_TREE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "gsn/perm.hpp"

namespace gsn {

// Parameters of the p-ary rooted tree; the root permutation is always the
// cycle (1,2,...,p).
struct TreeParams {
  int p;  // odd prime >= 3
};

bool is_valid_tree_p(int p);

// Vertex of the tree: sequence of letters in {1..p}; empty = root.
using VertexPath = std::vector<int>;

long long leaf_count(int p, int depth);  // p^depth, throws on overflow

// 1-based index of a depth-level vertex, big-endian: the first letter is
// the most significant digit.
int leaf_index(const VertexPath& path, int p, int depth);

enum class Gen : std::uint8_t { x, x_inv, y, y_inv };
Gen inverse(Gen g);
char gen_char(Gen g);  // x, X, y, Y

// Freely reduced word in the generators. No relations of the group are
// ever applied; equality is decided on permutation images.
struct GeneratorWord {
  std::vector<Gen> letters;
  bool operator==(const GeneratorWord&) const = default;
};

GeneratorWord reduce(std::vector<Gen> letters);
GeneratorWord inverse(const GeneratorWord& w);
GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b);  // reduced
std::string format_word(const GeneratorWord& w);

// Recursive action of a single generator on a vertex path.
VertexPath act_generator(Gen g, const VertexPath& path, const TreeParams& params);

// A group element in one of three shapes: a word in the generators, a
// wreath node x^i(g_1,...,g_p), or a product of elements. Immutable;
// children are shared so deep recursions stay linear in depth.
class TreeElement;
using ElemPtr = std::shared_ptr<const TreeElement>;

class TreeElement {
public:
  enum class Kind { Word, Node, Product };

  static ElemPtr word(GeneratorWord w);
  static ElemPtr word(std::vector<Gen> letters);
  static ElemPtr node(int root_exp, std::vector<ElemPtr> sections, int p);
  static ElemPtr product(std::vector<ElemPtr> factors);
  static ElemPtr identity();

  Kind kind() const { return kind_; }
  const GeneratorWord& as_word() const { return word_; }
  int root_exp() const { return root_exp_; }
  const std::vector<ElemPtr>& sections() const { return children_; }
  const std::vector<ElemPtr>& factors() const { return children_; }

  bool is_identity_word() const { return kind_ == Kind::Word && word_.letters.empty(); }

private:
  Kind kind_;
  GeneratorWord word_;          // Word
  int root_exp_ = 0;            // Node
  std::vector<ElemPtr> children_;  // Node sections / Product factors
};

ElemPtr inverse(const ElemPtr& e, int p);
// a^{-1} b^{-1} a b, first factor applied first.
ElemPtr commutator(const ElemPtr& a, const ElemPtr& b, int p);
ElemPtr power(const ElemPtr& e, long k, int p);

// Wreath recursion g = x^i(g_1,...,g_p) of a word, sections freely
// reduced; evaluation-equal to the input at every depth.
std::pair<int, std::vector<GeneratorWord>> decompose(const GeneratorWord& w,
                                                     const TreeParams& params);
std::pair<int, std::vector<ElemPtr>> decompose_elem(const ElemPtr& e,
                                                    const TreeParams& params);

// Section at a vertex, by iterated decomposition along the path.
ElemPtr section(const ElemPtr& e, const VertexPath& path, const TreeParams& params);

// Induced permutation on level d from a level-(d+1) image of a tree
// automorphism. Throws std::invalid_argument if the input moves leaves
// across sibling blocks incoherently.
Permutation project(const Permutation& a, int p, int d);

// Evaluates elements to permutations of a tree level. Memoized on
// (element identity, depth); not thread-safe, use one per thread.
class Evaluator {
public:
  explicit Evaluator(TreeParams params);

  // Word application order: the leftmost letter acts first. Pinned by the
  // golden permutation listings (see the eval tests).
  Permutation evaluate(const ElemPtr& e, int depth);
  Permutation evaluate(const GeneratorWord& w, int depth);
  Permutation generator_perm(Gen g, int depth);

  const TreeParams& params() const { return params_; }

private:
  TreeParams params_;
  std::map<std::pair<const TreeElement*, int>, Permutation> memo_;
  std::map<std::pair<int, int>, Permutation> gen_memo_;  // (gen, depth)
  std::vector<ElemPtr> pinned_;  // keeps memo keys alive
};

}  // namespace gsn

#endif
