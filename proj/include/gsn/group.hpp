#ifndef GSN_GROUP_HPP
#define GSN_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsn/chain.hpp"
#include "gsn/tree.hpp"

namespace gsn {

class GroupHandle;
using HandlePtr = std::shared_ptr<const GroupHandle>;

// Element of a group behind a handle: a permutation for congruence
// quotients, a reduced residue vector for finite abelian groups.
struct GroupElement {
  std::optional<Permutation> perm;
  std::vector<long> residues;
  bool operator==(const GroupElement&) const = default;
};

// Uniform finite-group interface over two implementations: G_p/St(n) as
// a permutation group on p^n leaves, and Z_{m_1} x ... x Z_{m_r} with
// m_r | ... | m_1.
class GroupHandle : public std::enable_shared_from_this<GroupHandle> {
public:
  enum class Kind { Quotient, Abelian };

  static HandlePtr quotient(int p, int depth);
  static HandlePtr abelian(std::vector<long> moduli);
  // "quotient:p=3,depth=4" or "abelian:5,5". Throws std::invalid_argument.
  static HandlePtr parse(const std::string& descriptor);

  Kind kind() const { return kind_; }
  int p() const { return p_; }
  int depth() const { return depth_; }
  const std::vector<long>& moduli() const { return moduli_; }
  std::string descriptor() const;

  const std::vector<GroupElement>& generators() const { return generators_; }
  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;  // a first
  GroupElement invert(const GroupElement& a) const;
  bool equal(const GroupElement& a, const GroupElement& b) const;
  std::string key(const GroupElement& a) const;
  std::string describe(const GroupElement& a) const;

  BigInt order() const;
  const StabilizerChain& chain() const;  // quotient kind only

  // Chain order equality for quotients; rank-mod-q Frattini criterion for
  // abelian groups.
  bool is_generating(const std::vector<GroupElement>& tuple) const;

  struct EnumResult {
    bool capped = false;
    std::size_t visited = 0;
    std::vector<GroupElement> elements;  // deterministic BFS order
  };
  // Closure under the generator alphabet (x, x^{-1}, y, y^{-1} for
  // quotients; basis vectors and their inverses for abelian groups).
  EnumResult enumerate(std::size_t cap) const;

private:
  Kind kind_;
  int p_ = 0, depth_ = 0;
  std::vector<long> moduli_;
  std::vector<GroupElement> generators_;        // x, y images / basis vectors
  std::vector<GroupElement> alphabet_;          // generators and inverses, fixed order
  std::unique_ptr<StabilizerChain> chain_;
  BigInt order_;
  GroupHandle() = default;
};

}  // namespace gsn

#endif
