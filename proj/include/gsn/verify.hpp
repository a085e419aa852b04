#ifndef GSN_VERIFY_HPP
#define GSN_VERIFY_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace gsn {

// Golden permutation listings shipped under data/golden/. Loaded as text
// and re-parsed, so cosmetic formatting differences cannot matter.
std::string load_golden(const std::string& data_dir, const std::string& name);

struct ScenarioResult {
  std::string name;
  bool pass = false;
  std::string detail;  // diff text on failure
};

struct VerifySuite {
  std::vector<ScenarioResult> results;
  bool pass = true;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Runs every printed-computation scenario: the level-4 generator images,
// the non-conjugacy example, the section identities, the commutator
// certificates and the level-3/4 cycle-type separations.
VerifySuite run_verify_suite(const std::string& data_dir);

}  // namespace gsn

#endif
