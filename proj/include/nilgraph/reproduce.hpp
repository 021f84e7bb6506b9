#pragma once

// Regenerates the worked examples: each transcript is a list of checks with
// the intermediate values that were compared.

#include <string>
#include <vector>

namespace nilgraph {

struct ReproCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Transcript {
  std::string id;
  std::vector<std::string> lines; // intermediate values
  std::vector<ReproCheck> checks;

  bool ok() const;
};

/// figure1, heisenberg, main-counterexample, remark-quadext, remark-H-finiteR, path4
const std::vector<std::string> &reproduce_ids();

/// Throws std::invalid_argument on an unknown id.
Transcript reproduce(const std::string &id);

} // namespace nilgraph
