#pragma once

#include "fewnomial/bounds.hpp"
#include "fewnomial/critical.hpp"
#include "fewnomial/homology.hpp"
#include "fewnomial/instance.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fewnomial {

struct VerifyConfig {
  CensusConfig census;
  std::uint64_t seed = 1;
  double base_M = 2.0;       // used when the instance gives no M
  int resolution = 32;       // starting oracle resolution
  int max_doublings = 4;
  int shift_max_doublings = 40;
  int oracle_max_dim = 3;
};

struct ChainLink {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct StageFailure {
  std::string stage;
  std::string kind;
  std::string message;
};

struct VerifyReport {
  std::string label;
  int n = 0;
  int l = 0;
  int dim = 0;
  std::uint64_t seed = 0;
  std::string mode;  // "full" or "bounds+census only"
  BoundReport bounds;
  std::optional<StableBetti> oracle;
  std::optional<CensusReport> census;        // unshifted direction
  std::optional<CensusReport> shifted;       // census used by the chain
  std::optional<bool> known_betti_match;
  int simplex_redraws = 0;
  std::vector<ChainLink> chain;
  std::optional<bool> verified;              // set only when every stage completed
  std::optional<StageFailure> failure;
  std::vector<std::string> diagnostics;
  std::map<std::string, double> timings;     // seconds, excluded from determinism checks
  int exit_code = 0;
};

/// bounds, then for generic M: oracle (dim <= oracle_max_dim), census and the
/// shifted census on the oracle's stabilized simplex, then the chain
/// b_* <= contributing_count <= theorem1_bound. Never throws for stage
/// failures; they are recorded with the exit code they map to.
VerifyReport run_verify(const Instance& inst, const VerifyConfig& cfg = {});

/// 1 for a generic failure, 2 chain violated, 3 genericity or shift exhaustion,
/// 4/5/6 input errors.
int exit_code_for(const std::exception& e);

}  // namespace fewnomial
