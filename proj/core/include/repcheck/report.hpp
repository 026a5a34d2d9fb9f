#pragma once

// One-stop runner: resolve a group (catalog name or spec file), build the
// module expression, run the requested checks, emit a deterministic
// JSON-shaped report plus a human summary.

#include "repcheck/expr.hpp"

namespace repcheck {

inline constexpr const char* kVersion = "1.0.0";

// JSON group spec: { "name": str, "field": {"p": int, "k": int,
// "modulus": [int,...]? }, "generators": [ matrix, ... ], "cap": int? }
// where matrix = [[entry,...],...] and entry = int | [int,...] (coefficient
// list for k >= 2).
CatalogInstance load_group_spec(const std::string& path,
                                long long cap = 200'000);

struct RunConfig {
  std::string group;  // catalog name, or path to a spec file (contains '/'
                      // or ends in ".json")
  std::map<std::string, std::string> params;
  std::string module_expr = "natural";
  std::vector<std::string> checks;  // subset of {adequacy, weak, ext1,
                                    //  structure, forms, projective}
  std::uint64_t seed = 0;
  int field_ext = 1;  // extension-of-scalars degree multiplier
  long long cap_elems = 200'000;
  long long cap_mem_mb = 512;
  bool with_timings = false;  // timings break byte-determinism; off by default
};

struct RunResult {
  int exit_code = 0;  // 0 verdicts computed, 2 input error, 3 resource cap
  std::string report_json;  // empty on error
  std::string summary;      // human text (the error message on failure)
};

RunResult cmd_run(const RunConfig& cfg);

}  // namespace repcheck
