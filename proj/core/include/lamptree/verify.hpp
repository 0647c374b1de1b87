#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamptree/laurent.hpp"

namespace lamptree {

// One verified claim.  `name` is unique within its block; `anchor` is a
// stable identifier of the mathematical fact being reproduced, shared by
// checks that look at the same fact from different angles.
struct CheckResult {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct BlockResult {
  std::string block;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;
  bool all_pass() const;
};

// Registered verification blocks, in canonical order.
std::vector<std::string> verify_block_names();
BlockResult run_verify_block(const std::string& name, uint64_t seed);
// All blocks, or just the ones whose name equals `only` (empty = all).
std::vector<BlockResult> run_verify(uint64_t seed, const std::string& only = "");

// Brute-force convolution-inverse oracle, independent of the closed-form
// inversion in lamp_aut: per prime power it solves the Toeplitz system
// data * x = 1 over an adaptive index window by exact elimination with
// minimal-valuation pivoting, then recombines by CRT.  Returns the inverse
// when one exists, nullopt otherwise.  The window is sized so that a unit's
// true inverse always fits, which makes the decision complete.
std::optional<ZkLaurent> convolution_inverse_search(const ZkLaurent& data);

}  // namespace lamptree
