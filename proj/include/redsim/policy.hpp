#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redsim/design.hpp"
#include "redsim/rng.hpp"

namespace redsim {

enum class PolicyKind { Random, RoundRobin, Bibd };

std::string to_string(PolicyKind kind);
// Accepts "random" | "round-robin" | "bibd"; throws invalid_parameter otherwise.
PolicyKind parse_policy(const std::string& name);

// Stateful server selector: one r-subset of {0..n-1} per arriving job.
// Single-owner mutable; each replication constructs its own instance.
class Policy {
 public:
  // Throws invalid_parameter for bad (n, r); no_design_available when kind is
  // Bibd and no (n, r, 1) design can be built.
  Policy(PolicyKind kind, int n, int r, std::uint64_t seed);

  PolicyKind kind() const { return kind_; }
  int n() const { return n_; }
  int r() const { return r_; }
  std::uint64_t jobs_dispatched() const { return counter_; }
  const Design& design() const { return design_; }

  // Appends the next job's selection to `out` (cleared first), sorted
  // ascending. Advances the job counter.
  void next_selection(std::vector<int>& out);

  std::vector<int> next_selection() {
    std::vector<int> out;
    next_selection(out);
    return out;
  }

 private:
  PolicyKind kind_;
  int n_;
  int r_;
  std::uint64_t counter_ = 0;
  Design design_;            // Bibd only
  Rng rng_;                  // Random only
  std::vector<int> pool_;    // Random only: partial Fisher-Yates scratch
};

Policy new_policy(PolicyKind kind, int n, int r, std::uint64_t seed);

}  // namespace redsim
