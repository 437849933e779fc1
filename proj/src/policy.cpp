#include "redsim/policy.hpp"

#include <algorithm>
#include <numeric>

#include "redsim/errors.hpp"

namespace redsim {

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Random: return "random";
    case PolicyKind::RoundRobin: return "round-robin";
    case PolicyKind::Bibd: return "bibd";
  }
  return "?";
}

PolicyKind parse_policy(const std::string& name) {
  if (name == "random") return PolicyKind::Random;
  if (name == "round-robin") return PolicyKind::RoundRobin;
  if (name == "bibd") return PolicyKind::Bibd;
  throw invalid_parameter("unknown policy '" + name +
                          "' (expected random|round-robin|bibd)");
}

Policy::Policy(PolicyKind kind, int n, int r, std::uint64_t seed)
    : kind_(kind), n_(n), r_(r), rng_(seed) {
  if (r < 1 || r > n) {
    throw invalid_parameter("policy requires 1 <= r <= n, got n=" + std::to_string(n) +
                            " r=" + std::to_string(r));
  }
  if (kind == PolicyKind::Bibd) {
    if (n != bibd_order(r)) {
      throw invalid_parameter("bibd policy requires n = r(r-1)+1 = " +
                              std::to_string(bibd_order(r)) + ", got n=" +
                              std::to_string(n));
    }
    design_ = make_bibd(r);
  }
  if (kind == PolicyKind::Random) {
    pool_.resize(n);
    std::iota(pool_.begin(), pool_.end(), 0);
  }
}

void Policy::next_selection(std::vector<int>& out) {
  out.clear();
  switch (kind_) {
    case PolicyKind::Random: {
      // partial Fisher-Yates: uniform over all C(n,r) subsets
      for (int i = 0; i < r_; ++i) {
        int j = i + static_cast<int>(rng_.below(static_cast<std::uint64_t>(n_ - i)));
        std::swap(pool_[i], pool_[j]);
        out.push_back(pool_[i]);
      }
      break;
    }
    case PolicyKind::RoundRobin: {
      // job i (1-based) picks {((i-1)r+j) mod n : j=1..r}, shifted to 0-based
      std::uint64_t base = counter_ * static_cast<std::uint64_t>(r_);
      for (int j = 0; j < r_; ++j) {
        out.push_back(static_cast<int>((base + static_cast<std::uint64_t>(j)) %
                                       static_cast<std::uint64_t>(n_)));
      }
      break;
    }
    case PolicyKind::Bibd: {
      out = design_.blocks[counter_ % static_cast<std::uint64_t>(n_)];
      break;
    }
  }
  std::sort(out.begin(), out.end());
  ++counter_;
}

Policy new_policy(PolicyKind kind, int n, int r, std::uint64_t seed) {
  return Policy(kind, n, r, seed);
}

}  // namespace redsim
