#pragma once

#include <optional>
#include <vector>

#include "redsim/policy.hpp"
#include "redsim/rational.hpp"

namespace redsim {

// Distribution of X, the overlap between a round's selection and the initial
// round's selection. Support is {0..r}. Probabilities are exact rationals up
// to n = 64 (every parameter set in this project); beyond that only the
// floating-point view is populated.
struct OverlapPmf {
  int n = 0;
  int r = 0;
  std::vector<double> probs;               // index k = 0..r
  std::vector<Rational> exact;             // empty when not in exact mode
  bool is_exact() const { return !exact.empty(); }

  Rational moment_exact(int power) const;  // requires exact mode
  double moment(int power) const;
};

// LBF/ROF/RDF triple with the underlying overlap moments.
struct IndicatorSet {
  double lbf = 0;
  double rof = 0;
  double rdf = 0;
  double ex = 0;
  double ex2 = 0;
};

// Hypergeometric overlap law of uniform r-subset selection.
OverlapPmf overlap_pmf_random(int n, int r);

// Cyclic-window overlap law of round-robin selection. Requires gcd(n,r)=1
// (otherwise the windows never slide through all phases and the closed form
// is wrong; callers are pointed at empirical measurement). T absent means the
// T -> infinity limit; finite T must be a multiple of n, at least n.
OverlapPmf overlap_pmf_round_robin(int n, int r, std::optional<long long> T = {});

// Block-cycle overlap law of BIBD selection: any two distinct blocks of a
// symmetric unit-lambda design share exactly one point. Requires
// n = r(r-1)+1. Finite-T variant puts the 1/T deficit on k=0.
OverlapPmf overlap_pmf_bibd(int n, int r, std::optional<long long> T = {});

// Folds a pmf into the indicator triple; lbf is supplied by the caller
// (Lemma-based for random, exactly 1 for the cyclic policies).
IndicatorSet indicators_from_pmf(const OverlapPmf& pmf, double lbf);

// Asymptotic load-balancing factor of random selection after T rounds:
// max{0, (Tr/n - s)/(Tr/n + s)} with s = sqrt(2Tr(n-r)ln(n)/n^2).
// Returns 0 exactly for T <= 2(n/r - 1) ln n.
double lbf_random_asymptotic(int n, int r, long long T);

// Round-robin and BIBD distribute selections perfectly when n | T.
double lbf_exact_cyclic(PolicyKind kind);

// The substituted closed forms at n = r(r-1)+1 (the comparison table).
// Computed from the substituted expressions directly, independently of the
// pmf route, so the two can be cross-checked. Random needs T for its LBF.
IndicatorSet table1_row(PolicyKind policy, int r, std::optional<long long> T = {});

}  // namespace redsim
