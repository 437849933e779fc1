#include "redsim/indicators.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "redsim/errors.hpp"

namespace redsim {

namespace {

constexpr int kExactLimit = 64;

void check_nr(int n, int r) {
  if (n < 1 || r < 1 || r > n) {
    throw invalid_parameter("overlap pmf requires 1 <= r <= n, got n=" +
                            std::to_string(n) + " r=" + std::to_string(r));
  }
}

OverlapPmf from_exact(int n, int r, std::vector<Rational> exact) {
  OverlapPmf pmf;
  pmf.n = n;
  pmf.r = r;
  pmf.probs.reserve(exact.size());
  for (const auto& q : exact) pmf.probs.push_back(q.to_double());
  pmf.exact = std::move(exact);
  return pmf;
}

}  // namespace

Rational OverlapPmf::moment_exact(int power) const {
  Rational m(0);
  for (int k = 0; k <= r; ++k) {
    long long kp = 1;
    for (int i = 0; i < power; ++i) kp *= k;
    m += Rational(kp) * exact[static_cast<std::size_t>(k)];
  }
  return m;
}

double OverlapPmf::moment(int power) const {
  if (is_exact()) return moment_exact(power).to_double();
  double m = 0;
  for (int k = 0; k <= r; ++k) m += std::pow(k, power) * probs[static_cast<std::size_t>(k)];
  return m;
}

OverlapPmf overlap_pmf_random(int n, int r) {
  check_nr(n, r);
  if (n <= kExactLimit) {
    std::vector<Rational> exact;
    exact.reserve(static_cast<std::size_t>(r) + 1);
    const Rational::Int total = binomial(n, r);
    for (int k = 0; k <= r; ++k) {
      exact.emplace_back(binomial(r, k) * binomial(n - r, r - k), total);
    }
    return from_exact(n, r, std::move(exact));
  }
  OverlapPmf pmf;
  pmf.n = n;
  pmf.r = r;
  auto lc = [](int a, int b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); };
  for (int k = 0; k <= r; ++k) {
    double lp = (r - k <= n - r) ? lc(r, k) + lc(n - r, r - k) - lc(n, r)
                                 : -std::numeric_limits<double>::infinity();
    pmf.probs.push_back(std::exp(lp));
  }
  return pmf;
}

OverlapPmf overlap_pmf_round_robin(int n, int r, std::optional<long long> T) {
  check_nr(n, r);
  if (std::gcd(n, r) != 1) {
    throw unsupported_parameters(
        "round-robin overlap closed form needs gcd(n,r)=1, got n=" + std::to_string(n) +
        " r=" + std::to_string(r) + "; measure empirically instead (redsim urns)");
  }
  if (T && (*T < n || *T % n != 0)) {
    throw invalid_parameter("finite-T round-robin pmf requires n | T and T >= n");
  }
  // P{X=0} = 1 - (2r-1)/n + r/T, P{X=k} = 2/n - 1/T (0<k<r), P{X=r} = 1/n - 1/T.
  const Rational invT = T ? Rational(1, *T) : Rational(0);
  std::vector<Rational> exact(static_cast<std::size_t>(r) + 1, Rational(0));
  exact[static_cast<std::size_t>(r)] = Rational(1, n) - invT;
  for (int k = 1; k < r; ++k) exact[static_cast<std::size_t>(k)] = Rational(2, n) - invT;
  Rational rest(0);
  for (int k = 1; k <= r; ++k) rest += exact[static_cast<std::size_t>(k)];
  exact[0] = Rational(1) - rest;
  return from_exact(n, r, std::move(exact));
}

OverlapPmf overlap_pmf_bibd(int n, int r, std::optional<long long> T) {
  check_nr(n, r);
  if (n != bibd_order(r)) {
    throw invalid_parameter("bibd overlap pmf requires n = r(r-1)+1 = " +
                            std::to_string(bibd_order(r)) + ", got n=" + std::to_string(n));
  }
  if (T && *T % n != 0) {
    throw invalid_parameter("finite-T bibd pmf requires n | T");
  }
  // Distinct blocks of a symmetric unit-lambda design intersect in exactly
  // one point: P{X=1} = (n-1)/n, P{X=r} = 1/n - 1/T, deficit on k=0.
  const Rational invT = T ? Rational(1, *T) : Rational(0);
  std::vector<Rational> exact(static_cast<std::size_t>(r) + 1, Rational(0));
  exact[1] = Rational(n - 1, n);
  exact[static_cast<std::size_t>(r)] = Rational(1, n) - invT;
  exact[0] = invT;
  return from_exact(n, r, std::move(exact));
}

IndicatorSet indicators_from_pmf(const OverlapPmf& pmf, double lbf) {
  IndicatorSet ind;
  ind.lbf = lbf;
  if (pmf.is_exact()) {
    Rational ex = pmf.moment_exact(1);
    Rational ex2 = pmf.moment_exact(2);
    if (ex.num() == 0) {
      throw degenerate_overlap("overlap distribution has E[X]=0; indicators undefined");
    }
    ind.ex = ex.to_double();
    ind.ex2 = ex2.to_double();
    ind.rof = ex.inv().to_double();
    ind.rdf = ex2.inv().to_double();
    return ind;
  }
  double ex = pmf.moment(1);
  double ex2 = pmf.moment(2);
  if (ex <= 0) {
    throw degenerate_overlap("overlap distribution has E[X]=0; indicators undefined");
  }
  ind.ex = ex;
  ind.ex2 = ex2;
  ind.rof = 1.0 / ex;
  ind.rdf = 1.0 / ex2;
  return ind;
}

double lbf_random_asymptotic(int n, int r, long long T) {
  check_nr(n, r);
  if (T < 1) throw invalid_parameter("lbf approximation requires T >= 1");
  const double tn = static_cast<double>(T) * r / n;
  const double dev = std::sqrt(2.0 * static_cast<double>(T) * r * (n - r) *
                               std::log(static_cast<double>(n)) /
                               (static_cast<double>(n) * n));
  const double num = tn - dev;
  if (num <= 0) return 0.0;
  return num / (tn + dev);
}

double lbf_exact_cyclic(PolicyKind kind) {
  if (kind == PolicyKind::Random) {
    throw invalid_parameter("exact unit LBF holds only for the cyclic policies");
  }
  return 1.0;
}

IndicatorSet table1_row(PolicyKind policy, int r, std::optional<long long> T) {
  if (r < 2) {
    throw invalid_parameter("table row requires r >= 2, got r=" + std::to_string(r));
  }
  const long long n = static_cast<long long>(r - 1) * (r - 1) + r;  // (r-1)^2 + r
  IndicatorSet ind;
  switch (policy) {
    case PolicyKind::Random: {
      if (!T) {
        throw invalid_parameter("random LBF is T-dependent; pass T (e.g. --T 50)");
      }
      ind.lbf = lbf_random_asymptotic(static_cast<int>(n), r, *T);
      Rational rof(n, static_cast<long long>(r) * r);
      Rational rdf(n, static_cast<long long>(r) * (2 * r - 1));
      ind.rof = rof.to_double();
      ind.rdf = rdf.to_double();
      ind.ex = rof.inv().to_double();
      ind.ex2 = rdf.inv().to_double();
      break;
    }
    case PolicyKind::RoundRobin: {
      ind.lbf = 1.0;
      Rational rof(n, static_cast<long long>(r) * r);
      Rational rdf(3 * n, 2 * static_cast<long long>(r) * r * r + r);
      ind.rof = rof.to_double();
      ind.rdf = rdf.to_double();
      ind.ex = rof.inv().to_double();
      ind.ex2 = rdf.inv().to_double();
      break;
    }
    case PolicyKind::Bibd: {
      ind.lbf = 1.0;
      Rational rof(n, static_cast<long long>(r) * r);
      Rational rdf(n, static_cast<long long>(r) * (2 * r - 1));
      ind.rof = rof.to_double();
      ind.rdf = rdf.to_double();
      ind.ex = rof.inv().to_double();
      ind.ex2 = rdf.inv().to_double();
      break;
    }
  }
  return ind;
}

}  // namespace redsim
