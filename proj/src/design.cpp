#include "redsim/design.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "redsim/errors.hpp"

namespace redsim {

int bibd_order(int r) {
  if (r < 2) {
    throw invalid_parameter("bibd order requires r >= 2, got r=" + std::to_string(r));
  }
  return r * (r - 1) + 1;
}

bool is_prime_power(int q) {
  if (q < 1) return false;
  if (q == 1) return true;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;  // prime
}

namespace {

// DFS in ascending element order; the first complete set found is the
// lexicographically smallest. `used` tracks which nonzero differences are
// already covered, which prunes almost everything.
bool search_pds(int n, int r, std::vector<int>& cur, std::vector<char>& used) {
  if (static_cast<int>(cur.size()) == r) return true;
  int start = cur.empty() ? 0 : cur.back() + 1;
  for (int c = start; c < n; ++c) {
    int taken = 0;
    bool ok = true;
    for (int e : cur) {
      int d1 = (c - e) % n;
      if (d1 < 0) d1 += n;
      int d2 = n - d1;
      if (d1 == d2 || used[d1] || used[d2]) {
        ok = false;
        break;
      }
      used[d1] = used[d2] = 1;
      ++taken;
    }
    if (ok) {
      cur.push_back(c);
      if (search_pds(n, r, cur, used)) return true;
      cur.pop_back();
    }
    // roll back whatever this candidate marked
    for (int i = 0; i < taken; ++i) {
      int e = cur[i];
      int d1 = (c - e) % n;
      if (d1 < 0) d1 += n;
      used[d1] = used[n - d1] = 0;
    }
  }
  return false;
}

}  // namespace

DifferenceSet find_planar_difference_set(int r) {
  int n = bibd_order(r);
  if (!is_prime_power(r - 1)) {
    throw no_design_available(
        "no (" + std::to_string(n) + "," + std::to_string(r) +
        ",1) design: r-1=" + std::to_string(r - 1) +
        " is not a prime power (projective plane of that order does not exist)");
  }
  // Verified lexicographically smallest sets for the paper's parameter range.
  static const std::map<int, std::vector<int>> cache = {
      {2, {0, 1}},
      {3, {0, 1, 3}},
      {4, {0, 1, 3, 9}},
      {5, {0, 1, 4, 14, 16}},
      {6, {0, 1, 3, 8, 12, 18}},
  };
  if (auto it = cache.find(r); it != cache.end()) {
    return DifferenceSet{n, it->second};
  }
  std::vector<int> cur;
  std::vector<char> used(n, 0);
  cur.reserve(r);
  if (!search_pds(n, r, cur, used)) {
    throw no_design_available("difference-set search exhausted for (n,r)=(" +
                              std::to_string(n) + "," + std::to_string(r) + ")");
  }
  return DifferenceSet{n, cur};
}

Design develop_design(const DifferenceSet& ds) {
  const int n = ds.modulus;
  Design d;
  d.n = n;
  d.r = static_cast<int>(ds.residues.size());
  d.blocks.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> block;
    block.reserve(ds.residues.size());
    for (int v : ds.residues) block.push_back((v + i) % n);
    std::sort(block.begin(), block.end());
    d.blocks.push_back(std::move(block));
  }
  assert(verify_bibd(d, 1).ok);
  return d;
}

VerifyReport verify_bibd(const Design& d, int lambda) {
  VerifyReport rep;
  const int n = d.n;
  auto fail = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (n <= 0) {
    fail("point count must be positive, got n=" + std::to_string(n));
    return rep;
  }

  bool blocks_wellformed = true;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& blk = d.blocks[b];
    std::set<int> uniq(blk.begin(), blk.end());
    if (static_cast<int>(blk.size()) != d.r || uniq.size() != blk.size()) {
      fail("block " + std::to_string(b) + " does not have " + std::to_string(d.r) +
           " distinct points");
      blocks_wellformed = false;
    }
    for (int p : blk) {
      if (p < 0 || p >= n) {
        fail("block " + std::to_string(b) + " contains out-of-range point " +
             std::to_string(p));
        blocks_wellformed = false;
      }
    }
  }

  if (blocks_wellformed) {
    // pair coverage: every unordered pair exactly lambda times
    std::vector<int> paircount(static_cast<std::size_t>(n) * n, 0);
    for (const auto& blk : d.blocks) {
      for (std::size_t i = 0; i < blk.size(); ++i) {
        for (std::size_t j = i + 1; j < blk.size(); ++j) {
          int a = std::min(blk[i], blk[j]);
          int b = std::max(blk[i], blk[j]);
          ++paircount[static_cast<std::size_t>(a) * n + b];
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        int c = paircount[static_cast<std::size_t>(a) * n + b];
        if (c != lambda) {
          std::ostringstream os;
          os << "pair {" << a << "," << b << "} covered " << c << " times, expected "
             << lambda;
          fail(os.str());
        }
      }
    }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

Design make_bibd(int r) { return develop_design(find_planar_difference_set(r)); }

}  // namespace redsim
