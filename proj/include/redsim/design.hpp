#pragma once

#include <string>
#include <vector>

namespace redsim {

// r residues mod n whose pairwise differences cover every nonzero residue
// exactly once. Cyclic shifts of such a set generate a symmetric (n, r, 1)
// block design.
struct DifferenceSet {
  int modulus = 0;
  std::vector<int> residues;
};

// A set of n blocks over points {0..n-1}, each block an r-subset, every pair
// of distinct points covered by exactly one block. Blocks are kept in cyclic
// development order; the BIBD scheduling policy cycles through them.
struct Design {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> blocks;
};

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> violations;
};

// n = r(r-1)+1, the order forced on a symmetric design with unit pair count.
// Throws invalid_parameter for r < 2.
int bibd_order(int r);

// True when q is 1 or a prime power (the orders for which the cyclic
// construction below is known to succeed).
bool is_prime_power(int q);

// Lexicographically smallest planar difference set of size r, found by
// depth-first search with a cache for r in {2..6}. Throws
// no_design_available when r-1 is not a prime power or the search exhausts.
DifferenceSet find_planar_difference_set(int r);

// Cyclic development: block i = { (d + i) mod n : d in residues }.
Design develop_design(const DifferenceSet& ds);

// Checks the three design properties (point range/block sizes, pair coverage
// with the given lambda, |X| = n points). Accepts arbitrary input; malformed
// blocks are reported as violations rather than thrown.
VerifyReport verify_bibd(const Design& d, int lambda);

// Convenience: find + develop for a given r.
Design make_bibd(int r);

}  // namespace redsim
