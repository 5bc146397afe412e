#pragma once

#include <cstdint>
#include <vector>

#include "coxconn/classical.hpp"

namespace coxconn {

inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000;

/// |W_n|: n!, 2^n n!, 2^(n-1) n!. Throws GroupTooLarge on overflow.
std::uint64_t classical_order(GroupType type, unsigned n);

/// counts[k] = number of windows of size n with |C(w)| = k, for k = 0 .. rank.
/// Enumerates every window and applies the closed-form connectivity test.
/// Throws GroupTooLarge when |W_n| exceeds cap.
std::vector<std::uint64_t> count_by_connectivity(GroupType type, unsigned n,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

/// rows[n] = count_by_connectivity(type, n) for every admissible n <= max_n
/// (n >= 1 for A and B, n >= 2 for D; lower rows are empty).
struct CountTable {
  GroupType type;
  unsigned max_n;
  std::vector<std::vector<std::uint64_t>> rows;
};

CountTable count_table(GroupType type, unsigned max_n, std::uint64_t cap = kDefaultEnumerationCap);

/// Blocks std(w_1), ..., std(w_{k+1}) of w cut at its connectivity set.
std::vector<Permutation> decompose_by_connectivity(const Permutation& w);

/// Inverse of decompose_by_connectivity: the direct sum of the blocks.
Permutation concatenate_blocks(const std::vector<Permutation>& blocks);

}  // namespace coxconn
