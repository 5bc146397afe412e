#include "coxconn/enumeration.hpp"

#include <limits>
#include <string>

#include "coxconn/error.hpp"

namespace coxconn {

std::uint64_t classical_order(GroupType type, unsigned n) {
  std::uint64_t order = 1;
  auto mul = [&](std::uint64_t f) {
    if (order > std::numeric_limits<std::uint64_t>::max() / f) {
      throw Error(ErrorCode::GroupTooLarge, "group order overflows 64 bits");
    }
    order *= f;
  };
  for (unsigned i = 2; i <= n; ++i) mul(i);
  if (type != GroupType::A) {
    for (unsigned i = type == GroupType::D ? 1 : 0; i < n; ++i) mul(2);
  }
  return order;
}

std::vector<std::uint64_t> count_by_connectivity(GroupType type, unsigned n, std::uint64_t cap) {
  const unsigned min_n = type == GroupType::D ? 2 : 1;
  if (n < min_n) throw Error(ErrorCode::OutOfRange, "window size too small for this type");
  if (classical_order(type, n) > cap) {
    throw Error(ErrorCode::GroupTooLarge, "group of order " + std::to_string(classical_order(type, n)) +
                                              " exceeds enumeration cap " + std::to_string(cap));
  }
  // Type A on one letter has rank 0; its single element has C = ∅.
  std::vector<std::uint64_t> counts(classical_rank(type, n) + 1, 0);
  for_each_window(type, n, [&](const Window& w) { ++counts[connectivity(w).size()]; });
  return counts;
}

CountTable count_table(GroupType type, unsigned max_n, std::uint64_t cap) {
  CountTable table{type, max_n, std::vector<std::vector<std::uint64_t>>(max_n + 1)};
  const unsigned min_n = type == GroupType::D ? 2 : 1;
  for (unsigned n = min_n; n <= max_n; ++n) table.rows[n] = count_by_connectivity(type, n, cap);
  return table;
}

std::vector<Permutation> decompose_by_connectivity(const Permutation& w) {
  if (w.type() != GroupType::A) throw Error(ErrorCode::GroupMismatch, "expected a permutation");
  const Composition parts = composition_of(connectivity_a(w), w.size());
  std::vector<Permutation> blocks;
  unsigned start = 0;
  for (unsigned part : parts.parts) {
    blocks.push_back(standardize(w.entries().subspan(start, part)));
    start += part;
  }
  return blocks;
}

Permutation concatenate_blocks(const std::vector<Permutation>& blocks) {
  std::vector<int> out;
  int offset = 0;
  for (const auto& b : blocks) {
    for (int v : b.entries()) out.push_back(v + offset);
    offset += static_cast<int>(b.size());
  }
  return Permutation(GroupType::A, std::move(out));
}

}  // namespace coxconn
