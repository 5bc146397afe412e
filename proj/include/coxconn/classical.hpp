#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxconn/coxeter_matrix.hpp"
#include "coxconn/generator_set.hpp"
#include "coxconn/group_table.hpp"

namespace coxconn {

enum class GroupType { A, B, D };

GroupType parse_group_type(std::string_view text);
char to_char(GroupType type);

/// Coxeter matrix for the group acting on windows of size n: S_n for A
/// (rank n-1), B_n and D_n (rank n).
CoxeterMatrix classical_matrix(GroupType type, unsigned n);

/// Coxeter rank of the group acting on windows of size n.
unsigned classical_rank(GroupType type, unsigned n);

/// Offset from engine index to the conventional label: τ_1.. in type A,
/// τ_0/t_0.. in types B and D.
inline int label_offset(GroupType type) { return type == GroupType::A ? 1 : 0; }

/// Window w(1) ... w(n). Type A windows are permutations of [1, n]; signed
/// windows have |w| a permutation of [1, n], the negative half being implied
/// by w(-i) = -w(i). Type D additionally requires an even number of negative
/// entries. Products compose as functions: (uv)(i) = u(v(i)).
class Window {
 public:
  /// Throws InvalidWindow.
  Window(GroupType type, std::vector<int> entries);
  static Window identity(GroupType type, unsigned n);

  GroupType type() const { return type_; }
  unsigned size() const { return static_cast<unsigned>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  /// w(i) for 1 <= |i| <= n.
  int operator()(int i) const { return i > 0 ? entries_[i - 1] : -entries_[-i - 1]; }

  /// Signed position p with w(p) = value.
  int preimage(int value) const;
  unsigned negative_count() const;

  /// w·s for the engine generator index s of this type.
  Window right_multiply(Generator s) const;
  Window operator*(const Window& v) const;
  Window inverse() const;

  /// Number of inversions (the Coxeter length in type A only).
  unsigned inversions() const;

  /// Space separated, e.g. "-2 -1 3".
  std::string to_string() const;

  bool operator==(const Window&) const = default;
  auto operator<=>(const Window& o) const { return entries_ <=> o.entries_; }

 private:
  Window(GroupType type, std::vector<int> entries, bool /*trusted*/)
      : type_(type), entries_(std::move(entries)) {}

  GroupType type_;
  std::vector<int> entries_;
};

using Permutation = Window;

/// Parses "2 1 3 4" (whitespace or commas). Throws ParseError / InvalidWindow.
Window parse_window(GroupType type, std::string_view text);

GeneratorSet connectivity_a(const Window& w);
GeneratorSet connectivity_b(const Window& w);
GeneratorSet connectivity_d(const Window& w);
/// Dispatches on w.type().
GeneratorSet connectivity(const Window& w);

/// The permutation with the same inversion pattern as word; equal letters
/// are ordered left to right.
template <typename T>
Permutation standardize(std::span<const T> word) {
  std::vector<unsigned> pos(word.size());
  std::iota(pos.begin(), pos.end(), 0u);
  std::stable_sort(pos.begin(), pos.end(),
                   [&](unsigned a, unsigned b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (unsigned r = 0; r < pos.size(); ++r) out[pos[r]] = static_cast<int>(r + 1);
  return Permutation(GroupType::A, std::move(out));
}

inline Permutation standardize(std::string_view word) {
  return standardize(std::span<const char>(word.data(), word.size()));
}

/// std_I(w): cut the window after each position i with τ_i ∈ cuts (engine
/// bit i-1), standardize each block and shift it into place.
Permutation standardize_blocks(const Permutation& w, GeneratorSet cuts);

struct Composition {
  std::vector<unsigned> parts;
  bool operator==(const Composition&) const = default;
};

/// (i_1, i_2 - i_1, ..., n - i_k) for cuts {τ_i1 < ... < τ_ik}.
Composition composition_of(GeneratorSet cuts, unsigned n);

template <typename Fn>
void for_each_window(GroupType type, unsigned n, Fn&& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (type == GroupType::A) {
      fn(Window(type, perm));
      continue;
    }
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
      if (type == GroupType::D && std::popcount(signs) % 2 != 0) continue;
      std::vector<int> e = perm;
      for (unsigned i = 0; i < n; ++i) {
        if (signs >> i & 1) e[i] = -e[i];
      }
      fn(Window(type, std::move(e)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Bijection between windows of a classical type and the elements of an
/// engine table built from classical_matrix(type, n). Construction walks the
/// table breadth-first applying the window action of each generator and
/// throws RankMismatch if the two realizations disagree.
class TypedIndex {
 public:
  TypedIndex(const GroupTable& table, GroupType type, unsigned n);

  GroupType type() const { return type_; }
  unsigned n() const { return n_; }
  const GroupTable& table() const { return *table_; }

  /// Throws RankMismatch if w has the wrong type or size.
  Element to_engine(const Window& w) const;
  const Window& from_engine(Element e) const { return windows_[e.index]; }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  const GroupTable* table_;
  GroupType type_;
  unsigned n_;
  std::vector<Window> windows_;
  std::unordered_map<std::vector<int>, Element, Hash> index_;
};

/// A classical group's engine table together with its window index.
class ClassicalGroup {
 public:
  ClassicalGroup(GroupType type, unsigned n, std::size_t element_cap = kDefaultElementCap)
      : table_(build_group_table(classical_matrix(type, n), element_cap)), index_(table_, type, n) {}
  ClassicalGroup(const ClassicalGroup&) = delete;
  ClassicalGroup& operator=(const ClassicalGroup&) = delete;

  GroupType type() const { return index_.type(); }
  unsigned n() const { return index_.n(); }
  const GroupTable& table() const { return table_; }
  const TypedIndex& index() const { return index_; }

  Element element(const Window& w) const { return index_.to_engine(w); }
  Element element(std::string_view text) const { return index_.to_engine(parse_window(type(), text)); }
  const Window& window(Element e) const { return index_.from_engine(e); }

 private:
  GroupTable table_;
  TypedIndex index_;
};

}  // namespace coxconn
