#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxconn/classical.hpp"
#include "coxconn/generator_set.hpp"
#include "coxconn/group_table.hpp"

namespace coxconn {

/// u ≤ v iff the parabolic component of v along S(u) is u.
bool leq(const GroupTable& table, Element u, Element v);

/// Type A: std_{C(u)}(v) = u. Throws GroupMismatch on differing windows.
bool leq_via_std(const Permutation& u, const Permutation& v);
/// Type A: C(v) ⊆ C(u) and std_{C(u)}(v) = std_{C(u)}(u).
bool leq_via_std_pair(const Permutation& u, const Permutation& v);

/// |S(w)|, the rank of w in (W, ≤).
inline unsigned rank(const GroupTable& table, Element w) { return table.support(w).size(); }

/// The interval [u, v] of the connectivity order.
///
/// Members are the distinct parabolic components v_I for S(u) ⊆ I ⊆ S(v),
/// sorted by (rank, element index). The order relation and cover edges among
/// members are computed pairwise with leq() at construction and cached, so
/// the brute-force queries below never consult the closed-form results.
class Interval {
 public:
  /// Throws NotComparable unless u ≤ v.
  Interval(const GroupTable& table, Element u, Element v);

  const GroupTable& group() const { return *table_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  GeneratorSet lower() const { return table_->support(bottom_); }
  GeneratorSet upper() const { return table_->support(top_); }

  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element w) const { return position(w).has_value(); }
  std::optional<std::size_t> position(Element w) const;

  /// Cached pairwise order on members (by position).
  bool below(std::size_t a, std::size_t b) const { return relation_[a * size() + b] != 0; }
  bool below(Element a, Element b) const { return below(*position(a), *position(b)); }

  /// Cover relations a ⋖ b among members, by position, from the cached order.
  const std::vector<std::pair<std::size_t, std::size_t>>& cover_edges() const { return cover_edges_; }
  bool covered_by(std::size_t a, std::size_t b) const;

  /// Least upper bound / greatest lower bound by exhaustive search over the
  /// members; empty when no unique bound exists.
  std::optional<Element> least_upper_bound(Element a, Element b) const;
  std::optional<Element> greatest_lower_bound(Element a, Element b) const;

 private:
  const GroupTable* table_;
  Element bottom_;
  Element top_;
  std::vector<Element> members_;
  std::vector<std::uint8_t> relation_;
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges_;
};

/// Elements covering u in [u, v]: (v^{S(u)})_{S(u)∪{s}} u for s ∈ Des(v^{S(u)}),
/// sorted by element index. Throws NotComparable.
std::vector<Element> covers(const GroupTable& table, Element u, Element v);

/// Elements of [u, v] covered by v: v_{S(v) \ {s}} for s ∈ S(v) \ S(u) whose
/// component has rank |S(v)| - 1, sorted by element index. Throws NotComparable.
std::vector<Element> lower_covers(const GroupTable& table, Element u, Element v);

/// v_{S(w) ∪ S(g)}. Throws NotInInterval.
Element join(const Interval& interval, Element w, Element g);
/// v_{S(w) ∩ S(g)}. Throws NotInInterval.
Element meet(const Interval& interval, Element w, Element g);

/// {w : w ≥ u}, built as X_{S(u)}·u and sorted by element index.
std::vector<Element> upset(const GroupTable& table, Element u);
/// [W : W_{S(u)}].
std::size_t upset_size(const GroupTable& table, Element u);

/// F(w) = S(w). Throws OutOfRange for w outside the interval.
GeneratorSet galois_f(const Interval& interval, Element w);
/// G_v(K) = v_K. Throws OutOfRange unless S(u) ⊆ K ⊆ S(v).
Element galois_g(const Interval& interval, GeneratorSet k);

/// μ(u, v) from the descent criterion on v^{S(u)}. Throws NotComparable.
long long mobius_closed(const GroupTable& table, Element u, Element v);
/// μ(u, v) by the defining recursion over [u, v]. Throws NotComparable.
long long mobius_recursive(const GroupTable& table, Element u, Element v);
/// μ(u, x) for every member x of the interval, by recursion (indexed by position).
std::vector<long long> mobius_row(const Interval& interval);

/// Every maximal chain has length |S(v)| - |S(u)|.
bool check_graded(const Interval& interval);
/// Every pair of members has a unique join and meet within the interval.
bool check_lattice(const Interval& interval);
/// Lattice, and if g, h cover w then g ∨ h covers both.
bool check_upper_semimodular(const Interval& interval);
/// Lattice, and if w covers g and h then g and h both cover g ∧ h.
bool check_lower_semimodular(const Interval& interval);

/// Coefficients of Σ_{x ≤ v} μ(e, x) t^{|S(x)|}, lowest degree first, with
/// trailing zeros removed.
std::vector<long long> mobius_poly(const GroupTable& table, Element v);

/// Minimal elements of {z ∈ W : a ≤ z, b ≤ z}, by exhaustive search.
std::vector<Element> minimal_upper_bounds(const GroupTable& table, Element a, Element b);

}  // namespace coxconn
