#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "coxconn/coxeter_matrix.hpp"
#include "coxconn/generator_set.hpp"

namespace coxconn {

/// An element of a finite Coxeter group, addressed by its index in a GroupTable.
struct Element {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

/// Exhaustive realization of a finite Coxeter group W.
///
/// Elements are numbered in breadth-first order from the identity (index 0),
/// so lengths are non-decreasing along the index. right_multiply(w, s) is ws,
/// where the product uv applies v first and then u. Immutable once built.
class GroupTable {
 public:
  const CoxeterMatrix& matrix() const { return matrix_; }
  unsigned rank() const { return matrix_.rank(); }
  std::size_t size() const { return lengths_.size(); }
  GeneratorSet generators() const { return GeneratorSet::full(rank()); }

  Element identity() const { return Element{0}; }
  Element element(std::size_t index) const;

  unsigned length(Element w) const { return lengths_[w.index]; }
  Element right_multiply(Element w, Generator s) const {
    return Element{mult_[std::size_t{w.index} * rank() + s]};
  }
  bool is_descent(Element w, Generator s) const { return descents_[w.index].contains(s); }

  // Cached at build time; support() agrees with the smallest-descent reduced word.
  GeneratorSet descents(Element w) const { return descents_[w.index]; }
  GeneratorSet support(Element w) const { return supports_[w.index]; }

  bool contains(Element w) const { return w.index < size(); }

 private:
  friend GroupTable build_group_table(const CoxeterMatrix&, std::size_t);
  explicit GroupTable(CoxeterMatrix m) : matrix_(std::move(m)) {}

  CoxeterMatrix matrix_;
  std::vector<std::uint32_t> lengths_;
  std::vector<std::uint32_t> mult_;
  std::vector<GeneratorSet> descents_;
  std::vector<GeneratorSet> supports_;
};

/// Enumerates W by coset enumeration over the trivial subgroup. Throws
/// GroupTooLarge when |W| exceeds element_cap (including every infinite W).
GroupTable build_group_table(const CoxeterMatrix& matrix,
                             std::size_t element_cap = kDefaultElementCap);

GeneratorSet descent_set(const GroupTable& table, Element w);

enum class DescentRule { Smallest, Largest };

/// A reduced word s_1 ... s_l with w = s_1 ... s_l, found by stripping a right
/// descent (the smallest one by default) until reaching e.
std::vector<Generator> reduced_word(const GroupTable& table, Element w,
                                    DescentRule rule = DescentRule::Smallest);

/// Set of generators occurring in a reduced word for w.
GeneratorSet support(const GroupTable& table, Element w);
/// C(w) = S \ S(w).
GeneratorSet connectivity_set(const GroupTable& table, Element w);

/// The unique element of W_K whose descent set is K.
Element longest_element(const GroupTable& table, GeneratorSet k);

struct ParabolicParts {
  Element coset_part;      // w^I, no right descents in I
  Element parabolic_part;  // w_I ∈ W_I
};

/// w = w^I w_I with lengths adding.
ParabolicParts parabolic_decompose(const GroupTable& table, Element w, GeneratorSet i);

inline Element parabolic_component(const GroupTable& table, Element w, GeneratorSet i) {
  return parabolic_decompose(table, w, i).parabolic_part;
}

Element from_word(const GroupTable& table, std::span<const Generator> word);
Element multiply(const GroupTable& table, Element u, Element v);
Element inverse(const GroupTable& table, Element w);

/// |W_I|, by closure from the identity.
std::size_t parabolic_order(const GroupTable& table, GeneratorSet i);

}  // namespace coxconn

template <>
struct std::hash<coxconn::Element> {
  std::size_t operator()(const coxconn::Element& e) const noexcept { return e.index; }
};
