#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coxconn {

using Generator = unsigned;

inline constexpr unsigned kMaxRank = 64;

/// A subset of the simple generators S = {0, ..., rank-1}, stored as a bitmask.
///
/// Used for supports S(w), connectivity sets C(w), descent sets Des(w) and the
/// parabolic index sets I, J, K.
class GeneratorSet {
 public:
  using Mask = std::uint64_t;

  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(Mask mask) : mask_(mask) {}
  constexpr GeneratorSet(std::initializer_list<Generator> members) {
    for (Generator s : members) mask_ |= bit(s);
  }

  static constexpr GeneratorSet full(unsigned rank) {
    return GeneratorSet(rank >= 64 ? ~Mask{0} : (Mask{1} << rank) - 1);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }
  constexpr bool contains(Generator s) const { return (mask_ & bit(s)) != 0; }
  constexpr bool subset_of(GeneratorSet other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr GeneratorSet with(Generator s) const { return GeneratorSet(mask_ | bit(s)); }
  constexpr GeneratorSet without(Generator s) const { return GeneratorSet(mask_ & ~bit(s)); }
  constexpr void insert(Generator s) { mask_ |= bit(s); }
  constexpr void erase(Generator s) { mask_ &= ~bit(s); }

  constexpr GeneratorSet operator|(GeneratorSet o) const { return GeneratorSet(mask_ | o.mask_); }
  constexpr GeneratorSet operator&(GeneratorSet o) const { return GeneratorSet(mask_ & o.mask_); }
  /// Set difference.
  constexpr GeneratorSet operator-(GeneratorSet o) const { return GeneratorSet(mask_ & ~o.mask_); }

  constexpr bool operator==(const GeneratorSet&) const = default;
  constexpr auto operator<=>(const GeneratorSet&) const = default;

  std::vector<Generator> members() const;

  /// Renders as "{a,b,c}" with each generator shifted by label_offset.
  std::string to_string(int label_offset = 0) const;

 private:
  static constexpr Mask bit(Generator s) { return Mask{1} << s; }

  Mask mask_ = 0;
};

/// Calls fn(K) for every K with lower ⊆ K ⊆ upper, in increasing mask order.
template <typename Fn>
void for_each_between(GeneratorSet lower, GeneratorSet upper, Fn&& fn) {
  const GeneratorSet::Mask free = (upper - lower).mask();
  GeneratorSet::Mask sub = 0;
  while (true) {
    fn(GeneratorSet(lower.mask() | sub));
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

}  // namespace coxconn
