#include "coxconn/order.hpp"

#include <algorithm>
#include <string>

#include "coxconn/error.hpp"

namespace coxconn {

bool leq(const GroupTable& table, Element u, Element v) {
  if (!table.contains(u) || !table.contains(v)) {
    throw Error(ErrorCode::GroupMismatch, "element does not belong to this group");
  }
  return parabolic_component(table, v, table.support(u)) == u;
}

namespace {

void require_same_symmetric_group(const Permutation& u, const Permutation& v) {
  if (u.type() != GroupType::A || v.type() != GroupType::A || u.size() != v.size()) {
    throw Error(ErrorCode::GroupMismatch, "expected two permutations of the same size");
  }
}

void require_comparable(const GroupTable& table, Element u, Element v) {
  if (!leq(table, u, v)) {
    throw Error(ErrorCode::NotComparable, "elements " + std::to_string(u.index) + " and " +
                                              std::to_string(v.index) + " are not comparable");
  }
}

}  // namespace

bool leq_via_std(const Permutation& u, const Permutation& v) {
  require_same_symmetric_group(u, v);
  return standardize_blocks(v, connectivity_a(u)) == u;
}

bool leq_via_std_pair(const Permutation& u, const Permutation& v) {
  require_same_symmetric_group(u, v);
  const GeneratorSet cu = connectivity_a(u);
  return connectivity_a(v).subset_of(cu) && standardize_blocks(v, cu) == standardize_blocks(u, cu);
}

Interval::Interval(const GroupTable& table, Element u, Element v)
    : table_(&table), bottom_(u), top_(v) {
  require_comparable(table, u, v);
  for_each_between(table.support(u), table.support(v), [&](GeneratorSet i) {
    members_.push_back(parabolic_component(table, v, i));
  });
  std::sort(members_.begin(), members_.end(), [&](Element a, Element b) {
    const auto ra = table.support(a).size();
    const auto rb = table.support(b).size();
    return ra != rb ? ra < rb : a < b;
  });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

  const std::size_t n = members_.size();
  relation_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) relation_[a * n + b] = leq(table, members_[a], members_[b]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (covered_by(a, b)) cover_edges_.emplace_back(a, b);
    }
  }
}

std::optional<std::size_t> Interval::position(Element w) const {
  const auto it = std::find(members_.begin(), members_.end(), w);
  if (it == members_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool Interval::covered_by(std::size_t a, std::size_t b) const {
  if (a == b || !below(a, b)) return false;
  for (std::size_t c = 0; c < size(); ++c) {
    if (c != a && c != b && below(a, c) && below(c, b)) return false;
  }
  return true;
}

std::optional<Element> Interval::least_upper_bound(Element a, Element b) const {
  const auto pa = position(a);
  const auto pb = position(b);
  if (!pa || !pb) throw Error(ErrorCode::NotInInterval, "element outside the interval");
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < size(); ++z) {
    if (below(*pa, z) && below(*pb, z)) bounds.push_back(z);
  }
  for (std::size_t z : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](std::size_t y) { return below(z, y); })) {
      return members_[z];
    }
  }
  return std::nullopt;
}

std::optional<Element> Interval::greatest_lower_bound(Element a, Element b) const {
  const auto pa = position(a);
  const auto pb = position(b);
  if (!pa || !pb) throw Error(ErrorCode::NotInInterval, "element outside the interval");
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < size(); ++z) {
    if (below(z, *pa) && below(z, *pb)) bounds.push_back(z);
  }
  for (std::size_t z : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](std::size_t y) { return below(y, z); })) {
      return members_[z];
    }
  }
  return std::nullopt;
}

std::vector<Element> covers(const GroupTable& table, Element u, Element v) {
  require_comparable(table, u, v);
  const GeneratorSet su = table.support(u);
  const Element x = parabolic_decompose(table, v, su).coset_part;
  std::vector<Element> out;
  for (Generator s : table.descents(x).members()) {
    out.push_back(multiply(table, parabolic_component(table, x, su.with(s)), u));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> lower_covers(const GroupTable& table, Element u, Element v) {
  require_comparable(table, u, v);
  const GeneratorSet sv = table.support(v);
  std::vector<Element> out;
  for (Generator s : (sv - table.support(u)).members()) {
    const Element x = parabolic_component(table, v, sv.without(s));
    if (table.support(x) == sv.without(s)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_members(const Interval& interval, Element w, Element g) {
  if (!interval.contains(w) || !interval.contains(g)) {
    throw Error(ErrorCode::NotInInterval, "element outside the interval");
  }
}

}  // namespace

Element join(const Interval& interval, Element w, Element g) {
  require_members(interval, w, g);
  const auto& t = interval.group();
  return parabolic_component(t, interval.top(), t.support(w) | t.support(g));
}

Element meet(const Interval& interval, Element w, Element g) {
  require_members(interval, w, g);
  const auto& t = interval.group();
  return parabolic_component(t, interval.top(), t.support(w) & t.support(g));
}

std::vector<Element> upset(const GroupTable& table, Element u) {
  const GeneratorSet su = table.support(u);
  std::vector<Element> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Element x{static_cast<std::uint32_t>(i)};
    if ((table.descents(x) & su).empty()) out.push_back(multiply(table, x, u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t upset_size(const GroupTable& table, Element u) {
  return table.size() / parabolic_order(table, table.support(u));
}

GeneratorSet galois_f(const Interval& interval, Element w) {
  if (!interval.contains(w)) throw Error(ErrorCode::OutOfRange, "element outside the interval");
  return interval.group().support(w);
}

Element galois_g(const Interval& interval, GeneratorSet k) {
  if (!interval.lower().subset_of(k) || !k.subset_of(interval.upper())) {
    throw Error(ErrorCode::OutOfRange, "generator set outside [S(u), S(v)]");
  }
  return parabolic_component(interval.group(), interval.top(), k);
}

long long mobius_closed(const GroupTable& table, Element u, Element v) {
  require_comparable(table, u, v);
  if (u == v) return 1;
  const GeneratorSet su = table.support(u);
  const GeneratorSet sv = table.support(v);
  const Element x = parabolic_decompose(table, v, su).coset_part;
  if (su != sv - table.descents(x)) return 0;
  return (sv.size() - su.size()) % 2 == 0 ? 1 : -1;
}

std::vector<long long> mobius_row(const Interval& interval) {
  // Members are sorted by rank, so everything strictly below position x
  // precedes it.
  std::vector<long long> mu(interval.size(), 0);
  const std::size_t bottom = *interval.position(interval.bottom());
  for (std::size_t x = 0; x < interval.size(); ++x) {
    if (x == bottom) {
      mu[x] = 1;
      continue;
    }
    long long sum = 0;
    for (std::size_t y = 0; y < x; ++y) {
      if (interval.below(bottom, y) && interval.below(y, x)) sum += mu[y];
    }
    mu[x] = -sum;
  }
  return mu;
}

long long mobius_recursive(const GroupTable& table, Element u, Element v) {
  const Interval interval(table, u, v);
  return mobius_row(interval)[*interval.position(v)];
}

bool check_graded(const Interval& interval) {
  const std::size_t n = interval.size();
  const auto& t = interval.group();
  const long long expected =
      static_cast<long long>(t.support(interval.top()).size()) - t.support(interval.bottom()).size();
  // Shortest and longest saturated chain from the bottom to each member.
  std::vector<long long> shortest(n, -1), longest(n, -1);
  const std::size_t bottom = *interval.position(interval.bottom());
  shortest[bottom] = longest[bottom] = 0;
  for (std::size_t b = 0; b < n; ++b) {
    for (const auto& [lo, hi] : interval.cover_edges()) {
      if (hi != b || shortest[lo] < 0) continue;
      shortest[b] = shortest[b] < 0 ? shortest[lo] + 1 : std::min(shortest[b], shortest[lo] + 1);
      longest[b] = std::max(longest[b], longest[lo] + 1);
    }
  }
  const std::size_t top = *interval.position(interval.top());
  return shortest[top] == expected && longest[top] == expected;
}

bool check_lattice(const Interval& interval) {
  const auto& m = interval.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!interval.least_upper_bound(m[a], m[b]) || !interval.greatest_lower_bound(m[a], m[b])) {
        return false;
      }
    }
  }
  return true;
}

bool check_upper_semimodular(const Interval& interval) {
  if (!check_lattice(interval)) return false;
  const std::size_t n = interval.size();
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t g = 0; g < n; ++g) {
      if (!interval.covered_by(w, g)) continue;
      for (std::size_t h = g + 1; h < n; ++h) {
        if (!interval.covered_by(w, h)) continue;
        const std::size_t j = *interval.position(
            *interval.least_upper_bound(interval.members()[g], interval.members()[h]));
        if (!interval.covered_by(g, j) || !interval.covered_by(h, j)) return false;
      }
    }
  }
  return true;
}

bool check_lower_semimodular(const Interval& interval) {
  if (!check_lattice(interval)) return false;
  const std::size_t n = interval.size();
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t g = 0; g < n; ++g) {
      if (!interval.covered_by(g, w)) continue;
      for (std::size_t h = g + 1; h < n; ++h) {
        if (!interval.covered_by(h, w)) continue;
        const std::size_t m = *interval.position(
            *interval.greatest_lower_bound(interval.members()[g], interval.members()[h]));
        if (!interval.covered_by(m, g) || !interval.covered_by(m, h)) return false;
      }
    }
  }
  return true;
}

std::vector<long long> mobius_poly(const GroupTable& table, Element v) {
  std::vector<long long> coeffs(table.rank() + 1, 0);
  for_each_between(GeneratorSet{}, table.support(v), [&](GeneratorSet i) {
    const Element x = parabolic_component(table, v, i);
    // Each x ≤ v arises from exactly one I = S(x).
    if (table.support(x) == i) coeffs[i.size()] += mobius_closed(table, table.identity(), x);
  });
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::vector<Element> minimal_upper_bounds(const GroupTable& table, Element a, Element b) {
  std::vector<Element> bounds;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Element z{static_cast<std::uint32_t>(i)};
    if (leq(table, a, z) && leq(table, b, z)) bounds.push_back(z);
  }
  std::vector<Element> minimal;
  for (Element z : bounds) {
    const bool is_min = std::none_of(bounds.begin(), bounds.end(),
                                     [&](Element y) { return y != z && leq(table, y, z); });
    if (is_min) minimal.push_back(z);
  }
  return minimal;
}

}  // namespace coxconn
