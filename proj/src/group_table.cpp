#include "coxconn/group_table.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "coxconn/error.hpp"

namespace coxconn {

namespace {

// Hasse-Lewis-Todd-Coxeter enumeration of the cosets of the trivial subgroup.
// Every generator is an involution, so a single column serves both s and s^-1
// and the relators s^2 are built into the table.
class CosetEnumerator {
 public:
  CosetEnumerator(const CoxeterMatrix& m, std::size_t coset_limit)
      : rank_(m.rank()), limit_(coset_limit) {
    for (Generator s = 0; s < rank_; ++s) {
      for (Generator t = s + 1; t < rank_; ++t) {
        const unsigned order = m(s, t);
        if (order == CoxeterMatrix::kInfinity) continue;
        std::vector<Generator> r;
        for (unsigned k = 0; k < order; ++k) {
          r.push_back(s);
          r.push_back(t);
        }
        relators_.push_back(std::move(r));
      }
    }
    new_coset();
  }

  void run() {
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(parent_.size()); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      if (!live(c)) continue;
      for (Generator s = 0; s < rank_; ++s) {
        if (at(c, s) < 0) define(c, s);
      }
    }
  }

  bool live(std::int32_t c) const { return parent_[c] == c; }
  std::int32_t entry(std::int32_t c, Generator s) const { return table_[std::size_t(c) * rank_ + s]; }
  std::size_t defined() const { return parent_.size(); }

 private:
  std::int32_t& at(std::int32_t c, Generator s) { return table_[std::size_t(c) * rank_ + s]; }

  std::int32_t new_coset() {
    if (parent_.size() >= limit_) {
      throw Error(ErrorCode::GroupTooLarge,
                  "coset enumeration exceeded " + std::to_string(limit_) +
                      " cosets; group is infinite or larger than the element cap");
    }
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + rank_, -1);
    return c;
  }

  void define(std::int32_t c, Generator s) {
    const std::int32_t d = new_coset();
    at(c, s) = d;
    at(d, s) = c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::int32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      const std::int32_t e = queue_.front();
      queue_.pop_front();
      for (Generator s = 0; s < rank_; ++s) {
        const std::int32_t f = at(e, s);
        if (f < 0) continue;
        at(f, s) = -1;
        const std::int32_t e1 = rep(e);
        const std::int32_t f1 = rep(f);
        if (at(e1, s) >= 0) {
          merge(f1, at(e1, s));
        } else if (at(f1, s) >= 0) {
          merge(e1, at(f1, s));
        } else {
          at(e1, s) = f1;
          at(f1, s) = e1;
        }
      }
    }
  }

  void scan_and_fill(std::int32_t c, const std::vector<Generator>& word) {
    std::int32_t f = c;
    std::int32_t b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(word.size()) - 1;
    while (true) {
      while (i <= j && at(f, word[i]) >= 0) f = at(f, word[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, word[j]) >= 0) b = at(b, word[j--]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, word[i]) = b;
        at(b, word[i]) = f;
        return;
      }
      define(f, word[i]);
    }
  }

  unsigned rank_;
  std::size_t limit_;
  std::vector<std::vector<Generator>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::deque<std::int32_t> queue_;
};

}  // namespace

GroupTable build_group_table(const CoxeterMatrix& matrix, std::size_t element_cap) {
  const unsigned rank = matrix.rank();
  // HLT overshoots the final index; allow headroom before declaring overflow.
  const std::size_t limit =
      std::min<std::size_t>(element_cap * 4 + 4096, std::numeric_limits<std::int32_t>::max());
  CosetEnumerator tc(matrix, limit);
  tc.run();

  // Renumber live cosets breadth-first from the identity coset.
  std::vector<std::int32_t> new_index(tc.defined(), -1);
  std::vector<std::int32_t> order;
  new_index[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (order.size() > element_cap) {
      throw Error(ErrorCode::GroupTooLarge,
                  "group has more than " + std::to_string(element_cap) + " elements");
    }
    const std::int32_t c = order[head];
    for (Generator s = 0; s < rank; ++s) {
      const std::int32_t d = tc.entry(c, s);
      if (d < 0 || !tc.live(d)) {
        throw Error(ErrorCode::InvalidMatrix, "coset enumeration left an incomplete table");
      }
      if (new_index[d] < 0) {
        new_index[d] = static_cast<std::int32_t>(order.size());
        order.push_back(d);
      }
    }
  }
  if (order.size() > element_cap) {
    throw Error(ErrorCode::GroupTooLarge,
                "group has more than " + std::to_string(element_cap) + " elements");
  }

  GroupTable table(matrix);
  const std::size_t n = order.size();
  table.lengths_.assign(n, std::numeric_limits<std::uint32_t>::max());
  table.mult_.resize(n * rank);
  for (std::size_t w = 0; w < n; ++w) {
    for (Generator s = 0; s < rank; ++s) {
      table.mult_[w * rank + s] = static_cast<std::uint32_t>(new_index[tc.entry(order[w], s)]);
    }
  }
  table.lengths_[0] = 0;
  for (std::size_t w = 0; w < n; ++w) {
    for (Generator s = 0; s < rank; ++s) {
      auto& l = table.lengths_[table.mult_[w * rank + s]];
      l = std::min(l, table.lengths_[w] + 1);
    }
  }

  table.descents_.resize(n);
  table.supports_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    for (Generator s = 0; s < rank; ++s) {
      const std::uint32_t ws = table.mult_[w * rank + s];
      const auto lw = table.lengths_[w];
      const auto lws = table.lengths_[ws];
      if (table.mult_[std::size_t{ws} * rank + s] != w || (lws != lw + 1 && lw != lws + 1)) {
        throw Error(ErrorCode::InvalidMatrix, "group table violates the length or involution law");
      }
      if (lws < lw) table.descents_[w].insert(s);
    }
    // Smallest descent first: S(w) = S(ws) ∪ {s}; ws has a smaller index.
    if (w != 0) {
      const auto s = static_cast<Generator>(std::countr_zero(table.descents_[w].mask()));
      table.supports_[w] = table.supports_[table.mult_[w * rank + s]].with(s);
    }
  }

  for (Generator s = 0; s < rank; ++s) {
    for (Generator t = s + 1; t < rank; ++t) {
      const unsigned m = matrix(s, t);
      if (m == CoxeterMatrix::kInfinity) continue;
      for (std::size_t w = 0; w < n; ++w) {
        std::size_t x = w;
        for (unsigned k = 0; k < m; ++k) {
          x = table.mult_[x * rank + s];
          x = table.mult_[x * rank + t];
        }
        if (x != w) throw Error(ErrorCode::InvalidMatrix, "braid relation fails in group table");
      }
    }
  }
  return table;
}

Element GroupTable::element(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorCode::OutOfRange, "element index " + std::to_string(index) + " out of range");
  }
  return Element{static_cast<std::uint32_t>(index)};
}

GeneratorSet descent_set(const GroupTable& table, Element w) {
  GeneratorSet out;
  for (Generator s = 0; s < table.rank(); ++s) {
    if (table.length(table.right_multiply(w, s)) < table.length(w)) out.insert(s);
  }
  return out;
}

std::vector<Generator> reduced_word(const GroupTable& table, Element w, DescentRule rule) {
  std::vector<Generator> word;
  word.reserve(table.length(w));
  while (w != table.identity()) {
    const auto mask = table.descents(w).mask();
    const auto s = static_cast<Generator>(rule == DescentRule::Smallest
                                              ? std::countr_zero(mask)
                                              : 63 - std::countl_zero(mask));
    word.push_back(s);
    w = table.right_multiply(w, s);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

GeneratorSet support(const GroupTable& table, Element w) {
  GeneratorSet out;
  for (Generator s : reduced_word(table, w)) out.insert(s);
  return out;
}

GeneratorSet connectivity_set(const GroupTable& table, Element w) {
  return table.generators() - table.support(w);
}

Element longest_element(const GroupTable& table, GeneratorSet k) {
  Element w = table.identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (Generator s : k.members()) {
      if (!table.is_descent(w, s)) {
        w = table.right_multiply(w, s);
        grew = true;
      }
    }
  }
  return w;
}

ParabolicParts parabolic_decompose(const GroupTable& table, Element w, GeneratorSet i) {
  std::vector<Generator> stripped;
  while (true) {
    const GeneratorSet d = table.descents(w) & i;
    if (d.empty()) break;
    const auto s = static_cast<Generator>(std::countr_zero(d.mask()));
    stripped.push_back(s);
    w = table.right_multiply(w, s);
  }
  // Stripped generators were removed from the right, so w_I is their reverse.
  Element parabolic = table.identity();
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it) {
    parabolic = table.right_multiply(parabolic, *it);
  }
  return {w, parabolic};
}

Element from_word(const GroupTable& table, std::span<const Generator> word) {
  Element w = table.identity();
  for (Generator s : word) {
    if (s >= table.rank()) throw Error(ErrorCode::OutOfRange, "generator out of range");
    w = table.right_multiply(w, s);
  }
  return w;
}

Element multiply(const GroupTable& table, Element u, Element v) {
  for (Generator s : reduced_word(table, v)) u = table.right_multiply(u, s);
  return u;
}

Element inverse(const GroupTable& table, Element w) {
  auto word = reduced_word(table, w);
  std::reverse(word.begin(), word.end());
  return from_word(table, word);
}

std::size_t parabolic_order(const GroupTable& table, GeneratorSet i) {
  std::vector<char> seen(table.size(), 0);
  std::vector<Element> frontier{table.identity()};
  seen[0] = 1;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (Generator s : i.members()) {
      const Element x = table.right_multiply(frontier[head], s);
      if (!seen[x.index]) {
        seen[x.index] = 1;
        frontier.push_back(x);
      }
    }
  }
  return frontier.size();
}

}  // namespace coxconn
