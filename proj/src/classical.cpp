#include "coxconn/classical.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

#include "coxconn/error.hpp"

namespace coxconn {

GroupType parse_group_type(std::string_view text) {
  if (text == "A" || text == "a") return GroupType::A;
  if (text == "B" || text == "b") return GroupType::B;
  if (text == "D" || text == "d") return GroupType::D;
  throw Error(ErrorCode::ParseError, "unknown group type '" + std::string(text) + "'");
}

char to_char(GroupType type) {
  switch (type) {
    case GroupType::A: return 'A';
    case GroupType::B: return 'B';
    case GroupType::D: return 'D';
  }
  return '?';
}

unsigned classical_rank(GroupType type, unsigned n) {
  return type == GroupType::A ? n - 1 : n;
}

CoxeterMatrix classical_matrix(GroupType type, unsigned n) {
  switch (type) {
    case GroupType::A:
      if (n < 2) throw Error(ErrorCode::InvalidMatrix, "type A needs n >= 2");
      return CoxeterMatrix::type_a(n - 1);
    case GroupType::B: return CoxeterMatrix::type_b(n);
    case GroupType::D: return CoxeterMatrix::type_d(n);
  }
  throw Error(ErrorCode::InvalidMatrix, "unknown group type");
}

Window::Window(GroupType type, std::vector<int> entries) : type_(type), entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0) throw Error(ErrorCode::InvalidWindow, "empty window");
  std::vector<char> seen(n + 1, 0);
  for (int v : entries_) {
    const auto a = static_cast<std::size_t>(std::abs(static_cast<long>(v)));
    if (a < 1 || a > n || seen[a]) {
      throw Error(ErrorCode::InvalidWindow, "window '" + to_string() + "' is not a bijection");
    }
    seen[a] = 1;
    if (v < 0 && type_ == GroupType::A) {
      throw Error(ErrorCode::InvalidWindow, "type A windows have no negative entries");
    }
  }
  if (type_ == GroupType::D && negative_count() % 2 != 0) {
    throw Error(ErrorCode::InvalidWindow, "type D windows need an even number of negative entries");
  }
}

Window Window::identity(GroupType type, unsigned n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Window(type, std::move(e));
}

int Window::preimage(int value) const {
  for (std::size_t p = 0; p < entries_.size(); ++p) {
    if (entries_[p] == value) return static_cast<int>(p + 1);
    if (entries_[p] == -value) return -static_cast<int>(p + 1);
  }
  throw Error(ErrorCode::OutOfRange, "value out of window range");
}

unsigned Window::negative_count() const {
  return static_cast<unsigned>(std::count_if(entries_.begin(), entries_.end(), [](int v) { return v < 0; }));
}

Window Window::right_multiply(Generator s) const {
  std::vector<int> e = entries_;
  if (type_ == GroupType::A) {
    if (s + 1 >= e.size()) throw Error(ErrorCode::OutOfRange, "generator out of range");
    std::swap(e[s], e[s + 1]);
  } else if (s == 0) {
    if (type_ == GroupType::B) {
      e[0] = -e[0];
    } else {
      if (e.size() < 2) throw Error(ErrorCode::OutOfRange, "generator out of range");
      // t0(1) = -2, t0(2) = -1
      const int a = e[0];
      e[0] = -e[1];
      e[1] = -a;
    }
  } else {
    if (s >= e.size()) throw Error(ErrorCode::OutOfRange, "generator out of range");
    std::swap(e[s - 1], e[s]);
  }
  return Window(type_, std::move(e), true);
}

Window Window::operator*(const Window& v) const {
  if (v.type_ != type_ || v.size() != size()) {
    throw Error(ErrorCode::GroupMismatch, "cannot multiply windows of different groups");
  }
  std::vector<int> e(size());
  for (unsigned i = 0; i < size(); ++i) e[i] = (*this)(v.entries_[i]);
  return Window(type_, std::move(e), true);
}

Window Window::inverse() const {
  std::vector<int> e(size());
  for (unsigned i = 0; i < size(); ++i) {
    const int v = entries_[i];
    const int p = static_cast<int>(i + 1);
    if (v > 0) e[v - 1] = p;
    else e[-v - 1] = -p;
  }
  return Window(type_, std::move(e), true);
}

unsigned Window::inversions() const {
  unsigned count = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      if (entries_[i] > entries_[j]) ++count;
    }
  }
  return count;
}

std::string Window::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Window parse_window(GroupType type, std::string_view text) {
  std::vector<int> entries;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const char* first = text.data() + i;
    const char* last = text.data() + j;
    if (*first == '+') ++first;
    int v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw Error(ErrorCode::ParseError, "bad window entry '" + std::string(text.substr(i, j - i)) + "'");
    }
    entries.push_back(v);
    i = j;
  }
  if (entries.empty()) throw Error(ErrorCode::ParseError, "empty window");
  return Window(type, std::move(entries));
}

GeneratorSet connectivity_a(const Window& w) {
  const unsigned n = w.size();
  std::vector<int> suffix_min(n + 1, std::numeric_limits<int>::max());
  for (unsigned k = n; k-- > 0;) suffix_min[k] = std::min(suffix_min[k + 1], w(static_cast<int>(k + 1)));
  GeneratorSet out;
  int prefix_max = std::numeric_limits<int>::min();
  for (unsigned i = 1; i < n; ++i) {
    prefix_max = std::max(prefix_max, w(static_cast<int>(i)));
    if (prefix_max < suffix_min[i]) out.insert(i - 1);  // τ_i
  }
  return out;
}

namespace {

// max(0, |w(1)|, ..., |w(i)|) < min(w(i+1), ..., w(n)) for i = 0 .. n-1.
std::vector<bool> signed_cut_condition(const Window& w) {
  const unsigned n = w.size();
  std::vector<int> suffix_min(n + 1, std::numeric_limits<int>::max());
  for (unsigned k = n; k-- > 0;) suffix_min[k] = std::min(suffix_min[k + 1], w(static_cast<int>(k + 1)));
  std::vector<bool> holds(n, false);
  int prefix_max = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (i > 0) prefix_max = std::max(prefix_max, std::abs(w(static_cast<int>(i))));
    holds[i] = prefix_max < suffix_min[i];
  }
  return holds;
}

}  // namespace

GeneratorSet connectivity_b(const Window& w) {
  if (w.type() != GroupType::B) throw Error(ErrorCode::GroupMismatch, "expected a type B window");
  const auto holds = signed_cut_condition(w);
  GeneratorSet out;
  for (unsigned i = 0; i < holds.size(); ++i) {
    if (holds[i]) out.insert(i);
  }
  return out;
}

GeneratorSet connectivity_d(const Window& w) {
  if (w.type() != GroupType::D) throw Error(ErrorCode::GroupMismatch, "expected a type D window");
  const auto holds = signed_cut_condition(w);
  GeneratorSet out;
  for (unsigned i = 0; i < holds.size(); ++i) {
    if (i != 1 && holds[i]) out.insert(i);
  }
  const bool fixes_one = w(1) == 1 && w.negative_count() == 0;
  const bool swaps_one = w(1) < -1 && w.preimage(1) < -1 && w.negative_count() == 2;
  if (fixes_one || swaps_one) out.insert(1);
  return out;
}

GeneratorSet connectivity(const Window& w) {
  switch (w.type()) {
    case GroupType::A: return connectivity_a(w);
    case GroupType::B: return connectivity_b(w);
    case GroupType::D: return connectivity_d(w);
  }
  return {};
}

Permutation standardize_blocks(const Permutation& w, GeneratorSet cuts) {
  if (w.type() != GroupType::A) throw Error(ErrorCode::GroupMismatch, "standardization needs a permutation");
  const unsigned n = w.size();
  if (!cuts.subset_of(GeneratorSet::full(n - 1))) {
    throw Error(ErrorCode::OutOfRange, "cut positions must lie in [1, n-1]");
  }
  std::vector<int> out(n);
  unsigned start = 0;
  for (unsigned part : composition_of(cuts, n).parts) {
    const auto block = w.entries().subspan(start, part);
    const auto local = standardize(block);
    for (unsigned k = 0; k < part; ++k) out[start + k] = local(static_cast<int>(k + 1)) + static_cast<int>(start);
    start += part;
  }
  return Permutation(GroupType::A, std::move(out));
}

Composition composition_of(GeneratorSet cuts, unsigned n) {
  if (n == 0 || !cuts.subset_of(GeneratorSet::full(n - 1))) {
    throw Error(ErrorCode::OutOfRange, "cut positions must lie in [1, n-1]");
  }
  Composition c;
  unsigned prev = 0;
  for (Generator s : cuts.members()) {
    c.parts.push_back(s + 1 - prev);
    prev = s + 1;
  }
  c.parts.push_back(n - prev);
  return c;
}

std::size_t TypedIndex::Hash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
  return h;
}

TypedIndex::TypedIndex(const GroupTable& table, GroupType type, unsigned n)
    : table_(&table), type_(type), n_(n) {
  if (table.rank() != classical_rank(type, n) || table.matrix() != classical_matrix(type, n)) {
    throw Error(ErrorCode::RankMismatch, std::string("table is not the type ") + to_char(type) +
                                             " group on windows of size " + std::to_string(n));
  }
  windows_.assign(table.size(), Window::identity(type, n));
  std::vector<char> seen(table.size(), 0);
  seen[0] = 1;
  // Elements are in breadth-first order, so each one's predecessor along a
  // descent is already assigned.
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Element w{static_cast<std::uint32_t>(i)};
    for (Generator s = 0; s < table.rank(); ++s) {
      const Element ws = table.right_multiply(w, s);
      Window image = windows_[i].right_multiply(s);
      if (!seen[ws.index]) {
        windows_[ws.index] = std::move(image);
        seen[ws.index] = 1;
      } else if (windows_[ws.index] != image) {
        throw Error(ErrorCode::RankMismatch, "window action disagrees with the group table");
      }
    }
  }
  index_.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto [it, inserted] =
        index_.emplace(std::vector<int>(windows_[i].entries().begin(), windows_[i].entries().end()),
                       Element{static_cast<std::uint32_t>(i)});
    if (!inserted) throw Error(ErrorCode::RankMismatch, "window action is not faithful");
  }
}

Element TypedIndex::to_engine(const Window& w) const {
  if (w.type() != type_ || w.size() != n_) {
    throw Error(ErrorCode::RankMismatch, "window '" + w.to_string() + "' does not belong to this group");
  }
  return index_.at(std::vector<int>(w.entries().begin(), w.entries().end()));
}

}  // namespace coxconn
