#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "coxconn/order.hpp"

namespace oracle {

using coxconn::Element;
using coxconn::GroupType;

std::map<std::vector<int>, WindowData> window_bfs(GroupType type, unsigned n) {
  const unsigned rank = coxconn::classical_rank(type, n);
  std::map<std::vector<int>, WindowData> seen;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  seen[id] = {0, {}};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    const WindowData here = seen[w];
    for (unsigned s = 0; s < rank; ++s) {
      std::vector<int> x = w;
      if (type == GroupType::A) {
        std::swap(x[s], x[s + 1]);
      } else if (s == 0 && type == GroupType::B) {
        x[0] = -x[0];
      } else if (s == 0) {
        const int a = x[0];
        x[0] = -x[1];
        x[1] = -a;
      } else {
        std::swap(x[s - 1], x[s]);
      }
      if (seen.count(x)) continue;
      seen[x] = {here.length + 1, here.support.with(s)};
      queue.push_back(x);
    }
  }
  return seen;
}

std::vector<int> standardize_by_search(const std::vector<int>& word) {
  std::vector<int> sigma(word.size());
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < word.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < word.size() && ok; ++j) {
        ok = (sigma[i] > sigma[j]) == (word[i] > word[j]);
      }
    }
    if (ok) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return {};
}

std::vector<std::uint64_t> connected_permutations(unsigned max_n) {
  std::vector<std::uint64_t> fact(max_n + 1, 1), c(max_n + 1, 0);
  for (unsigned n = 1; n <= max_n; ++n) fact[n] = fact[n - 1] * n;
  for (unsigned n = 1; n <= max_n; ++n) {
    std::uint64_t v = fact[n];
    for (unsigned k = 1; k < n; ++k) v -= c[k] * fact[n - k];
    c[n] = v;
  }
  return c;
}

long long mobius_by_scan(const coxconn::GroupTable& t, Element u, Element v) {
  std::vector<Element> members;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Element x{static_cast<std::uint32_t>(i)};
    if (coxconn::leq(t, u, x) && coxconn::leq(t, x, v)) members.push_back(x);
  }
  // Linear extension by length.
  std::sort(members.begin(), members.end(), [&](Element a, Element b) { return t.length(a) < t.length(b); });
  std::map<Element, long long> mu;
  for (Element x : members) {
    if (x == u) {
      mu[x] = 1;
      continue;
    }
    long long sum = 0;
    for (const auto& [y, m] : mu) {
      if (coxconn::leq(t, y, x)) sum += m;
    }
    mu[x] = -sum;
  }
  return mu.at(v);
}

}  // namespace oracle
