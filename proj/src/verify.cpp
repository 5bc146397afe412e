#include "coxconn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>

#include "coxconn/classical.hpp"
#include "coxconn/enumeration.hpp"
#include "coxconn/error.hpp"
#include "coxconn/order.hpp"
#include "coxconn/series.hpp"

namespace coxconn {

namespace {

struct Named {
  const char* name;
  CoxeterMatrix matrix;
};

std::string describe(const char* group, const std::string& what) {
  return std::string(group) + ": " + what;
}

std::vector<Element> all_elements(const GroupTable& t) {
  std::vector<Element> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = Element{static_cast<std::uint32_t>(i)};
  return out;
}

std::vector<std::uint8_t> order_matrix(const GroupTable& t) {
  const std::size_t n = t.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      rel[a * n + b] = leq(t, Element{static_cast<std::uint32_t>(a)}, Element{static_cast<std::uint32_t>(b)});
    }
  }
  return rel;
}

template <typename Fn>
void for_each_interval(const GroupTable& t, Fn&& fn) {
  for (Element u : all_elements(t)) {
    for (Element v : upset(t, u)) fn(Interval(t, u, v));
  }
}

std::string check_table_laws() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B3", CoxeterMatrix::type_b(3)},
                        Named{"D4", CoxeterMatrix::type_d(4)}}) {
    const GroupTable t = build_group_table(g.matrix);
    for (Element w : all_elements(t)) {
      for (Generator s = 0; s < t.rank(); ++s) {
        const Element ws = t.right_multiply(w, s);
        const long long diff = static_cast<long long>(t.length(ws)) - t.length(w);
        if (diff != 1 && diff != -1) return describe(g.name, "length step is not ±1");
        if (t.right_multiply(ws, s) != w) return describe(g.name, "generator is not an involution");
        for (Generator r = s + 1; r < t.rank(); ++r) {
          Element x = w;
          for (unsigned k = 0; k < g.matrix(s, r); ++k) x = t.right_multiply(t.right_multiply(x, s), r);
          if (x != w) return describe(g.name, "braid relation fails");
        }
      }
    }
  }
  return {};
}

std::string check_support_additivity() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"A4", CoxeterMatrix::type_a(4)},
                        Named{"B3", CoxeterMatrix::type_b(3)}, Named{"D4", CoxeterMatrix::type_d(4)}}) {
    const GroupTable t = build_group_table(g.matrix);
    for (Element u : all_elements(t)) {
      for (Element v : all_elements(t)) {
        const Element uv = multiply(t, u, v);
        if (t.length(uv) != t.length(u) + t.length(v)) continue;
        if (support(t, uv) != (support(t, u) | support(t, v))) {
          return describe(g.name, "S(uv) != S(u) ∪ S(v) for a length-additive product");
        }
      }
    }
  }
  return {};
}

std::string check_support_word_independence() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B3", CoxeterMatrix::type_b(3)},
                        Named{"D4", CoxeterMatrix::type_d(4)}}) {
    const GroupTable t = build_group_table(g.matrix);
    for (Element w : all_elements(t)) {
      GeneratorSet other;
      for (Generator s : reduced_word(t, w, DescentRule::Largest)) other.insert(s);
      if (other != support(t, w) || other != t.support(w)) {
        return describe(g.name, "support depends on the reduced word");
      }
    }
  }
  return {};
}

std::string check_parabolic_uniqueness() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B3", CoxeterMatrix::type_b(3)}}) {
    const GroupTable t = build_group_table(g.matrix);
    std::string failure;
    for_each_between(GeneratorSet{}, t.generators(), [&](GeneratorSet i) {
      if (!failure.empty()) return;
      std::vector<Element> parabolic;
      for (Element y : all_elements(t)) {
        if (t.support(y).subset_of(i)) parabolic.push_back(y);
      }
      for (Element w : all_elements(t)) {
        const ParabolicParts parts = parabolic_decompose(t, w, i);
        int solutions = 0;
        for (Element y : parabolic) {
          const Element x = multiply(t, w, inverse(t, y));
          if (!(t.descents(x) & i).empty()) continue;
          ++solutions;
          if (x != parts.coset_part || y != parts.parabolic_part) {
            failure = describe(g.name, "decomposition differs from exhaustive search");
          }
        }
        if (solutions != 1) failure = describe(g.name, "parabolic decomposition is not unique");
        if (t.length(w) != t.length(parts.coset_part) + t.length(parts.parabolic_part)) {
          failure = describe(g.name, "parabolic lengths are not additive");
        }
      }
    });
    if (!failure.empty()) return failure;
  }
  return {};
}

std::string check_nested_components() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B2", CoxeterMatrix::type_b(2)}}) {
    const GroupTable t = build_group_table(g.matrix);
    bool ok = true;
    for_each_between(GeneratorSet{}, t.generators(), [&](GeneratorSet j) {
      for_each_between(GeneratorSet{}, j, [&](GeneratorSet i) {
        for (Element w : all_elements(t)) {
          const Element wi = parabolic_component(t, w, i);
          const Element wj = parabolic_component(t, w, j);
          if (wi != parabolic_component(t, wj, i) || !leq(t, wi, wj)) ok = false;
        }
      });
    });
    if (!ok) return describe(g.name, "w_I != (w_J)_I");
  }
  return {};
}

std::string check_longest_components() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B3", CoxeterMatrix::type_b(3)}}) {
    const GroupTable t = build_group_table(g.matrix);
    bool ok = true;
    for_each_between(GeneratorSet{}, t.generators(), [&](GeneratorSet j) {
      const Element w0j = longest_element(t, j);
      if (t.descents(w0j) != j) ok = false;
      for_each_between(GeneratorSet{}, j, [&](GeneratorSet i) {
        if (parabolic_component(t, w0j, i) != longest_element(t, i)) ok = false;
      });
    });
    if (!ok) return describe(g.name, "(w0(J))_I != w0(I)");
  }
  return {};
}

std::string check_oracle_equivalence() {
  const std::pair<GroupType, unsigned> cases[] = {
      {GroupType::A, 2}, {GroupType::A, 3}, {GroupType::A, 4}, {GroupType::A, 5}, {GroupType::A, 6},
      {GroupType::B, 1}, {GroupType::B, 2}, {GroupType::B, 3}, {GroupType::B, 4},
      {GroupType::D, 2}, {GroupType::D, 3}, {GroupType::D, 4}, {GroupType::D, 5}};
  for (const auto& [type, n] : cases) {
    const ClassicalGroup g(type, n);
    for (Element e : all_elements(g.table())) {
      if (connectivity(g.window(e)) != connectivity_set(g.table(), e)) {
        return std::string(1, to_char(type)) + std::to_string(n) + ": window " +
               g.window(e).to_string() + " disagrees with the engine";
      }
    }
  }
  return {};
}

std::string check_standardized_components() {
  for (unsigned n : {4u, 5u}) {
    const ClassicalGroup g(GroupType::A, n);
    const GeneratorSet all = g.table().generators();
    for (Element e : all_elements(g.table())) {
      const Permutation& w = g.window(e);
      const GeneratorSet c = connectivity_a(w);
      const Permutation cut = standardize_blocks(w, c);
      if (!c.subset_of(connectivity_a(cut)) || cut != w) return "std_{C(w)}(w) != w for " + w.to_string();
      std::string failure;
      for_each_between(GeneratorSet{}, all, [&](GeneratorSet i) {
        if (g.window(parabolic_component(g.table(), e, i)) != standardize_blocks(w, all - i)) {
          failure = "std_{S\\I}(w) != w_I for " + w.to_string();
        }
      });
      if (!failure.empty()) return failure;
    }
  }
  return {};
}

std::string check_d_closure() {
  for (unsigned n : {3u, 4u}) {
    std::vector<Window> all;
    for_each_window(GroupType::D, n, [&](const Window& w) { all.push_back(w); });
    for (const auto& u : all) {
      if (u.inverse().negative_count() % 2 != 0 || u * u.inverse() != Window::identity(GroupType::D, n)) {
        return "inverse leaves D for " + u.to_string();
      }
      for (const auto& v : all) {
        if ((u * v).negative_count() % 2 != 0) return "product leaves D";
      }
    }
  }
  return {};
}

std::string check_order_axioms() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B2", CoxeterMatrix::type_b(2)},
                        Named{"B3", CoxeterMatrix::type_b(3)}, Named{"D4", CoxeterMatrix::type_d(4)}}) {
    const GroupTable t = build_group_table(g.matrix);
    const auto rel = order_matrix(t);
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      if (!rel[a * n + a]) return describe(g.name, "not reflexive");
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && rel[a * n + b] && rel[b * n + a]) return describe(g.name, "not antisymmetric");
        if (!rel[a * n + b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (rel[b * n + c] && !rel[a * n + c]) return describe(g.name, "not transitive");
        }
      }
    }
  }
  // Typed route on S_4.
  std::vector<Permutation> perms;
  for_each_window(GroupType::A, 4, [&](const Window& w) { perms.push_back(w); });
  for (const auto& a : perms) {
    if (!leq_via_std(a, a)) return "S4 (typed): not reflexive";
    for (const auto& b : perms) {
      if (a != b && leq_via_std(a, b) && leq_via_std(b, a)) return "S4 (typed): not antisymmetric";
      if (!leq_via_std(a, b)) continue;
      for (const auto& c : perms) {
        if (leq_via_std(b, c) && !leq_via_std(a, c)) return "S4 (typed): not transitive";
      }
    }
  }
  return {};
}

std::string check_typed_order_routes() {
  for (unsigned n : {3u, 4u, 5u}) {
    const ClassicalGroup g(GroupType::A, n);
    for (Element u : all_elements(g.table())) {
      for (Element v : all_elements(g.table())) {
        const bool engine = leq(g.table(), u, v);
        if (leq_via_std(g.window(u), g.window(v)) != engine ||
            leq_via_std_pair(g.window(u), g.window(v)) != engine) {
          return "S" + std::to_string(n) + ": std-based order disagrees at " + g.window(u).to_string() +
                 " <= " + g.window(v).to_string();
        }
      }
    }
  }
  return {};
}

std::string check_order_consequences() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B3", CoxeterMatrix::type_b(3)},
                        Named{"D4", CoxeterMatrix::type_d(4)}}) {
    const GroupTable t = build_group_table(g.matrix);
    for (Element u : all_elements(t)) {
      const Element u_inv = inverse(t, u);
      for (Element v : all_elements(t)) {
        if (!leq(t, u, v)) continue;
        if (!connectivity_set(t, v).subset_of(connectivity_set(t, u))) return describe(g.name, "C(v) ⊄ C(u)");
        if (t.length(v) != t.length(multiply(t, v, u_inv)) + t.length(u)) {
          return describe(g.name, "u ≤ v without u ≤_L v");
        }
      }
      // Up-set: bijection with X_{S(u)} and brute force agree.
      std::vector<Element> brute;
      for (Element w : all_elements(t)) {
        if (leq(t, u, w)) brute.push_back(w);
      }
      if (brute != upset(t, u) || brute.size() != upset_size(t, u)) return describe(g.name, "up-set size mismatch");
    }
  }
  return {};
}

std::string check_intervals_against_brute_force() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B3", CoxeterMatrix::type_b(3)}}) {
    const GroupTable t = build_group_table(g.matrix);
    std::string failure;
    for_each_interval(t, [&](const Interval& iv) {
      if (!failure.empty()) return;
      std::set<Element> brute;
      for (Element x : all_elements(t)) {
        if (leq(t, iv.bottom(), x) && leq(t, x, iv.top())) brute.insert(x);
      }
      if (brute != std::set<Element>(iv.members().begin(), iv.members().end())) {
        failure = describe(g.name, "interval members differ from {x : u <= x <= v}");
        return;
      }
      std::vector<Element> brute_covers;
      const std::size_t b = *iv.position(iv.bottom());
      for (std::size_t x = 0; x < iv.size(); ++x) {
        if (iv.covered_by(b, x)) brute_covers.push_back(iv.members()[x]);
      }
      std::sort(brute_covers.begin(), brute_covers.end());
      const auto formula = covers(t, iv.bottom(), iv.top());
      if (formula != brute_covers) failure = describe(g.name, "covers() differs from brute force");
      const Element x = parabolic_decompose(t, iv.top(), t.support(iv.bottom())).coset_part;
      if (formula.size() != t.descents(x).size()) failure = describe(g.name, "cover count != |Des(v^{S(u)})|");
      for (Element w : iv.members()) {
        for (Element h : iv.members()) {
          const Element j = join(iv, w, h);
          const Element m = meet(iv, w, h);
          if (std::optional<Element>(j) != iv.least_upper_bound(w, h) ||
              std::optional<Element>(m) != iv.greatest_lower_bound(w, h)) {
            failure = describe(g.name, "join/meet differ from brute-force bounds");
            return;
          }
          if (t.support(j) != (t.support(w) | t.support(h)) ||
              !t.support(m).subset_of(t.support(w) & t.support(h))) {
            failure = describe(g.name, "join/meet supports");
            return;
          }
        }
      }
    });
    if (!failure.empty()) return failure;
  }
  return {};
}

std::string check_structure_theorems() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"A4", CoxeterMatrix::type_a(4)},
                        Named{"B3", CoxeterMatrix::type_b(3)}}) {
    const GroupTable t = build_group_table(g.matrix);
    std::string failure;
    for_each_interval(t, [&](const Interval& iv) {
      if (!failure.empty()) return;
      if (!check_graded(iv)) failure = describe(g.name, "interval not graded");
      else if (!check_lattice(iv)) failure = describe(g.name, "interval not a lattice");
      else if (!check_upper_semimodular(iv)) failure = describe(g.name, "interval not upper semimodular");
    });
    if (!failure.empty()) return failure;
  }
  return {};
}

std::string check_mobius_agreement() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"A4", CoxeterMatrix::type_a(4)},
                        Named{"B3", CoxeterMatrix::type_b(3)}, Named{"D4", CoxeterMatrix::type_d(4)}}) {
    const GroupTable t = build_group_table(g.matrix);
    for (Element u : all_elements(t)) {
      for (Element v : upset(t, u)) {
        if (mobius_closed(t, u, v) != mobius_recursive(t, u, v)) {
          return describe(g.name, "closed-form Möbius differs from recursion");
        }
      }
    }
  }
  return {};
}

std::string check_mobius_polynomial() {
  for (const auto& g : {Named{"A3", CoxeterMatrix::type_a(3)}, Named{"B3", CoxeterMatrix::type_b(3)}}) {
    const GroupTable t = build_group_table(g.matrix);
    for (Element v : all_elements(t)) {
      // Σ_{x ≤ v} μ(e, x) t^{|S(x)|} via the recursion on [e, v].
      const Interval iv(t, t.identity(), v);
      const auto mu = mobius_row(iv);
      std::vector<long long> lhs(t.rank() + 1, 0);
      for (std::size_t x = 0; x < iv.size(); ++x) lhs[t.support(iv.members()[x]).size()] += mu[x];
      std::vector<long long> rhs(t.rank() + 1, 0);
      const unsigned d = t.descents(v).size();
      long long binom = 1;
      for (unsigned k = 0; k <= d; ++k) {
        rhs[k] = (k % 2 ? -binom : binom);
        binom = binom * (d - k) / (k + 1);
      }
      auto closed = mobius_poly(t, v);
      closed.resize(t.rank() + 1, 0);
      if (lhs != rhs || closed != rhs) return describe(g.name, "Σ μ(e,x) t^|S(x)| != (1-t)^|Des(v)|");
    }
  }
  return {};
}

std::string check_galois_connection() {
  const GroupTable t = build_group_table(CoxeterMatrix::type_a(3));
  std::string failure;
  for_each_interval(t, [&](const Interval& iv) {
    if (!failure.empty()) return;
    const GeneratorSet lo = iv.lower();
    const GeneratorSet hi = iv.upper();
    for (Element w : iv.members()) {
      if (galois_g(iv, galois_f(iv, w)) != w) failure = "G(F(w)) != w";
      std::vector<GeneratorSet> fiber;
      for_each_between(lo, hi, [&](GeneratorSet k) {
        const Element gk = galois_g(iv, k);
        if (!galois_f(iv, gk).subset_of(k)) failure = "F(G(K)) ⊄ K";
        if (galois_f(iv, w).subset_of(k) != leq(t, w, gk)) failure = "adjunction fails";
        if (gk == w) fiber.push_back(k);
      });
      const Element x = parabolic_decompose(t, iv.top(), t.support(w)).coset_part;
      if (fiber.empty() || fiber.front() != t.support(w) || fiber.back() != hi - t.descents(x)) {
        failure = "fiber extremes differ from S(w), J \\ Des(v^{S(w)})";
      }
      for (Element h : iv.members()) {
        if (galois_f(iv, join(iv, w, h)) != (galois_f(iv, w) | galois_f(iv, h))) failure = "F does not preserve joins";
      }
    }
    for_each_between(lo, hi, [&](GeneratorSet k) {
      for_each_between(lo, hi, [&](GeneratorSet l) {
        if (galois_g(iv, k & l) != meet(iv, galois_g(iv, k), galois_g(iv, l))) failure = "G does not preserve meets";
      });
    });
    // Rota: Σ_{L : G(L) = u} μ_P(L, J) = μ(u, v).
    long long sum = 0;
    for_each_between(lo, hi, [&](GeneratorSet l) {
      if (galois_g(iv, l) == iv.bottom()) sum += (hi.size() - l.size()) % 2 ? -1 : 1;
    });
    if (sum != mobius_recursive(t, iv.bottom(), iv.top())) failure = "Rota reduction fails";
  });
  return failure.empty() ? failure : "S4: " + failure;
}

std::string check_global_non_lattice() {
  const ClassicalGroup g(GroupType::A, 4);
  const auto bounds = minimal_upper_bounds(g.table(), g.element("1 4 2 3"), g.element("2 3 1 4"));
  if (bounds.size() < 2) return "1423 and 2314 have a unique least upper bound";
  return {};
}

std::string check_series_against_enumeration() {
  const std::tuple<GroupType, unsigned, unsigned> cases[] = {
      {GroupType::A, 1, 6}, {GroupType::B, 1, 5}, {GroupType::D, 2, 6}};
  for (const auto& [type, lo, hi] : cases) {
    const BivariateSeries series = bivariate_series(type, hi);
    for (unsigned n = lo; n <= hi; ++n) {
      const auto counts = count_by_connectivity(type, n);
      std::uint64_t total = 0;
      for (unsigned k = 0; k < counts.size(); ++k) {
        total += counts[k];
        if (series.coefficient(n, k) != counts[k]) {
          return std::string(1, to_char(type)) + std::to_string(n) + ": series coefficient of t^" +
                 std::to_string(k) + " differs from enumeration";
        }
      }
      if (series.row(n).size() > counts.size()) return "series has extra terms";
      if (total != classical_order(type, n)) return "row sum differs from group order";
    }
  }
  return {};
}

std::string check_connected_decomposition() {
  std::vector<std::uint64_t> connected(7, 0);
  for (unsigned n = 1; n <= 6; ++n) connected[n] = count_by_connectivity(GroupType::A, n)[0];
  for (unsigned n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> seen;
    bool ok = true;
    for_each_window(GroupType::A, n, [&](const Window& w) {
      const auto blocks = decompose_by_connectivity(w);
      for (const auto& b : blocks) {
        if (!connectivity_a(b).empty()) ok = false;
      }
      if (concatenate_blocks(blocks) != w) ok = false;
      std::vector<int> key;
      for (const auto& b : blocks) key.push_back(static_cast<int>(b.size()));
      for (const auto& b : blocks) key.insert(key.end(), b.entries().begin(), b.entries().end());
      if (!seen.insert(key).second) ok = false;
    });
    if (!ok) return "decomposition is not an injective map onto connected blocks";
    // Σ over compositions of Π |S_{α_i}^{(0)}| = n!.
    std::uint64_t total = 0;
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
      std::uint64_t product = 1;
      for (unsigned part : composition_of(GeneratorSet(cuts), n).parts) product *= connected[part];
      total += product;
    }
    if (total != classical_order(GroupType::A, n)) return "composition sum differs from n!";
  }
  return {};
}

std::string check_series_identities() {
  const unsigned order = 12;
  const Series f = Series::factorials(order);
  const Series one = Series::monomial(order, 0, 1);
  if (series_fa(order) * f != f - one) return "f_A · Σ n! x^n != Σ n! x^n - 1";
  if (series_fb(order) * f != Series::signed_factorials(order)) return "f_B · Σ n! x^n != Σ 2^n n! x^n";
  return {};
}

}  // namespace

std::vector<PropertyCheck> property_checks() {
  return {
      {"group table laws (A3, B3, D4)", check_table_laws},
      {"support additivity (A3, A4, B3, D4)", check_support_additivity},
      {"support independent of reduced word (A3, B3, D4)", check_support_word_independence},
      {"parabolic decomposition unique (A3, B3)", check_parabolic_uniqueness},
      {"w_I = (w_J)_I (A3, B2)", check_nested_components},
      {"(w0(J))_I = w0(I) (A3, B3)", check_longest_components},
      {"typed connectivity = S \\ support (S2-S6, B1-B4, D2-D5)", check_oracle_equivalence},
      {"std_{S\\I}(w) = w_I (S4, S5)", check_standardized_components},
      {"type D windows closed under products and inverses (D3, D4)", check_d_closure},
      {"order axioms (A3, B2, B3, D4, typed S4)", check_order_axioms},
      {"std-based order equals parabolic order (S3-S5)", check_typed_order_routes},
      {"u <= v implies C(v) ⊆ C(u), weak order, up-set index (A3, B3, D4)", check_order_consequences},
      {"interval members, covers, join, meet vs brute force (A3, B3)", check_intervals_against_brute_force},
      {"intervals graded, lattice, upper semimodular (A3, A4, B3)", check_structure_theorems},
      {"closed Möbius = recursive Möbius (A3, A4, B3, D4)", check_mobius_agreement},
      {"Möbius polynomial (1-t)^|Des(v)| (A3, B3)", check_mobius_polynomial},
      {"Galois connection and Rota reduction (A3)", check_galois_connection},
      {"1423, 2314 lack a least upper bound in S4", check_global_non_lattice},
      {"bivariate series = enumeration (A<=6, B<=5, D<=6)", check_series_against_enumeration},
      {"connected-block decomposition (S1-S6)", check_connected_decomposition},
      {"series identities", check_series_identities},
  };
}

std::vector<CheckResult> run_checks(const std::vector<PropertyCheck>& checks) {
  std::vector<CheckResult> results;
  for (const auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back({c.name, detail.empty(), detail, seconds});
  }
  return results;
}

}  // namespace coxconn
