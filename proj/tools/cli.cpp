#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxconn/classical.hpp"
#include "coxconn/enumeration.hpp"
#include "coxconn/error.hpp"
#include "coxconn/export.hpp"
#include "coxconn/order.hpp"
#include "coxconn/series.hpp"
#include "coxconn/verify.hpp"

namespace coxconn::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string type;
  unsigned n = 0;
  std::string matrix;
  std::string format;
  unsigned order = 6;
  std::size_t cap = kDefaultElementCap;
  bool oracle = false;
  bool all = false;
  bool bivariate = false;
  std::vector<std::string> elements;
};

// The group an invocation works in: a classical family addressed by windows,
// or an arbitrary Coxeter matrix addressed by generator words.
class Context {
 public:
  explicit Context(const Options& opt) {
    if (!opt.matrix.empty()) {
      CoxeterMatrix m = [&] {
        try {
          return CoxeterMatrix::from_name(opt.matrix);
        } catch (const Error&) {
          return CoxeterMatrix::load(opt.matrix);
        }
      }();
      generic_ = std::make_unique<GroupTable>(build_group_table(m, opt.cap));
      return;
    }
    if (opt.type.empty() || opt.n == 0) {
      throw Error(ErrorCode::ParseError, "specify a group with -t TYPE -n N or --matrix FILE");
    }
    classical_ = std::make_unique<ClassicalGroup>(parse_group_type(opt.type), opt.n, opt.cap);
  }

  const GroupTable& table() const { return classical_ ? classical_->table() : *generic_; }
  const ClassicalGroup* classical() const { return classical_.get(); }
  int offset() const { return classical_ ? label_offset(classical_->type()) : 0; }

  Element parse(const std::string& text) const {
    if (classical_) return classical_->element(text);
    if (text == "e" || text.find_first_not_of(" \t,") == std::string::npos) return table().identity();
    std::vector<Generator> word;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ' ')) {
      if (token.empty()) continue;
      std::size_t used = 0;
      unsigned long s = 0;
      try {
        s = std::stoul(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw Error(ErrorCode::ParseError, "bad generator '" + token + "'");
      if (s >= table().rank()) throw Error(ErrorCode::RankMismatch, "generator " + token + " out of range");
      word.push_back(static_cast<Generator>(s));
    }
    return from_word(table(), word);
  }

  ElementLabeler labeler() const {
    return classical_ ? window_labeler(classical_->index()) : word_labeler(table(), 0);
  }

  std::string text(Element e) const { return label_text(labeler()(e)); }
  std::string set_text(GeneratorSet s) const { return s.to_string(offset()); }

  /// Elements sorted by (rank, label), the export order.
  std::vector<Element> sorted(std::vector<Element> elems) const {
    const auto label = labeler();
    std::sort(elems.begin(), elems.end(), [&](Element a, Element b) {
      const auto ra = table().support(a).size();
      const auto rb = table().support(b).size();
      return ra != rb ? ra < rb : label(a) < label(b);
    });
    return elems;
  }

 private:
  std::unique_ptr<ClassicalGroup> classical_;
  std::unique_ptr<GroupTable> generic_;
};

void require_elements(const Options& opt, std::size_t count) {
  if (opt.elements.size() != count) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(count) + " element argument(s)");
  }
}

json word_json(const std::vector<Generator>& word, int offset) {
  json out = json::array();
  for (Generator s : word) out.push_back(static_cast<int>(s) + offset);
  return out;
}

json set_json(GeneratorSet s, int offset) { return word_json(s.members(), offset); }

int cmd_element(const Options& opt, std::ostream& out) {
  require_elements(opt, 1);
  const Context ctx(opt);
  const auto& t = ctx.table();
  const Element w = ctx.parse(opt.elements[0]);
  const auto word = reduced_word(t, w);
  if (opt.format == "json") {
    json j;
    j["element"] = ctx.labeler()(w);
    j["length"] = t.length(w);
    j["descents"] = set_json(descent_set(t, w), ctx.offset());
    j["support"] = set_json(support(t, w), ctx.offset());
    j["connectivity"] = set_json(connectivity_set(t, w), ctx.offset());
    j["reduced_word"] = word_json(word, ctx.offset());
    out << j.dump() << '\n';
    return kOk;
  }
  std::string word_text;
  for (Generator s : word) word_text += (word_text.empty() ? "" : " ") + std::to_string(int(s) + ctx.offset());
  out << "element\t" << ctx.text(w) << '\n';
  out << "length\t" << t.length(w) << '\n';
  out << "descents\t" << ctx.set_text(descent_set(t, w)) << '\n';
  out << "support\t" << ctx.set_text(support(t, w)) << '\n';
  out << "connectivity\t" << ctx.set_text(connectivity_set(t, w)) << '\n';
  out << "reduced_word\t" << (word_text.empty() ? "e" : word_text) << '\n';
  if (opt.oracle && ctx.classical()) {
    const GeneratorSet typed = connectivity(ctx.classical()->window(w));
    out << "connectivity_window\t" << ctx.set_text(typed) << '\n';
    if (typed != connectivity_set(t, w)) return kVerificationFailed;
  }
  return kOk;
}

int cmd_leq(const Options& opt, std::ostream& out, std::ostream& err) {
  require_elements(opt, 2);
  const Context ctx(opt);
  const Element u = ctx.parse(opt.elements[0]);
  const Element v = ctx.parse(opt.elements[1]);
  const bool result = leq(ctx.table(), u, v);
  out << (result ? "true" : "false") << '\n';
  if (opt.oracle && ctx.classical() && ctx.classical()->type() == GroupType::A) {
    const bool typed = leq_via_std(ctx.classical()->window(u), ctx.classical()->window(v));
    if (typed != result) {
      err << "oracle mismatch: standardization test gives " << (typed ? "true" : "false") << '\n';
      return kVerificationFailed;
    }
  }
  return kOk;
}

int cmd_interval(const Options& opt, std::ostream& out) {
  require_elements(opt, 2);
  const Context ctx(opt);
  const Interval iv(ctx.table(), ctx.parse(opt.elements[0]), ctx.parse(opt.elements[1]));
  if (opt.format == "json") {
    out << interval_to_json(iv, ctx.labeler()).dump() << '\n';
  } else if (opt.format == "text") {
    for (Element e : ctx.sorted(iv.members())) out << ctx.text(e) << '\n';
  } else {
    out << interval_to_dot(iv, ctx.labeler());
  }
  return kOk;
}

void print_elements(const Context& ctx, const std::vector<Element>& elems, const std::string& format,
                    std::ostream& out) {
  const auto sorted = ctx.sorted(elems);
  if (format == "json") {
    json j = json::array();
    for (Element e : sorted) j.push_back(ctx.labeler()(e));
    out << j.dump() << '\n';
    return;
  }
  for (Element e : sorted) out << ctx.text(e) << '\n';
}

int cmd_covers(const Options& opt, std::ostream& out) {
  require_elements(opt, 2);
  const Context ctx(opt);
  print_elements(ctx, covers(ctx.table(), ctx.parse(opt.elements[0]), ctx.parse(opt.elements[1])), opt.format,
                 out);
  return kOk;
}

int cmd_mobius(const Options& opt, std::ostream& out, std::ostream& err) {
  require_elements(opt, 2);
  const Context ctx(opt);
  const Element u = ctx.parse(opt.elements[0]);
  const Element v = ctx.parse(opt.elements[1]);
  const long long mu = mobius_closed(ctx.table(), u, v);
  out << mu << '\n';
  if (opt.oracle) {
    const long long rec = mobius_recursive(ctx.table(), u, v);
    if (rec != mu) {
      err << "oracle mismatch: recursion gives " << rec << '\n';
      return kVerificationFailed;
    }
  }
  return kOk;
}

int cmd_upset(const Options& opt, std::ostream& out) {
  require_elements(opt, 1);
  const Context ctx(opt);
  print_elements(ctx, upset(ctx.table(), ctx.parse(opt.elements[0])), opt.format, out);
  return kOk;
}

int cmd_counts(const Options& opt, std::ostream& out) {
  if (opt.type.empty() || opt.n == 0) throw Error(ErrorCode::ParseError, "counts needs -t TYPE -n N");
  const GroupType type = parse_group_type(opt.type);
  CountTable table;
  if (opt.all) {
    table = count_table(type, opt.n, opt.cap);
  } else {
    table = CountTable{type, opt.n, std::vector<std::vector<std::uint64_t>>(opt.n + 1)};
    table.rows[opt.n] = count_by_connectivity(type, opt.n, opt.cap);
  }
  if (opt.format == "json") {
    json j = json::array();
    for (std::size_t n = 0; n < table.rows.size(); ++n) {
      for (std::size_t k = 0; k < table.rows[n].size(); ++k) j.push_back({{"n", n}, {"k", k}, {"count", table.rows[n][k]}});
    }
    out << j.dump() << '\n';
  } else {
    out << counts_to_tsv(table);
  }
  return kOk;
}

int cmd_series(const Options& opt, std::ostream& out) {
  if (opt.type.empty()) throw Error(ErrorCode::ParseError, "series needs -t TYPE");
  const GroupType type = parse_group_type(opt.type);
  if (opt.bivariate) {
    const BivariateSeries s = bivariate_series(type, opt.order);
    if (opt.format == "text") {
      for (unsigned n = 0; n <= s.order(); ++n) {
        out << n;
        for (const auto& c : s.row(n)) out << '\t' << c;
        out << '\n';
      }
    } else {
      out << json{{"type", std::string(1, to_char(type))}, {"order", opt.order}, {"rows", series_to_json(s)}}.dump()
          << '\n';
    }
    return kOk;
  }
  const Series s = type == GroupType::A ? series_fa(opt.order)
                   : type == GroupType::B ? series_fb(opt.order)
                                          : series_fd(opt.order);
  if (opt.format == "text") {
    for (unsigned n = 0; n <= s.order(); ++n) out << n << '\t' << s[n] << '\n';
  } else {
    out << json{{"type", std::string(1, to_char(type))}, {"order", opt.order}, {"coefficients", series_to_json(s)}}
               .dump()
        << '\n';
  }
  return kOk;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
  require_elements(opt, 1);
  const Window w = parse_window(GroupType::A, opt.elements[0]);
  if (opt.n != 0 && w.size() != opt.n) throw Error(ErrorCode::RankMismatch, "window size differs from -n");
  const auto blocks = decompose_by_connectivity(w);
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& b : blocks) j.push_back(std::vector<int>(b.entries().begin(), b.entries().end()));
    out << j.dump() << '\n';
  } else {
    for (const auto& b : blocks) out << b.to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(std::ostream& out) {
  bool ok = true;
  for (const auto& r : run_checks(property_checks())) {
    ok = ok && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << '\t' << r.name;
    if (!r.passed) out << '\t' << r.detail;
    out << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

template <typename Fn>
double time_seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_bench(const Options& opt, std::ostream& out) {
  Options o = opt;
  if (o.matrix.empty() && o.type.empty()) {
    o.type = "A";
    o.n = 5;
  }
  const Context ctx(o);
  const auto& t = ctx.table();
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Element u{static_cast<std::uint32_t>(i)};
    for (Element v : upset(t, u)) pairs.emplace_back(u, v);
  }
  const std::string group = o.matrix.empty() ? o.type + std::to_string(o.n) : o.matrix;
  long long sink = 0;
  out << "benchmark\tgroup\titems\tseconds\n";
  out << "mobius_closed\t" << group << '\t' << pairs.size() << '\t'
      << time_seconds([&] { for (auto [u, v] : pairs) sink += mobius_closed(t, u, v); }) << '\n';
  out << "mobius_recursive\t" << group << '\t' << pairs.size() << '\t'
      << time_seconds([&] { for (auto [u, v] : pairs) sink += mobius_recursive(t, u, v); }) << '\n';
  out << "connectivity_engine\t" << group << '\t' << t.size() << '\t'
      << time_seconds([&] {
           for (std::size_t i = 0; i < t.size(); ++i) sink += connectivity_set(t, Element{std::uint32_t(i)}).size();
         })
      << '\n';
  if (const ClassicalGroup* g = ctx.classical()) {
    out << "connectivity_window\t" << group << '\t' << t.size() << '\t'
        << time_seconds([&] {
             for (std::size_t i = 0; i < t.size(); ++i) sink += connectivity(g->window(Element{std::uint32_t(i)})).size();
           })
        << '\n';
  }
  return sink == -1 ? kVerificationFailed : kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidWindow:
    case ErrorCode::InvalidMatrix:
      return kParseError;
    default:
      return kDomainError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity sets and the connectivity order on finite Coxeter groups", "coxconn"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_group_flags = [&](CLI::App* cmd) {
    cmd->add_option("-t,--type", opt.type, "classical type")->check(CLI::IsMember({"A", "B", "D"}));
    cmd->add_option("-n,--rank", opt.n, "window size (S_n for type A, B_n, D_n)");
    cmd->add_option("--matrix", opt.matrix, "Coxeter matrix file, or A<r>/B<r>/D<r> by Coxeter rank");
    cmd->add_option("--cap", opt.cap, "element cap for group enumeration");
  };
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed, std::string fallback) {
    opt.format.clear();
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember(allowed));
    cmd->callback([&opt, fallback] {
      if (opt.format.empty()) opt.format = fallback;
    });
  };

  struct Sub {
    CLI::App* app;
    std::string name;
  };
  std::vector<Sub> subs;
  auto sub = [&](const std::string& name, const std::string& help, std::size_t elements) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_group_flags(cmd);
    if (elements > 0) cmd->add_option("elements", opt.elements, "windows, or generator words with --matrix");
    subs.push_back({cmd, name});
    return cmd;
  };

  add_format(sub("element", "length, descents, support, connectivity set and a reduced word", 1),
             {"text", "json"}, "text");
  subs.back().app->add_flag("--oracle", opt.oracle, "also apply the window formula");
  sub("leq", "compare two elements in the connectivity order", 2)->add_flag("--oracle", opt.oracle);
  add_format(sub("interval", "export the interval [u, v]", 2), {"dot", "json", "text"}, "dot");
  add_format(sub("covers", "elements covering u in [u, v]", 2), {"text", "json"}, "text");
  sub("mobius", "Möbius function mu(u, v)", 2)->add_flag("--oracle", opt.oracle, "cross-check by recursion");
  add_format(sub("upset", "all w >= u", 1), {"text", "json"}, "text");
  {
    CLI::App* c = sub("counts", "elements counted by connectivity-set size", 0);
    add_format(c, {"tsv", "json"}, "tsv");
    c->add_flag("--all", opt.all, "every window size up to -n");
  }
  {
    CLI::App* c = sub("series", "generating function coefficients", 0);
    add_format(c, {"json", "text"}, "json");
    c->add_option("--order", opt.order, "truncation degree");
    c->add_flag("--bivariate", opt.bivariate, "coefficients of x^n t^k");
  }
  add_format(sub("decompose", "split a permutation into connected blocks", 1), {"text", "json"}, "text");
  sub("verify", "run the property suite", 0);
  sub("bench", "time closed vs recursive Möbius and window vs engine connectivity", 0);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  std::string name;
  for (const auto& s : subs) {
    if (s.app->parsed()) name = s.name;
  }
  try {
    if (name == "element") return cmd_element(opt, out);
    if (name == "leq") return cmd_leq(opt, out, err);
    if (name == "interval") return cmd_interval(opt, out);
    if (name == "covers") return cmd_covers(opt, out);
    if (name == "mobius") return cmd_mobius(opt, out, err);
    if (name == "upset") return cmd_upset(opt, out);
    if (name == "counts") return cmd_counts(opt, out);
    if (name == "series") return cmd_series(opt, out);
    if (name == "decompose") return cmd_decompose(opt, out);
    if (name == "verify") return cmd_verify(out);
    if (name == "bench") return cmd_bench(opt, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParseError;
}

}  // namespace coxconn::cli
