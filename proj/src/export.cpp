#include "coxconn/export.hpp"

#include <algorithm>
#include <sstream>

namespace coxconn {

ElementLabeler window_labeler(const TypedIndex& index) {
  return [&index](Element e) {
    const auto entries = index.from_engine(e).entries();
    return std::vector<int>(entries.begin(), entries.end());
  };
}

ElementLabeler word_labeler(const GroupTable& table, int label_offset) {
  return [&table, label_offset](Element e) {
    std::vector<int> out;
    for (Generator s : reduced_word(table, e)) out.push_back(static_cast<int>(s) + label_offset);
    return out;
  };
}

std::string label_text(const std::vector<int>& label) {
  if (label.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(label[i]);
  }
  return out;
}

namespace {

struct Node {
  std::size_t position;  // in interval.members()
  unsigned rank;
  std::vector<int> label;
};

std::vector<Node> sorted_nodes(const Interval& interval, const ElementLabeler& label) {
  std::vector<Node> nodes;
  for (std::size_t p = 0; p < interval.size(); ++p) {
    const Element e = interval.members()[p];
    nodes.push_back({p, interval.group().support(e).size(), label(e)});
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.label < b.label;
  });
  return nodes;
}

// Cover edges as pairs of indices into the sorted node list, sorted.
std::vector<std::pair<std::size_t, std::size_t>> sorted_edges(const Interval& interval,
                                                              const std::vector<Node>& nodes) {
  std::vector<std::size_t> slot(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) slot[nodes[i].position] = i;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : interval.cover_edges()) edges.emplace_back(slot[lo], slot[hi]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string interval_to_dot(const Interval& interval, const ElementLabeler& label) {
  const auto nodes = sorted_nodes(interval, label);
  std::ostringstream out;
  out << "digraph interval {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=" << quote(label_text(nodes[i].label)) << "];\n";
  }
  for (std::size_t i = 0; i < nodes.size();) {
    std::size_t j = i;
    while (j < nodes.size() && nodes[j].rank == nodes[i].rank) ++j;
    out << "  { rank=same;";
    for (std::size_t k = i; k < j; ++k) out << " n" << k << ";";
    out << " }\n";
    i = j;
  }
  for (const auto& [a, b] : sorted_edges(interval, nodes)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json interval_to_json(const Interval& interval, const ElementLabeler& label) {
  const auto nodes = sorted_nodes(interval, label);
  nlohmann::json out;
  out["bottom"] = label(interval.bottom());
  out["top"] = label(interval.top());
  out["members"] = nlohmann::json::array();
  for (const auto& n : nodes) out["members"].push_back(n.label);
  out["cover_edges"] = nlohmann::json::array();
  for (const auto& [a, b] : sorted_edges(interval, nodes)) {
    out["cover_edges"].push_back({nodes[a].label, nodes[b].label});
  }
  return out;
}

std::string counts_to_tsv(const CountTable& table) {
  std::ostringstream out;
  out << "n\tk\tcount\n";
  for (std::size_t n = 0; n < table.rows.size(); ++n) {
    for (std::size_t k = 0; k < table.rows[n].size(); ++k) {
      out << n << '\t' << k << '\t' << table.rows[n][k] << '\n';
    }
  }
  return out.str();
}

nlohmann::json series_to_json(const Series& series) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : series.coefficients()) out.push_back(c.str());
  return out;
}

nlohmann::json series_to_json(const BivariateSeries& series) {
  nlohmann::json out = nlohmann::json::array();
  for (unsigned n = 0; n <= series.order(); ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : series.row(n)) row.push_back(c.str());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace coxconn
