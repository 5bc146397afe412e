#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxconn/enumeration.hpp"
#include "coxconn/order.hpp"
#include "coxconn/series.hpp"

namespace coxconn {

/// Maps an element to the integer sequence that names it: a window for the
/// classical types, a reduced word otherwise.
using ElementLabeler = std::function<std::vector<int>(Element)>;

ElementLabeler window_labeler(const TypedIndex& index);
/// Reduced words (smallest-descent rule) with generators shifted by label_offset.
ElementLabeler word_labeler(const GroupTable& table, int label_offset = 0);

/// "4 2 3 1"; an empty word renders as "e".
std::string label_text(const std::vector<int>& label);

/// Hasse diagram of the interval, bottom to top, one rank per row. Nodes and
/// edges are ordered by (rank, label).
std::string interval_to_dot(const Interval& interval, const ElementLabeler& label);

/// {"bottom", "top", "members", "cover_edges": [[a, b], ...]} with elements
/// given by their labels, in the same order as the DOT export.
nlohmann::json interval_to_json(const Interval& interval, const ElementLabeler& label);

/// Header "n\tk\tcount", then one line per (n, k).
std::string counts_to_tsv(const CountTable& table);

/// Decimal strings indexed by degree.
nlohmann::json series_to_json(const Series& series);
/// rows[n][k] = coefficient of x^n t^k as decimal strings.
nlohmann::json series_to_json(const BivariateSeries& series);

}  // namespace coxconn
