#include "coxconn/series.hpp"

#include <algorithm>

#include "coxconn/error.hpp"

namespace coxconn {

Series::Series(unsigned order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > std::size_t{order} + 1) {
    throw Error(ErrorCode::InvalidSeries, "more coefficients than the truncation order allows");
  }
  coeffs_.resize(std::size_t{order} + 1);
}

Series Series::monomial(unsigned order, unsigned degree, const BigInt& c) {
  Series s(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

Series Series::factorials(unsigned order) {
  Series s(order);
  BigInt f = 1;
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) f *= n;
    s.coeffs_[n] = f;
  }
  return s;
}

Series Series::signed_factorials(unsigned order) {
  Series s(order);
  BigInt f = 1;
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) f *= 2 * n;
    s.coeffs_[n] = f;
  }
  return s;
}

void Series::require_same_order(const Series& o) const {
  if (o.order() != order()) throw Error(ErrorCode::InvalidSeries, "series orders differ");
}

Series Series::operator+(const Series& o) const {
  require_same_order(o);
  Series r(*this);
  for (unsigned i = 0; i <= order(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Series Series::operator-(const Series& o) const {
  require_same_order(o);
  Series r(*this);
  for (unsigned i = 0; i <= order(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

Series Series::operator-() const {
  Series r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series Series::operator*(const Series& o) const {
  require_same_order(o);
  Series r(order());
  for (unsigned i = 0; i <= order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; i + j <= order(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

Series Series::operator*(const BigInt& c) const {
  Series r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Series Series::operator/(const Series& divisor) const {
  require_same_order(divisor);
  const BigInt& lead = divisor.coeffs_[0];
  if (lead != 1 && lead != -1) {
    throw Error(ErrorCode::InvalidSeries, "divisor must have constant term +1 or -1");
  }
  Series q(order());
  for (unsigned n = 0; n <= order(); ++n) {
    BigInt acc = coeffs_[n];
    for (unsigned i = 1; i <= n; ++i) acc -= divisor.coeffs_[i] * q.coeffs_[n - i];
    q.coeffs_[n] = acc * lead;  // lead is its own inverse
  }
  return q;
}

Series Series::exact_divide(const BigInt& c) const {
  if (c == 0) throw Error(ErrorCode::InvalidSeries, "division by zero");
  Series r(*this);
  for (auto& x : r.coeffs_) {
    if (x % c != 0) throw Error(ErrorCode::InvalidSeries, "coefficient not divisible");
    x /= c;
  }
  return r;
}

BivariateSeries::BivariateSeries(const Series& s) : rows_(s.order() + 1) {
  for (unsigned n = 0; n <= s.order(); ++n) {
    if (s[n] != 0) rows_[n] = {s[n]};
  }
}

void BivariateSeries::trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void BivariateSeries::require_same_order(const BivariateSeries& o) const {
  if (o.order() != order()) throw Error(ErrorCode::InvalidSeries, "series orders differ");
}

BigInt BivariateSeries::coefficient(unsigned n, unsigned k) const {
  if (n > order() || k >= rows_[n].size()) return 0;
  return rows_[n][k];
}

std::vector<BigInt> BivariateSeries::row(unsigned n) const {
  if (n > order()) throw Error(ErrorCode::OutOfRange, "row beyond truncation order");
  return rows_[n];
}

BivariateSeries BivariateSeries::times_t(unsigned power) const {
  BivariateSeries r(order());
  for (unsigned n = 0; n <= order(); ++n) {
    if (rows_[n].empty()) continue;
    r.rows_[n].assign(power, 0);
    r.rows_[n].insert(r.rows_[n].end(), rows_[n].begin(), rows_[n].end());
  }
  return r;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
  require_same_order(o);
  BivariateSeries r(*this);
  for (unsigned n = 0; n <= order(); ++n) {
    auto& p = r.rows_[n];
    if (p.size() < o.rows_[n].size()) p.resize(o.rows_[n].size());
    for (std::size_t k = 0; k < o.rows_[n].size(); ++k) p[k] += o.rows_[n][k];
    trim(p);
  }
  return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
  require_same_order(o);
  BivariateSeries r(*this);
  for (unsigned n = 0; n <= order(); ++n) {
    auto& p = r.rows_[n];
    if (p.size() < o.rows_[n].size()) p.resize(o.rows_[n].size());
    for (std::size_t k = 0; k < o.rows_[n].size(); ++k) p[k] -= o.rows_[n][k];
    trim(p);
  }
  return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
  require_same_order(o);
  BivariateSeries r(order());
  for (unsigned i = 0; i <= order(); ++i) {
    if (rows_[i].empty()) continue;
    for (unsigned j = 0; i + j <= order(); ++j) {
      const auto& b = o.rows_[j];
      if (b.empty()) continue;
      auto& p = r.rows_[i + j];
      if (p.size() < rows_[i].size() + b.size() - 1) p.resize(rows_[i].size() + b.size() - 1);
      for (std::size_t a = 0; a < rows_[i].size(); ++a) {
        for (std::size_t c = 0; c < b.size(); ++c) p[a + c] += rows_[i][a] * b[c];
      }
    }
  }
  for (auto& p : r.rows_) trim(p);
  return r;
}

BivariateSeries BivariateSeries::operator/(const BivariateSeries& divisor) const {
  require_same_order(divisor);
  const Poly& lead = divisor.rows_[0];
  if (lead.size() != 1 || (lead[0] != 1 && lead[0] != -1)) {
    throw Error(ErrorCode::InvalidSeries, "divisor must have x^0 coefficient +1 or -1");
  }
  BivariateSeries q(order());
  for (unsigned n = 0; n <= order(); ++n) {
    Poly acc = rows_[n];
    for (unsigned i = 1; i <= n; ++i) {
      const Poly& d = divisor.rows_[i];
      const Poly& prev = q.rows_[n - i];
      if (d.empty() || prev.empty()) continue;
      if (acc.size() < d.size() + prev.size() - 1) acc.resize(d.size() + prev.size() - 1);
      for (std::size_t a = 0; a < d.size(); ++a) {
        for (std::size_t b = 0; b < prev.size(); ++b) acc[a + b] -= d[a] * prev[b];
      }
    }
    for (auto& c : acc) c *= lead[0];
    trim(acc);
    q.rows_[n] = std::move(acc);
  }
  return q;
}

Series series_fa(unsigned order) {
  if (order < 1) throw Error(ErrorCode::InvalidSeries, "f_A needs order >= 1");
  const Series one = Series::monomial(order, 0, 1);
  return one - one / Series::factorials(order);
}

Series series_fb(unsigned order) {
  if (order < 1) throw Error(ErrorCode::InvalidSeries, "f_B needs order >= 1");
  return Series::signed_factorials(order) / Series::factorials(order);
}

Series series_fd(unsigned order) {
  if (order < 2) throw Error(ErrorCode::InvalidSeries, "f_D needs order >= 2");
  const Series numerator = Series::monomial(order, 0, 3) + Series::signed_factorials(order);
  return (numerator / Series::factorials(order)).exact_divide(2) + Series::x(order) -
         Series::monomial(order, 0, 2);
}

BivariateSeries bivariate_series(GroupType type, unsigned order) {
  if (order < 1) throw Error(ErrorCode::InvalidSeries, "bivariate series needs order >= 1");
  const BivariateSeries fa(series_fa(order));
  const BivariateSeries denominator = BivariateSeries(Series::monomial(order, 0, 1)) - fa.times_t();
  switch (type) {
    case GroupType::A:
      return fa / denominator;
    case GroupType::B:
      return BivariateSeries(series_fb(order)) / denominator;
    case GroupType::D: {
      const unsigned d_order = std::max(order, 2u);
      BivariateSeries fd(order);
      {
        const Series full = series_fd(d_order);
        std::vector<BigInt> c(full.coefficients().begin(), full.coefficients().begin() + order + 1);
        fd = BivariateSeries(Series(order, std::move(c)));
      }
      const BivariateSeries x(Series::x(order));
      const BivariateSeries two(Series::monomial(order, 0, 2));
      const BivariateSeries numerator =
          two * fa.times_t() - two * x.times_t() + (x * fa).times_t(2) + fd;
      return numerator / denominator;
    }
  }
  throw Error(ErrorCode::InvalidSeries, "unknown group type");
}

}  // namespace coxconn
