#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxconn/classical.hpp"

namespace coxconn {

using BigInt = boost::multiprecision::cpp_int;

/// Power series in x truncated after x^order, with exact integer coefficients.
/// Binary operations require equal orders.
class Series {
 public:
  explicit Series(unsigned order) : coeffs_(order + 1) {}
  /// Throws InvalidSeries if more than order+1 coefficients are given.
  Series(unsigned order, std::vector<BigInt> coeffs);

  static Series x(unsigned order) { return monomial(order, 1, 1); }
  static Series monomial(unsigned order, unsigned degree, const BigInt& c);
  /// Σ n! x^n
  static Series factorials(unsigned order);
  /// Σ 2^n n! x^n
  static Series signed_factorials(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const BigInt& operator[](unsigned degree) const { return coeffs_.at(degree); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const BigInt& c) const;
  Series operator-() const;

  /// Quotient by a series whose constant term is ±1, by coefficient recurrence.
  Series operator/(const Series& divisor) const;
  /// Divides every coefficient by c; throws InvalidSeries if any is not a multiple.
  Series exact_divide(const BigInt& c) const;

  bool operator==(const Series&) const = default;

 private:
  void require_same_order(const Series& o) const;

  std::vector<BigInt> coeffs_;
};

/// Series in x truncated after x^order whose coefficients are polynomials in t.
class BivariateSeries {
 public:
  explicit BivariateSeries(unsigned order) : rows_(order + 1) {}
  /// The series s with t-degree 0.
  explicit BivariateSeries(const Series& s);

  unsigned order() const { return static_cast<unsigned>(rows_.size() - 1); }
  /// Coefficient of x^n t^k (zero when absent).
  BigInt coefficient(unsigned n, unsigned k) const;
  /// Coefficients of t^0, t^1, ... in the x^n row, trailing zeros removed.
  std::vector<BigInt> row(unsigned n) const;

  BivariateSeries times_t(unsigned power = 1) const;
  BivariateSeries operator+(const BivariateSeries& o) const;
  BivariateSeries operator-(const BivariateSeries& o) const;
  BivariateSeries operator*(const BivariateSeries& o) const;
  /// The divisor's x^0 row must be the constant ±1.
  BivariateSeries operator/(const BivariateSeries& divisor) const;

 private:
  using Poly = std::vector<BigInt>;
  static void trim(Poly& p);
  void require_same_order(const BivariateSeries& o) const;

  std::vector<Poly> rows_;
};

/// 1 - 1/Σ n! x^n: connected permutations by size. Throws InvalidSeries for order 0.
Series series_fa(unsigned order);
/// Σ 2^n n! x^n / Σ n! x^n: type B elements with empty connectivity set.
Series series_fb(unsigned order);
/// (3 + Σ 2^n n! x^n) / (2 Σ n! x^n) + x - 2: type D elements with empty
/// connectivity set. Throws InvalidSeries for order < 2.
Series series_fd(unsigned order);

/// Σ |W_n^{(k)}| x^n t^k for the given family:
///   A: f_A / (1 - t f_A)
///   B: f_B / (1 - t f_A)
///   D: (2t f_A - 2tx + t^2 x f_A + f_D) / (1 - t f_A)
BivariateSeries bivariate_series(GroupType type, unsigned order);

}  // namespace coxconn
