#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coxconn/generator_set.hpp"

namespace coxconn {

/// Symmetric matrix m(s,t) of a Coxeter system. Entry 0 encodes m = ∞.
class CoxeterMatrix {
 public:
  static constexpr unsigned kInfinity = 0;

  /// entries is row-major, rank*rank values. Throws InvalidMatrix.
  CoxeterMatrix(unsigned rank, std::vector<unsigned> entries);

  // Classical families in Coxeter rank: type_a(3) is S_4, type_b(3) is the
  // hyperoctahedral group of order 48, type_d(4) has order 192.
  static CoxeterMatrix type_a(unsigned rank);
  static CoxeterMatrix type_b(unsigned rank);
  static CoxeterMatrix type_d(unsigned rank);

  /// "A<n>", "B<n>" or "D<n>" with n the Coxeter rank.
  static CoxeterMatrix from_name(const std::string& name);

  /// Line 1: rank; then rank lines of rank integers (0 = ∞).
  static CoxeterMatrix parse(std::istream& in);
  static CoxeterMatrix load(const std::string& path);

  unsigned rank() const { return rank_; }
  unsigned operator()(Generator s, Generator t) const { return entries_[s * rank_ + t]; }

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  unsigned rank_;
  std::vector<unsigned> entries_;
};

std::ostream& operator<<(std::ostream& out, const CoxeterMatrix& m);

}  // namespace coxconn
