#include "coxconn/coxeter_matrix.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coxconn/error.hpp"

namespace coxconn {

CoxeterMatrix::CoxeterMatrix(unsigned rank, std::vector<unsigned> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ == 0 || rank_ > kMaxRank) {
    throw Error(ErrorCode::InvalidMatrix, "rank must be in [1, 64]");
  }
  if (entries_.size() != std::size_t{rank_} * rank_) {
    throw Error(ErrorCode::InvalidMatrix, "matrix has wrong number of entries");
  }
  for (Generator s = 0; s < rank_; ++s) {
    if ((*this)(s, s) != 1) {
      throw Error(ErrorCode::InvalidMatrix, "diagonal entries must be 1");
    }
    for (Generator t = s + 1; t < rank_; ++t) {
      if ((*this)(s, t) != (*this)(t, s)) {
        throw Error(ErrorCode::InvalidMatrix, "matrix is not symmetric");
      }
      if ((*this)(s, t) == 1) {
        throw Error(ErrorCode::InvalidMatrix, "off-diagonal entries must be >= 2 or 0 (infinity)");
      }
    }
  }
}

namespace {

std::vector<unsigned> commuting(unsigned rank) {
  std::vector<unsigned> e(std::size_t{rank} * rank, 2);
  for (unsigned i = 0; i < rank; ++i) e[i * rank + i] = 1;
  return e;
}

void set_edge(std::vector<unsigned>& e, unsigned rank, unsigned s, unsigned t, unsigned m) {
  e[s * rank + t] = m;
  e[t * rank + s] = m;
}

}  // namespace

CoxeterMatrix CoxeterMatrix::type_a(unsigned rank) {
  if (rank == 0) throw Error(ErrorCode::InvalidMatrix, "type A needs rank >= 1");
  auto e = commuting(rank);
  for (unsigned i = 0; i + 1 < rank; ++i) set_edge(e, rank, i, i + 1, 3);
  return CoxeterMatrix(rank, std::move(e));
}

// Generator 0 is the sign change of position 1.
CoxeterMatrix CoxeterMatrix::type_b(unsigned rank) {
  if (rank == 0) throw Error(ErrorCode::InvalidMatrix, "type B needs rank >= 1");
  auto e = commuting(rank);
  for (unsigned i = 0; i + 1 < rank; ++i) set_edge(e, rank, i, i + 1, i == 0 ? 4 : 3);
  return CoxeterMatrix(rank, std::move(e));
}

// Generator 0 is t0 = τ0 τ1 τ0; it is joined to generator 2, not to 1.
CoxeterMatrix CoxeterMatrix::type_d(unsigned rank) {
  if (rank < 2) throw Error(ErrorCode::InvalidMatrix, "type D needs rank >= 2");
  auto e = commuting(rank);
  for (unsigned i = 1; i + 1 < rank; ++i) set_edge(e, rank, i, i + 1, 3);
  if (rank >= 3) set_edge(e, rank, 0, 2, 3);
  return CoxeterMatrix(rank, std::move(e));
}

CoxeterMatrix CoxeterMatrix::from_name(const std::string& name) {
  unsigned n = 0;
  if (name.size() < 2) throw Error(ErrorCode::ParseError, "bad group name '" + name + "'");
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc{} || ptr != name.data() + name.size()) {
    throw Error(ErrorCode::ParseError, "bad group name '" + name + "'");
  }
  switch (name[0]) {
    case 'A': return type_a(n);
    case 'B': return type_b(n);
    case 'D': return type_d(n);
    default: throw Error(ErrorCode::ParseError, "unknown group family in '" + name + "'");
  }
}

CoxeterMatrix CoxeterMatrix::parse(std::istream& in) {
  long long rank = 0;
  if (!(in >> rank) || rank <= 0 || rank > kMaxRank) {
    throw Error(ErrorCode::ParseError, "matrix file: expected rank in [1, 64] on line 1");
  }
  std::vector<unsigned> entries;
  entries.reserve(static_cast<std::size_t>(rank * rank));
  for (long long i = 0; i < rank * rank; ++i) {
    long long v = 0;
    if (!(in >> v) || v < 0) {
      throw Error(ErrorCode::ParseError, "matrix file: expected non-negative integer entry");
    }
    entries.push_back(static_cast<unsigned>(v));
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorCode::ParseError, "matrix file: trailing data");
  return CoxeterMatrix(static_cast<unsigned>(rank), std::move(entries));
}

CoxeterMatrix CoxeterMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open matrix file '" + path + "'");
  return parse(in);
}

std::ostream& operator<<(std::ostream& out, const CoxeterMatrix& m) {
  out << m.rank() << '\n';
  for (Generator s = 0; s < m.rank(); ++s) {
    for (Generator t = 0; t < m.rank(); ++t) {
      if (t) out << ' ';
      out << m(s, t);
    }
    out << '\n';
  }
  return out;
}

}  // namespace coxconn
