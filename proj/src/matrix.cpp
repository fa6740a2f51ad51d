#include "coxeter/matrix.hpp"

#include <sstream>

#include "coxeter/error.hpp"

namespace coxeter {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::DiagonalNotOne: return "DiagonalNotOne";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::OffDiagonalTooSmall: return "OffDiagonalTooSmall";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

std::string Label::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(*value_);
}

namespace {

std::string at(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << " at (" << i << ", " << j << ")";
  return os.str();
}

}  // namespace

CoxeterMatrix validate_matrix(const std::vector<std::vector<Label>>& raw, unsigned max_rank) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorCode::EmptyMatrix, "Coxeter matrix has rank 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(raw[i].size()) + " entries, expected " +
                                            std::to_string(n));
    }
  }
  const unsigned limit = std::min(max_rank, kRankLimit);
  if (n > limit) {
    throw Error(ErrorCode::RankTooLarge,
                "rank " + std::to_string(n) + " exceeds maximum " + std::to_string(limit));
  }
  std::vector<Label> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Label& l = raw[i][j];
      if (i == j) {
        if (l != Label::finite(1)) {
          throw Error(ErrorCode::DiagonalNotOne, "diagonal entry is " + l.to_string() + at(i, j));
        }
      } else {
        if (l != raw[j][i]) {
          throw Error(ErrorCode::NotSymmetric, "m(s,t) = " + l.to_string() + " but m(t,s) = " +
                                                   raw[j][i].to_string() + at(i, j));
        }
        if (l.is_finite() && l.value() < 2) {
          throw Error(ErrorCode::OffDiagonalTooSmall,
                      "off-diagonal entry " + l.to_string() + " is below 2" + at(i, j));
        }
      }
      entries.push_back(l);
    }
  }
  return CoxeterMatrix(static_cast<unsigned>(n), std::move(entries));
}

CoxeterMatrix validate_matrix(const std::vector<std::vector<int>>& raw, unsigned max_rank) {
  std::vector<std::vector<Label>> labels;
  labels.reserve(raw.size());
  for (const auto& row : raw) {
    auto& out = labels.emplace_back();
    out.reserve(row.size());
    for (int v : row) {
      // Negative values are kept finite (as 0) so validation reports them.
      out.push_back(v == 0 ? Label::infinity()
                           : Label::finite(v < 0 ? 0u : static_cast<std::uint32_t>(v)));
    }
  }
  return validate_matrix(labels, max_rank);
}

CoxeterMatrix matrix_from_upper(unsigned rank, const std::vector<int>& upper) {
  std::vector<std::vector<int>> raw(rank, std::vector<int>(rank, 1));
  std::size_t k = 0;
  for (unsigned i = 0; i < rank; ++i) {
    for (unsigned j = i + 1; j < rank; ++j) {
      const int v = k < upper.size() ? upper[k] : 2;
      raw[i][j] = raw[j][i] = v;
      ++k;
    }
  }
  return validate_matrix(raw);
}

CoxeterMatrix CoxeterMatrix::restrict_to(GeneratorSet subset) const {
  const auto members = subset.members();
  std::vector<Label> entries;
  entries.reserve(members.size() * members.size());
  for (Generator s : members) {
    for (Generator t : members) entries.push_back((*this)(s, t));
  }
  return CoxeterMatrix(static_cast<unsigned>(members.size()), std::move(entries));
}

}  // namespace coxeter
