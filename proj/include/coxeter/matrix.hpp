#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/generator_set.hpp"

namespace coxeter {

/// Edge label m(s,t): a positive integer or infinity. Infinity is its own
/// state, never an integer sentinel.
class Label {
public:
  static constexpr Label finite(std::uint32_t m) { return Label(m); }
  static constexpr Label infinity() { return Label(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  // Only meaningful when finite.
  constexpr std::uint32_t value() const { return *value_; }

  // Commuting generators (m = 2) are not joined in the diagram.
  constexpr bool is_edge() const { return is_infinite() || *value_ >= 3; }

  friend constexpr bool operator==(const Label&, const Label&) = default;

  std::string to_string() const;

private:
  constexpr Label() = default;
  constexpr explicit Label(std::uint32_t m) : value_(m) {}
  std::optional<std::uint32_t> value_;
};

inline constexpr unsigned kDefaultMaxRank = 10;

/// A validated Coxeter matrix. Instances can only be obtained through
/// `validate_matrix`, so every CoxeterMatrix satisfies m(s,s)=1,
/// m(s,t)=m(t,s) and m(s,t)>=2 off the diagonal.
class CoxeterMatrix {
public:
  unsigned rank() const { return rank_; }
  const Label& operator()(unsigned s, unsigned t) const { return entries_[s * rank_ + t]; }

  GeneratorSet generators() const { return GeneratorSet::all(rank_); }

  /// The matrix of the parabolic subsystem on `subset`, re-indexed densely
  /// from 0 in increasing order of the original indices.
  CoxeterMatrix restrict_to(GeneratorSet subset) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
  friend CoxeterMatrix validate_matrix(const std::vector<std::vector<Label>>&, unsigned);
  CoxeterMatrix(unsigned rank, std::vector<Label> entries)
      : rank_(rank), entries_(std::move(entries)) {}

  unsigned rank_;
  std::vector<Label> entries_;
};

/// Checks the three Coxeter conditions and the rank bound. Throws
/// coxeter::Error with NotSquare, EmptyMatrix, DiagonalNotOne, NotSymmetric,
/// OffDiagonalTooSmall or RankTooLarge.
CoxeterMatrix validate_matrix(const std::vector<std::vector<Label>>& raw,
                              unsigned max_rank = kDefaultMaxRank);

/// Integer-array convenience overload: 0 encodes infinity.
CoxeterMatrix validate_matrix(const std::vector<std::vector<int>>& raw,
                              unsigned max_rank = kDefaultMaxRank);

/// Builds a matrix from the upper-triangle labels only (0 = infinity),
/// listed row by row: m(0,1), m(0,2), ..., m(1,2), ...
CoxeterMatrix matrix_from_upper(unsigned rank, const std::vector<int>& upper);

}  // namespace coxeter
