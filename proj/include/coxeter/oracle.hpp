#pragma once

// Brute-force verification machinery. Nothing here touches WordProblem:
// elements are identified through the faithful geometric representation,
// so agreement with the trusted path is a genuine cross-check.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "coxeter/generator_set.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/word.hpp"

namespace coxeter::oracle {

inline constexpr std::size_t kDefaultEnumerationCap = 20'000;
inline constexpr unsigned kDefaultBallRadius = 8;
inline constexpr double kEigenTolerance = 1e-9;

struct EnumerationResult {
  std::vector<CanonicalElement> elements;  // shortlex-sorted
  bool complete = false;
};

/// The Tits representation: s acts on the basis of simple roots by
/// v -> v - 2B(a_s, v) a_s with B(a_s, a_t) = -cos(pi/m(s,t)) (-1 for infinity).
class GeometricRepresentation {
public:
  explicit GeometricRepresentation(const CoxeterMatrix& m);

  unsigned rank() const { return rank_; }
  const Eigen::MatrixXd& generator(unsigned s) const { return generators_[s]; }
  Eigen::MatrixXd image(std::span<const Generator> w) const;
  bool same_element(std::span<const Generator> u, std::span<const Generator> v) const;

private:
  unsigned rank_;
  std::vector<Eigen::MatrixXd> generators_;
};

/// Breadth-first search from the identity over right multiplication by
/// generators, one shortlex layer at a time, deduplicating by matrix image.
/// Because layers are expanded in shortlex order with ascending generators,
/// the first word to reach an element is its shortlex normal form.
/// Stops with complete=false once `cap` elements are found and more exist;
/// with `strict` set, throws CapExceeded instead.
EnumerationResult enumerate_group(const CoxeterMatrix& m,
                                  std::size_t cap = kDefaultEnumerationCap,
                                  bool strict = false);

/// All elements of length <= radius, shortlex-sorted.
std::vector<CanonicalElement> ball(const CoxeterMatrix& m, unsigned radius = kDefaultBallRadius);

/// Members of `scope` commuting with every generator.
std::vector<CanonicalElement> brute_center(const CoxeterMatrix& m,
                                           const std::vector<CanonicalElement>& scope);

/// Eigenvalues (ascending) of the cosine matrix restricted to `subset`.
std::vector<double> gram_eigenvalues(const CoxeterMatrix& m, GeneratorSet subset);

/// True iff the restricted cosine matrix has minimum eigenvalue above 1e-9.
bool gram_positive_definite(const CoxeterMatrix& m, GeneratorSet subset);

}  // namespace coxeter::oracle
