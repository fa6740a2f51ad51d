#pragma once

#include <optional>
#include <vector>

#include "coxeter/finite_type.hpp"
#include "coxeter/generator_set.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/word.hpp"

namespace coxeter {

class WordProblem;

/// Z(W) as an elementary abelian 2-group.
struct CenterDescription {
  unsigned rank_n = 0;
  // Central longest elements w_T, ordered by the least index of T.
  std::vector<CanonicalElement> generators;
  // supports[i] is the spherical subset T carrying generators[i].
  std::vector<GeneratorSet> supports;
  // All 2^rank_n products of generator subsets, shortlex-sorted.
  std::vector<CanonicalElement> elements;
};

/// Split of S into the union of infinite irreducible components (members)
/// and the union of finite ones (complement).
struct EssentialSubset {
  GeneratorSet members;
  GeneratorSet complement;
};

EssentialSubset essential_subset(const CoxeterMatrix& m);

/// For a finite irreducible component c, Z(W_c) is {1, w0(c)} or trivial;
/// returns w0(c) in the first case and nullopt in the second. Throws
/// NotSpherical when c is not of finite type.
std::optional<CanonicalElement> component_center(WordProblem& wp, const DiagramComponent& c);
std::optional<CanonicalElement> component_center(const CoxeterMatrix& m, const DiagramComponent& c);

CenterDescription center(WordProblem& wp);
CenterDescription center(const CoxeterMatrix& m);

struct Theorem2Report {
  bool supports_in_finite_part = false;  // every support lies in S minus S~
  bool finite_part_matches = false;      // Z(W_{S minus S~}) == Z(W) after re-indexing
  bool essential_part_trivial = false;   // Z(W_{S~}) == 1

  EssentialSubset split;
  std::vector<Generator> finite_part_map;     // new index -> original index
  std::vector<Generator> essential_part_map;  // new index -> original index
  CenterDescription full_center;

  bool all() const {
    return supports_in_finite_part && finite_part_matches && essential_part_trivial;
  }
};

/// Evaluates Z(W) = Z(W_{S minus S~}) and Z(W_{S~}) = 1 on a concrete
/// system. A false field means a bug, not a counterexample.
Theorem2Report check_theorem2(const CoxeterMatrix& m);

/// Maps a word of a restricted system back to the original indices.
Word remap_word(const Word& w, const std::vector<Generator>& index_map);

}  // namespace coxeter
