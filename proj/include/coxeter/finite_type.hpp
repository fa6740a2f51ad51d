#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/generator_set.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/word.hpp"

namespace coxeter {

class WordProblem;

/// A connected component of the Coxeter diagram restricted to some subset.
/// Edges join s,t when m(s,t) >= 3 or m(s,t) is infinite.
struct DiagramComponent {
  GeneratorSet members;
  std::vector<std::pair<Generator, Generator>> edges;  // s < t

  friend bool operator==(const DiagramComponent&, const DiagramComponent&) = default;
};

enum class Family { A, B, D, E, F, H, I2 };

/// Isomorphism class of an irreducible finite Coxeter group.
struct FiniteTypeTag {
  Family family;
  unsigned parameter;  // rank for A/B/D/E/F/H, edge label for I2

  std::string to_string() const;
  friend bool operator==(const FiniteTypeTag&, const FiniteTypeTag&) = default;
};

/// Throws IndexOutOfRange when `subset` reaches past the rank.
std::vector<DiagramComponent> components(const CoxeterMatrix& m, GeneratorSet subset);

/// Template match against the classification of finite irreducible Coxeter
/// groups. nullopt means the component generates an infinite group.
std::optional<FiniteTypeTag> classify_component(const DiagramComponent& c,
                                                const CoxeterMatrix& m);

bool is_spherical(const CoxeterMatrix& m, GeneratorSet subset);

/// Greedy ascent to the longest element of W_subset: starting at the
/// identity, multiply by the least generator of `subset` that is not yet a
/// right descent. Throws NotSpherical when W_subset is infinite.
CanonicalElement longest_element(const CoxeterMatrix& m, GeneratorSet subset);
CanonicalElement longest_element(WordProblem& wp, GeneratorSet subset);

/// |W| for an irreducible finite type.
std::uint64_t coxeter_order(const FiniteTypeTag& tag);

}  // namespace coxeter
