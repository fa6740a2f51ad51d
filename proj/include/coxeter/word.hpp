#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coxeter/generator_set.hpp"
#include "coxeter/matrix.hpp"

namespace coxeter {

/// A word in S; the empty word is the identity.
using Word = std::vector<Generator>;

/// Shortlex order: shorter words first, then lexicographic on indices.
bool shortlex_less(std::span<const Generator> a, std::span<const Generator> b);

/// A group element in normal form: the shortlex-least reduced word.
/// Two CanonicalElements denote the same element iff their letters agree.
class CanonicalElement {
public:
  CanonicalElement() = default;
  explicit CanonicalElement(Word letters) : letters_(std::move(letters)) {}

  const Word& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const CanonicalElement&, const CanonicalElement&) = default;
  // Shortlex, so sorting a container of elements gives the canonical listing.
  friend bool operator<(const CanonicalElement& a, const CanonicalElement& b) {
    return shortlex_less(a.letters_, b.letters_);
  }

private:
  Word letters_;
};

/// Throws IndexOutOfRange unless every letter is below `rank`.
void check_word(std::span<const Generator> w, unsigned rank);

/// Distinct letters of a word.
GeneratorSet support(std::span<const Generator> w);
inline GeneratorSet support(const CanonicalElement& a) { return support(a.letters()); }

/// Space-separated indices, "" for the identity.
std::string format_word(std::span<const Generator> w);

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

/// All words reachable from `w` by braid moves, i.e. replacing an
/// alternating factor st... of length m(s,t) by ts... (finite m only).
/// Result is sorted shortlex and always contains `w`. Throws CapExceeded
/// when the orbit grows beyond `cap` words.
std::vector<Word> braid_orbit(std::span<const Generator> w, const CoxeterMatrix& m,
                              std::size_t cap = kDefaultOrbitCap);

/// Tits's solution of the word problem, run literally: search the braid
/// orbit for a word containing a factor ss, delete the first one found in
/// breadth-first order, repeat; once no orbit member has such a factor the
/// word is reduced and its shortlex-least orbit member is returned.
///
/// Exponential in the worst case. The library's trusted path is
/// `WordProblem`; this routine is the independent second route used to
/// cross-check it on small inputs.
CanonicalElement reduce_by_braid_moves(std::span<const Generator> w, const CoxeterMatrix& m,
                                       std::size_t cap = kDefaultOrbitCap);

}  // namespace coxeter
