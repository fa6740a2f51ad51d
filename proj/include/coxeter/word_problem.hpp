#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/generator_set.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/word.hpp"

namespace coxeter {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

/// Exact solver for the word problem of one Coxeter system.
///
/// Elements are discovered lazily as nodes of a partial Cayley graph. Each
/// node knows its shortlex normal form, its right descent set, and the
/// products with generators computed so far. Descents of a new element x*s
/// are derived from x alone: t != s is a descent of x*s exactly when m(s,t)
/// is finite and x admits m(s,t)-1 alternating descents t, s, t, ... (the
/// {s,t}-part of x*s is then the longest element of the dihedral
/// parabolic). Normal forms use prefix closure: the normal form of y is the
/// least word nf(y*t)+t over descents t of y.
///
/// Not thread-safe: the cache mutates on every query. Use one instance per
/// thread; results are identical regardless.
class WordProblem {
public:
  explicit WordProblem(CoxeterMatrix m, std::size_t node_cap = kDefaultNodeCap);

  const CoxeterMatrix& matrix() const { return matrix_; }

  /// Normal form of the element represented by `w`. Throws
  /// IndexOutOfRange for a bad letter, CapExceeded when the node budget
  /// runs out.
  CanonicalElement reduce(std::span<const Generator> w);

  CanonicalElement multiply(const CanonicalElement& a, const CanonicalElement& b);
  CanonicalElement multiply(const CanonicalElement& a, Generator s);
  CanonicalElement left_multiply(Generator s, const CanonicalElement& a);
  CanonicalElement invert(const CanonicalElement& a);

  GeneratorSet right_descents(const CanonicalElement& a);
  GeneratorSet left_descents(const CanonicalElement& a);

  /// True iff a*s == s*a for every generator s in `set`.
  bool commutes_with(const CanonicalElement& a, GeneratorSet set);

  std::size_t cached_elements() const { return nodes_.size(); }

private:
  using NodeId = std::uint32_t;
  static constexpr NodeId kUnknown = ~NodeId{0};

  struct Node {
    Word word;
    NodeId parent;  // node of word minus its last letter
    std::uint32_t descents;
  };

  NodeId locate(std::span<const Generator> w);
  NodeId step(NodeId x, Generator s);
  NodeId ascend(NodeId x, Generator s);
  NodeId descend(NodeId x, Generator s);
  NodeId& product(NodeId x, Generator s) { return products_[std::size_t{x} * rank_ + s]; }
  bool has_descent(NodeId x, Generator s) const { return (nodes_[x].descents >> s) & 1u; }
  std::uint32_t label(Generator s, Generator t) const;

  CoxeterMatrix matrix_;
  unsigned rank_;
  std::size_t node_cap_;
  std::vector<Node> nodes_;
  std::vector<NodeId> products_;
  std::unordered_map<std::string, NodeId> index_;
};

// One-shot conveniences; each builds a fresh solver.
CanonicalElement reduce(std::span<const Generator> w, const CoxeterMatrix& m);
CanonicalElement multiply(const CanonicalElement& a, const CanonicalElement& b,
                          const CoxeterMatrix& m);
CanonicalElement invert(const CanonicalElement& a, const CoxeterMatrix& m);
GeneratorSet right_descents(const CanonicalElement& a, const CoxeterMatrix& m);

}  // namespace coxeter
