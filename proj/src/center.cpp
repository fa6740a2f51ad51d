#include "coxeter/center.hpp"

#include <algorithm>

#include "coxeter/error.hpp"
#include "coxeter/word_problem.hpp"

namespace coxeter {

EssentialSubset essential_subset(const CoxeterMatrix& m) {
  EssentialSubset out;
  for (const auto& c : components(m, m.generators())) {
    if (classify_component(c, m)) {
      out.complement = out.complement | c.members;
    } else {
      out.members = out.members | c.members;
    }
  }
  return out;
}

std::optional<CanonicalElement> component_center(WordProblem& wp, const DiagramComponent& c) {
  if (!classify_component(c, wp.matrix())) {
    throw Error(ErrorCode::NotSpherical, "component center requested for an infinite component");
  }
  CanonicalElement w0 = longest_element(wp, c.members);
  if (wp.commutes_with(w0, c.members)) return w0;
  return std::nullopt;
}

std::optional<CanonicalElement> component_center(const CoxeterMatrix& m, const DiagramComponent& c) {
  WordProblem wp(m);
  return component_center(wp, c);
}

CenterDescription center(WordProblem& wp) {
  const CoxeterMatrix& m = wp.matrix();
  CenterDescription out;
  // components() lists by least member, which fixes the generator order.
  for (const auto& c : components(m, m.generators())) {
    if (!classify_component(c, m)) continue;
    if (auto w0 = component_center(wp, c)) {
      out.generators.push_back(std::move(*w0));
      out.supports.push_back(c.members);
    }
  }
  out.rank_n = static_cast<unsigned>(out.generators.size());
  const std::size_t count = std::size_t{1} << out.rank_n;
  out.elements.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    CanonicalElement e;
    for (unsigned i = 0; i < out.rank_n; ++i) {
      if ((mask >> i) & 1u) e = wp.multiply(e, out.generators[i]);
    }
    out.elements.push_back(std::move(e));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

CenterDescription center(const CoxeterMatrix& m) {
  WordProblem wp(m);
  return center(wp);
}

Word remap_word(const Word& w, const std::vector<Generator>& index_map) {
  Word out;
  out.reserve(w.size());
  for (Generator s : w) out.push_back(index_map.at(s));
  return out;
}

namespace {

// Center of the parabolic subsystem on `subset`, written in original indices.
std::vector<CanonicalElement> restricted_center(const CoxeterMatrix& m, GeneratorSet subset,
                                                const std::vector<Generator>& index_map) {
  if (subset.empty()) return {CanonicalElement{}};
  const CenterDescription sub = center(m.restrict_to(subset));
  std::vector<CanonicalElement> out;
  out.reserve(sub.elements.size());
  for (const auto& e : sub.elements) out.emplace_back(remap_word(e.letters(), index_map));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Theorem2Report check_theorem2(const CoxeterMatrix& m) {
  Theorem2Report report;
  report.split = essential_subset(m);
  report.finite_part_map = report.split.complement.members();
  report.essential_part_map = report.split.members.members();
  report.full_center = center(m);

  report.supports_in_finite_part = std::all_of(
      report.full_center.supports.begin(), report.full_center.supports.end(),
      [&](GeneratorSet t) { return t.is_subset_of(report.split.complement); });

  report.finite_part_matches =
      restricted_center(m, report.split.complement, report.finite_part_map) ==
      report.full_center.elements;

  const auto essential =
      restricted_center(m, report.split.members, report.essential_part_map);
  report.essential_part_trivial = essential.size() == 1 && essential.front().is_identity();
  return report;
}

}  // namespace coxeter
