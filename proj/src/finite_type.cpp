#include "coxeter/finite_type.hpp"

#include <algorithm>
#include <array>

#include "coxeter/error.hpp"
#include "coxeter/word_problem.hpp"

namespace coxeter {

std::string FiniteTypeTag::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(parameter);
    case Family::B: return "B" + std::to_string(parameter);
    case Family::D: return "D" + std::to_string(parameter);
    case Family::E: return "E" + std::to_string(parameter);
    case Family::F: return "F" + std::to_string(parameter);
    case Family::H: return "H" + std::to_string(parameter);
    case Family::I2: return "I2(" + std::to_string(parameter) + ")";
  }
  return "?";
}

std::vector<DiagramComponent> components(const CoxeterMatrix& m, GeneratorSet subset) {
  if (subset.extent() > m.rank()) {
    throw Error(ErrorCode::IndexOutOfRange, "subset contains generator " +
                                                std::to_string(subset.extent() - 1) +
                                                " beyond rank " + std::to_string(m.rank()));
  }
  std::vector<DiagramComponent> out;
  GeneratorSet unseen = subset;
  while (!unseen.empty()) {
    DiagramComponent c;
    std::vector<Generator> stack{static_cast<Generator>(unseen.min())};
    unseen.erase(stack.back());
    c.members.insert(stack.back());
    while (!stack.empty()) {
      const Generator s = stack.back();
      stack.pop_back();
      for (Generator t : unseen.members()) {
        if (m(s, t).is_edge()) {
          unseen.erase(t);
          c.members.insert(t);
          stack.push_back(t);
        }
      }
    }
    const auto members = c.members.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (m(members[i], members[j]).is_edge()) c.edges.emplace_back(members[i], members[j]);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Number of vertices reached walking away from `from` through `next`
// along a path (every vertex past `next` has degree <= 2).
unsigned arm_length(const std::vector<std::vector<Generator>>& adj, Generator from, Generator next) {
  unsigned length = 1;
  Generator prev = from;
  Generator cur = next;
  while (adj[cur].size() == 2) {
    const Generator after = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = after;
    ++length;
  }
  return length;
}

}  // namespace

std::optional<FiniteTypeTag> classify_component(const DiagramComponent& c,
                                                const CoxeterMatrix& m) {
  const auto members = c.members.members();
  const unsigned n = static_cast<unsigned>(members.size());
  if (n == 1) return FiniteTypeTag{Family::A, 1};

  for (const auto& [s, t] : c.edges) {
    if (m(s, t).is_infinite()) return std::nullopt;
  }
  if (n == 2) {
    const std::uint32_t label = m(members[0], members[1]).value();
    if (label == 3) return FiniteTypeTag{Family::A, 2};
    if (label == 4) return FiniteTypeTag{Family::B, 2};
    return FiniteTypeTag{Family::I2, label};
  }

  // Rank >= 3: the diagram must be a tree with labels at most 5.
  if (c.edges.size() != n - 1) return std::nullopt;
  std::vector<std::vector<Generator>> adj(m.rank());
  unsigned heavy = 0;  // edges labelled 4 or 5
  for (const auto& [s, t] : c.edges) {
    const std::uint32_t label = m(s, t).value();
    if (label >= 6) return std::nullopt;
    if (label >= 4) ++heavy;
    adj[s].push_back(t);
    adj[t].push_back(s);
  }

  std::vector<Generator> branch;
  std::vector<Generator> ends;
  for (Generator s : members) {
    if (adj[s].size() > 3) return std::nullopt;
    if (adj[s].size() == 3) branch.push_back(s);
    if (adj[s].size() == 1) ends.push_back(s);
  }

  if (!branch.empty()) {
    // D and E: a single trivalent vertex, simply laced.
    if (branch.size() > 1 || heavy > 0) return std::nullopt;
    const Generator centre = branch.front();
    std::array<unsigned, 3> arms{};
    for (std::size_t i = 0; i < 3; ++i) arms[i] = arm_length(adj, centre, adj[centre][i]);
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return FiniteTypeTag{Family::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return FiniteTypeTag{Family::E, n};
    return std::nullopt;
  }

  // A path: list its labels from one end to the other.
  std::vector<std::uint32_t> labels;
  Generator prev = ends.front();
  Generator cur = adj[prev].front();
  labels.push_back(m(prev, cur).value());
  while (adj[cur].size() == 2) {
    const Generator after = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    labels.push_back(m(cur, after).value());
    prev = cur;
    cur = after;
  }
  if (heavy == 0) return FiniteTypeTag{Family::A, n};
  if (heavy > 1) return std::nullopt;

  const auto pos = static_cast<std::size_t>(
      std::find_if(labels.begin(), labels.end(), [](std::uint32_t l) { return l >= 4; }) -
      labels.begin());
  const bool at_end = pos == 0 || pos + 1 == labels.size();
  const std::uint32_t label = labels[pos];
  if (label == 4) {
    if (at_end) return FiniteTypeTag{Family::B, n};
    if (n == 4) return FiniteTypeTag{Family::F, 4};
    return std::nullopt;
  }
  if (at_end && (n == 3 || n == 4)) return FiniteTypeTag{Family::H, n};
  return std::nullopt;
}

bool is_spherical(const CoxeterMatrix& m, GeneratorSet subset) {
  for (const auto& c : components(m, subset)) {
    if (!classify_component(c, m)) return false;
  }
  return true;
}

CanonicalElement longest_element(WordProblem& wp, GeneratorSet subset) {
  if (!is_spherical(wp.matrix(), subset)) {
    throw Error(ErrorCode::NotSpherical, "parabolic subgroup on the given subset is infinite");
  }
  CanonicalElement w;
  while (true) {
    const GeneratorSet ascents = subset.minus(wp.right_descents(w));
    if (ascents.empty()) return w;
    w = wp.multiply(w, static_cast<Generator>(ascents.min()));
  }
}

CanonicalElement longest_element(const CoxeterMatrix& m, GeneratorSet subset) {
  WordProblem wp(m);
  return longest_element(wp, subset);
}

namespace {

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::uint64_t coxeter_order(const FiniteTypeTag& tag) {
  const unsigned n = tag.parameter;
  switch (tag.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      return n == 6 ? 51'840 : n == 7 ? 2'903'040 : 696'729'600;
    case Family::F: return 1'152;
    case Family::H: return n == 3 ? 120 : 14'400;
    case Family::I2: return 2 * std::uint64_t{n};
  }
  return 0;
}

}  // namespace coxeter
