#include "coxeter/word_problem.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxeter/error.hpp"

namespace coxeter {

namespace {

std::string key_of(std::span<const Generator> w) { return std::string(w.begin(), w.end()); }

}  // namespace

WordProblem::WordProblem(CoxeterMatrix m, std::size_t node_cap)
    : matrix_(std::move(m)), rank_(matrix_.rank()), node_cap_(std::max<std::size_t>(node_cap, 1)) {
  nodes_.push_back(Node{Word{}, kUnknown, 0});
  products_.assign(rank_, kUnknown);
  index_.emplace(std::string{}, 0);
}

std::uint32_t WordProblem::label(Generator s, Generator t) const {
  const Label& l = matrix_(s, t);
  return l.is_infinite() ? 0u : l.value();
}

WordProblem::NodeId WordProblem::step(NodeId x, Generator s) {
  return has_descent(x, s) ? descend(x, s) : ascend(x, s);
}

WordProblem::NodeId WordProblem::ascend(NodeId x, Generator s) {
  if (NodeId cached = product(x, s); cached != kUnknown) return cached;

  // Right descents of y = x*s, and for each descent t the node of y*t.
  std::uint32_t descents = 1u << s;
  std::vector<std::pair<Generator, NodeId>> below{{s, x}};
  for (Generator t = 0; t < rank_; ++t) {
    if (t == s) continue;
    const std::uint32_t m = label(s, t);
    if (m == 0) continue;
    // x must descend m-1 times along t, s, t, ...
    NodeId cur = x;
    bool chain = true;
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
      const Generator g = i % 2 == 0 ? t : s;
      if (!has_descent(cur, g)) {
        chain = false;
        break;
      }
      cur = descend(cur, g);
    }
    if (!chain) continue;
    descents |= 1u << t;
    // cur is the minimal coset representative; climb m-1 letters ending in s.
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
      const Generator g = (m - 2 - i) % 2 == 0 ? s : t;
      cur = step(cur, g);
    }
    below.emplace_back(t, cur);
  }

  // Shortlex normal form: least nf(y*t) + t over the descents t.
  auto best = below.begin();
  for (auto it = below.begin() + 1; it != below.end(); ++it) {
    const Word& a = nodes_[it->second].word;
    const Word& b = nodes_[best->second].word;
    if (a < b || (a == b && it->first < best->first)) best = it;
  }
  Word word = nodes_[best->second].word;
  word.push_back(best->first);

  NodeId y;
  std::string key = key_of(word);
  if (auto found = index_.find(key); found != index_.end()) {
    y = found->second;
  } else {
    if (nodes_.size() >= node_cap_) {
      throw Error(ErrorCode::CapExceeded,
                  "word problem exceeded " + std::to_string(node_cap_) + " cached elements");
    }
    y = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{std::move(word), best->second, descents});
    products_.resize(products_.size() + rank_, kUnknown);
    index_.emplace(std::move(key), y);
  }
  for (const auto& [t, z] : below) {
    product(y, t) = z;
    product(z, t) = y;
  }
  return y;
}

WordProblem::NodeId WordProblem::descend(NodeId x, Generator s) {
  if (NodeId cached = product(x, s); cached != kUnknown) return cached;
  if (!has_descent(x, s)) throw std::logic_error("descend called on an ascent");
  const Generator last = nodes_[x].word.back();
  const NodeId parent = nodes_[x].parent;
  if (last == s) {
    product(x, s) = parent;
    product(parent, s) = x;
    return parent;
  }
  // Both s and `last` are descents, so the {s,last}-part of x is the
  // longest dihedral element. Walk down to the coset minimum, then climb
  // the m-1 letters that end in `last`.
  const std::uint32_t m = label(s, last);
  NodeId cur = parent;
  for (std::uint32_t i = 0; i + 1 < m; ++i) {
    cur = descend(cur, i % 2 == 0 ? s : last);
  }
  for (std::uint32_t i = 0; i + 1 < m; ++i) {
    cur = step(cur, (m - 2 - i) % 2 == 0 ? last : s);
  }
  product(x, s) = cur;
  product(cur, s) = x;
  return cur;
}

WordProblem::NodeId WordProblem::locate(std::span<const Generator> w) {
  check_word(w, rank_);
  NodeId cur = 0;
  for (Generator s : w) cur = step(cur, s);
  return cur;
}

CanonicalElement WordProblem::reduce(std::span<const Generator> w) {
  return CanonicalElement(nodes_[locate(w)].word);
}

CanonicalElement WordProblem::multiply(const CanonicalElement& a, const CanonicalElement& b) {
  Word w = a.letters();
  w.insert(w.end(), b.letters().begin(), b.letters().end());
  return reduce(w);
}

CanonicalElement WordProblem::multiply(const CanonicalElement& a, Generator s) {
  check_word(std::span<const Generator>(&s, 1), rank_);
  return CanonicalElement(nodes_[step(locate(a.letters()), s)].word);
}

CanonicalElement WordProblem::left_multiply(Generator s, const CanonicalElement& a) {
  Word w{s};
  w.insert(w.end(), a.letters().begin(), a.letters().end());
  return reduce(w);
}

CanonicalElement WordProblem::invert(const CanonicalElement& a) {
  Word w(a.letters().rbegin(), a.letters().rend());
  return reduce(w);
}

GeneratorSet WordProblem::right_descents(const CanonicalElement& a) {
  return GeneratorSet(nodes_[locate(a.letters())].descents);
}

GeneratorSet WordProblem::left_descents(const CanonicalElement& a) {
  return right_descents(invert(a));
}

bool WordProblem::commutes_with(const CanonicalElement& a, GeneratorSet set) {
  for (Generator s : set.members()) {
    if (multiply(a, s) != left_multiply(s, a)) return false;
  }
  return true;
}

CanonicalElement reduce(std::span<const Generator> w, const CoxeterMatrix& m) {
  return WordProblem(m).reduce(w);
}

CanonicalElement multiply(const CanonicalElement& a, const CanonicalElement& b,
                          const CoxeterMatrix& m) {
  return WordProblem(m).multiply(a, b);
}

CanonicalElement invert(const CanonicalElement& a, const CoxeterMatrix& m) {
  return WordProblem(m).invert(a);
}

GeneratorSet right_descents(const CanonicalElement& a, const CoxeterMatrix& m) {
  return WordProblem(m).right_descents(a);
}

}  // namespace coxeter
