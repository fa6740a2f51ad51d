#include "coxeter/word.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>

#include "coxeter/error.hpp"

namespace coxeter {

bool shortlex_less(std::span<const Generator> a, std::span<const Generator> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_word(std::span<const Generator> w, unsigned rank) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= rank) {
      throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(w[i]) + " at position " +
                                                  std::to_string(i) + " is not below rank " +
                                                  std::to_string(rank));
    }
  }
}

GeneratorSet support(std::span<const Generator> w) {
  GeneratorSet out;
  for (Generator s : w) out.insert(s);
  return out;
}

std::string format_word(std::span<const Generator> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

namespace {

std::string key_of(std::span<const Generator> w) { return std::string(w.begin(), w.end()); }

Word word_of(const std::string& key) { return Word(key.begin(), key.end()); }

// Every word obtained from `w` by a single braid move, in order of position.
template <typename Visit>
void for_each_braid_move(const std::string& w, const CoxeterMatrix& m, Visit&& visit) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto s = static_cast<Generator>(w[i]);
    const auto t = static_cast<Generator>(w[i + 1]);
    if (s == t) continue;
    const Label& l = m(s, t);
    if (l.is_infinite()) continue;
    const std::size_t len = l.value();
    if (i + len > n) continue;
    bool alternating = true;
    for (std::size_t k = 0; k < len && alternating; ++k) {
      alternating = static_cast<Generator>(w[i + k]) == (k % 2 == 0 ? s : t);
    }
    if (!alternating) continue;
    std::string moved = w;
    for (std::size_t k = 0; k < len; ++k) moved[i + k] = static_cast<char>(k % 2 == 0 ? t : s);
    visit(std::move(moved));
  }
}

struct OrbitSearch {
  std::vector<std::string> visited;  // BFS order
  std::optional<std::pair<std::size_t, std::size_t>> square;  // (word index, position)
};

// Breadth-first over the braid orbit. With `stop_at_square` the search ends
// at the first word (in BFS order) containing a factor ss.
OrbitSearch search_orbit(std::span<const Generator> w, const CoxeterMatrix& m, std::size_t cap,
                         bool stop_at_square) {
  OrbitSearch out;
  std::unordered_set<std::string> seen;
  out.visited.push_back(key_of(w));
  seen.insert(out.visited.back());
  for (std::size_t head = 0; head < out.visited.size(); ++head) {
    const std::string current = out.visited[head];
    if (stop_at_square) {
      for (std::size_t i = 0; i + 1 < current.size(); ++i) {
        if (current[i] == current[i + 1]) {
          out.square = std::pair{head, i};
          return out;
        }
      }
    }
    for_each_braid_move(current, m, [&](std::string next) {
      if (seen.contains(next)) return;
      if (out.visited.size() >= cap) {
        throw Error(ErrorCode::CapExceeded,
                    "braid orbit exceeds " + std::to_string(cap) + " words");
      }
      seen.insert(next);
      out.visited.push_back(std::move(next));
    });
  }
  return out;
}

}  // namespace

std::vector<Word> braid_orbit(std::span<const Generator> w, const CoxeterMatrix& m,
                              std::size_t cap) {
  check_word(w, m.rank());
  auto search = search_orbit(w, m, cap, false);
  std::vector<Word> out;
  out.reserve(search.visited.size());
  for (const auto& key : search.visited) out.push_back(word_of(key));
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  return out;
}

CanonicalElement reduce_by_braid_moves(std::span<const Generator> w, const CoxeterMatrix& m,
                                       std::size_t cap) {
  check_word(w, m.rank());
  Word current(w.begin(), w.end());
  while (true) {
    auto search = search_orbit(current, m, cap, true);
    if (!search.square) {
      const auto& orbit = search.visited;
      auto least = std::min_element(orbit.begin(), orbit.end(),
                                    [](const std::string& a, const std::string& b) {
                                      return shortlex_less(word_of(a), word_of(b));
                                    });
      return CanonicalElement(word_of(*least));
    }
    const auto [index, pos] = *search.square;
    std::string shorter = search.visited[index];
    shorter.erase(pos, 2);
    current = word_of(shorter);
  }
}

}  // namespace coxeter
