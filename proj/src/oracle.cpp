#include "coxeter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "coxeter/error.hpp"

namespace coxeter::oracle {

namespace {

double cosine_entry(const Label& l) {
  if (l.is_infinite()) return -1.0;
  return -std::cos(std::numbers::pi / static_cast<double>(l.value()));
}

bool approx_equal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() <= 1e-8 * scale;
}

// Grid coordinates of a matrix image. The offset keeps rational entries
// such as 1/2 away from rounding boundaries.
using Key = std::vector<std::int64_t>;

Key quantize(std::span<const double> entries) {
  Key key(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    key[i] = std::llround(entries[i] * 1e6 + 0.2371);
  }
  return key;
}

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int64_t v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Explored {
  std::vector<Word> words;
  bool complete = true;
};

// Shortlex BFS. Elements with length < max_length are expanded. Images are
// kept row-major in one flat buffer; right multiplication by s is the
// rank-one update M - 2 (M e_s) b_s^T with b_s the s-th cosine row.
Explored explore(const CoxeterMatrix& m, std::size_t cap, std::size_t max_length, bool strict) {
  const std::size_t n = m.rank();
  const std::size_t stride = n * n;
  std::vector<double> cosine(stride);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      cosine[s * n + t] = s == t ? 1.0 : cosine_entry(m(s, t));
    }
  }

  Explored out;
  std::vector<double> images(stride, 0.0);
  for (std::size_t i = 0; i < n; ++i) images[i * n + i] = 1.0;
  std::unordered_map<Key, std::size_t, KeyHash> seen;
  seen.emplace(quantize(images), 0);
  out.words.emplace_back();

  std::vector<double> next(stride);
  for (std::size_t head = 0; head < out.words.size(); ++head) {
    if (out.words[head].size() >= max_length) continue;
    for (std::size_t s = 0; s < n; ++s) {
      const double* cur = images.data() + head * stride;
      for (std::size_t i = 0; i < n; ++i) {
        const double pivot = 2.0 * cur[i * n + s];
        for (std::size_t j = 0; j < n; ++j) {
          next[i * n + j] = cur[i * n + j] - pivot * cosine[s * n + j];
        }
      }
      Key key = quantize(next);
      if (seen.contains(key)) continue;
      if (out.words.size() >= cap) {
        if (strict) {
          throw Error(ErrorCode::CapExceeded,
                      "enumeration exceeds " + std::to_string(cap) + " elements");
        }
        out.complete = false;
        return out;
      }
      Word w = out.words[head];
      w.push_back(static_cast<Generator>(s));
      seen.emplace(std::move(key), out.words.size());
      out.words.push_back(std::move(w));
      images.insert(images.end(), next.begin(), next.end());
    }
  }
  return out;
}

std::vector<CanonicalElement> to_elements(std::vector<Word> words) {
  std::vector<CanonicalElement> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GeometricRepresentation::GeometricRepresentation(const CoxeterMatrix& m) : rank_(m.rank()) {
  generators_.reserve(rank_);
  for (unsigned s = 0; s < rank_; ++s) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(rank_, rank_);
    for (unsigned t = 0; t < rank_; ++t) {
      const double b = s == t ? 1.0 : cosine_entry(m(s, t));
      g(s, t) -= 2.0 * b;
    }
    generators_.push_back(std::move(g));
  }
}

Eigen::MatrixXd GeometricRepresentation::image(std::span<const Generator> w) const {
  check_word(w, rank_);
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(rank_, rank_);
  for (Generator s : w) out = out * generators_[s];
  return out;
}

bool GeometricRepresentation::same_element(std::span<const Generator> u,
                                           std::span<const Generator> v) const {
  return approx_equal(image(u), image(v));
}

EnumerationResult enumerate_group(const CoxeterMatrix& m, std::size_t cap, bool strict) {
  auto explored = explore(m, std::max<std::size_t>(cap, 1), SIZE_MAX, strict);
  return EnumerationResult{to_elements(std::move(explored.words)), explored.complete};
}

std::vector<CanonicalElement> ball(const CoxeterMatrix& m, unsigned radius) {
  return to_elements(explore(m, SIZE_MAX, radius, false).words);
}

std::vector<CanonicalElement> brute_center(const CoxeterMatrix& m,
                                           const std::vector<CanonicalElement>& scope) {
  const GeometricRepresentation rep(m);
  std::vector<CanonicalElement> out;
  for (const auto& e : scope) {
    const Eigen::MatrixXd image = rep.image(e.letters());
    bool central = true;
    for (unsigned s = 0; s < rep.rank() && central; ++s) {
      central = approx_equal(image * rep.generator(s), rep.generator(s) * image);
    }
    if (central) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> gram_eigenvalues(const CoxeterMatrix& m, GeneratorSet subset) {
  const auto members = subset.members();
  const auto n = static_cast<Eigen::Index>(members.size());
  if (n == 0) return {};
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      gram(i, j) = i == j ? 1.0 : cosine_entry(m(members[i], members[j]));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return std::vector<double>(values.data(), values.data() + values.size());
}

bool gram_positive_definite(const CoxeterMatrix& m, GeneratorSet subset) {
  const auto values = gram_eigenvalues(m, subset);
  return values.empty() || values.front() > kEigenTolerance;
}

}  // namespace coxeter::oracle
