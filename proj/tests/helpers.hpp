#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "coxeter/oracle.hpp"
#include "coxeter/word.hpp"

namespace coxeter::testing {

// Normal form of `w` read off a complete brute-force enumeration.
inline Word oracle_normal_form(const CoxeterMatrix& m, const Word& w) {
  const oracle::GeometricRepresentation rep(m);
  const auto all = oracle::enumerate_group(m);
  if (!all.complete) throw std::runtime_error("oracle_normal_form needs a finite group");
  for (const auto& e : all.elements) {
    if (rep.same_element(e.letters(), w)) return e.letters();
  }
  throw std::runtime_error("element not found in enumeration");
}

inline Word random_word(std::mt19937& rng, unsigned rank, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<unsigned> letter(0, rank - 1);
  Word w(length(rng));
  for (auto& s : w) s = static_cast<Generator>(letter(rng));
  return w;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace coxeter::testing
