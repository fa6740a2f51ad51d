#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coxeter/error.hpp"
#include "coxeter/word.hpp"
#include "helpers.hpp"
#include "systems.hpp"

using namespace coxeter;
using namespace coxeter::testing;

TEST_CASE("braid_orbit examples") {
  CHECK(braid_orbit(Word{0, 1, 0}, a2()) == std::vector<Word>{{0, 1, 0}, {1, 0, 1}});
  CHECK(braid_orbit(Word{0}, b2()) == std::vector<Word>{{0}});
  CHECK(braid_orbit(Word{0, 1}, infinite_dihedral()) == std::vector<Word>{{0, 1}});
  // A1 x A1: the two letters commute.
  CHECK(braid_orbit(Word{0, 1}, dihedral(2)) == std::vector<Word>{{0, 1}, {1, 0}});
}

TEST_CASE("braid_orbit respects the cap") {
  // Reduced words of w0(A3): 16 of them.
  const Word w0{0, 1, 0, 2, 1, 0};
  CHECK(braid_orbit(w0, a3()).size() == 16);
  CHECK_THROWS_AS(braid_orbit(w0, a3(), 10), Error);
  try {
    braid_orbit(w0, a3(), 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("braid_orbit rejects letters past the rank") {
  CHECK_THROWS_AS(braid_orbit(Word{0, 2}, a2()), Error);
}

TEST_CASE("braid orbits preserve length and letter set") {
  std::mt19937 rng(7);
  for (const auto& m : {a3(), b3(), h3(), triangle()}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_word(rng, m.rank(), 9);
      const auto letters = support(w);
      for (const Word& v : braid_orbit(w, m)) {
        CHECK(v.size() == w.size());
        CHECK(support(v) == letters);
      }
    }
  }
}

TEST_CASE("reduce_by_braid_moves examples") {
  CHECK(reduce_by_braid_moves(Word{0, 0}, a2()).is_identity());
  CHECK(reduce_by_braid_moves(Word{0, 1, 0, 1}, a2()).letters() == Word{1, 0});
  CHECK(reduce_by_braid_moves(Word{0, 1, 0, 1}, b2()).letters() == Word{0, 1, 0, 1});
  CHECK(reduce_by_braid_moves(Word{1, 0, 1}, a2()).letters() == Word{0, 1, 0});
}

TEST_CASE("reduce_by_braid_moves agrees with brute-force normal forms") {
  std::mt19937 rng(11);
  for (const auto& m : {a2(), b2(), dihedral(5), a3(), b3()}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Word w = random_word(rng, m.rank(), 10);
      CHECK(reduce_by_braid_moves(w, m).letters() == oracle_normal_form(m, w));
    }
  }
}

TEST_CASE("support and formatting") {
  CHECK(support(Word{}).empty());
  CHECK(support(Word{0, 1, 0}) == GeneratorSet{0, 1});
  CHECK(support(Word{2}) == GeneratorSet{2});
  CHECK(format_word(Word{}) == "");
  CHECK(format_word(Word{0, 1, 0, 1}) == "0 1 0 1");
}

TEST_CASE("shortlex ordering") {
  CHECK(shortlex_less(Word{1}, Word{0, 0}));
  CHECK(shortlex_less(Word{0, 1}, Word{1, 0}));
  CHECK_FALSE(shortlex_less(Word{0, 1}, Word{0, 1}));
  CHECK(CanonicalElement(Word{}) < CanonicalElement(Word{0}));
}
