#include <doctest.h>

#include <random>

#include "coxeter/error.hpp"
#include "coxeter/finite_type.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/word_problem.hpp"
#include "helpers.hpp"
#include "systems.hpp"

using namespace coxeter;
using namespace coxeter::testing;

TEST_CASE("reduce examples") {
  CHECK(reduce(Word{0, 0}, a2()).is_identity());

  // Expected values were read off the brute-force enumeration first.
  CHECK(oracle_normal_form(a2(), Word{0, 1, 0, 1}) == Word{1, 0});
  CHECK(reduce(Word{0, 1, 0, 1}, a2()).letters() == Word{1, 0});

  CHECK(oracle_normal_form(b2(), Word{0, 1, 0, 1}) == Word{0, 1, 0, 1});
  const auto b2_top = reduce(Word{0, 1, 0, 1}, b2());
  CHECK(b2_top.letters() == Word{0, 1, 0, 1});
  CHECK(b2_top.length() == 4);
}

TEST_CASE("reduce rejects bad letters") {
  try {
    reduce(Word{0, 3}, a2());
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("multiply examples") {
  const CanonicalElement s(Word{0});
  CHECK(multiply(s, s, a2()).is_identity());
  CHECK(multiply(s, s, infinite_dihedral()).is_identity());

  CHECK(oracle_normal_form(a2(), Word{0, 1, 0, 1}) == Word{1, 0});
  const auto p = multiply(CanonicalElement(Word{0, 1, 0}), CanonicalElement(Word{1}), a2());
  CHECK(p.letters() == Word{1, 0});
  CHECK(p.length() == 2);  // l(w0) - l(t)

  const CanonicalElement ts(Word{1, 0});
  CHECK(multiply(CanonicalElement{}, ts, a2()) == ts);
  CHECK(multiply(ts, CanonicalElement{}, a2()) == ts);
}

TEST_CASE("invert examples") {
  CHECK(invert(CanonicalElement{}, a2()).is_identity());
  CHECK(oracle_normal_form(a2(), Word{1, 0}) == Word{1, 0});
  CHECK(invert(CanonicalElement(Word{0, 1}), a2()).letters() == Word{1, 0});
  CHECK(invert(CanonicalElement(Word{0, 1, 0}), a2()).letters() == Word{0, 1, 0});

  WordProblem wp(a2());
  const CanonicalElement st(Word{0, 1});
  CHECK(wp.multiply(st, wp.invert(st)).is_identity());
}

TEST_CASE("right_descents examples") {
  CHECK(right_descents(CanonicalElement{}, a2()).empty());
  CHECK(right_descents(CanonicalElement(Word{0, 1, 0}), a2()) == GeneratorSet{0, 1});
  CHECK(right_descents(CanonicalElement(Word{0, 1}), a2()) == GeneratorSet{1});
}

TEST_CASE("descents match brute-force lengths") {
  for (const auto& m : {a3(), b3(), h3(), dihedral(6)}) {
    const auto all = oracle::enumerate_group(m);
    REQUIRE(all.complete);
    const oracle::GeometricRepresentation rep(m);
    WordProblem wp(m);
    for (const auto& e : all.elements) {
      GeneratorSet expected;
      for (Generator t = 0; t < m.rank(); ++t) {
        const Word et = concat(e.letters(), Word{t});
        // e*t is shorter iff it equals an element listed with smaller length.
        const Word nf = oracle_normal_form(m, et);
        if (nf.size() < e.length()) expected.insert(t);
      }
      CHECK(wp.right_descents(e) == expected);
    }
  }
}

TEST_CASE("reduce is idempotent and preserves parity") {
  std::mt19937 rng(3);
  const std::vector<CoxeterMatrix> systems{rank1(), a2(), b2(), a3(), b3(), h3(), triangle(),
                                           infinite_dihedral(), matrix_from_upper(4, {3, 0, 2, 4, 5, 3})};
  for (const auto& m : systems) {
    WordProblem wp(m);
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = random_word(rng, m.rank(), 12);
      const auto r = wp.reduce(w);
      CHECK(r.length() <= w.size());
      CHECK((w.size() - r.length()) % 2 == 0);
      CHECK(wp.reduce(r.letters()) == r);
    }
  }
}

TEST_CASE("engine and braid-move route agree") {
  std::mt19937 rng(5);
  const std::vector<CoxeterMatrix> systems{a2(), b2(), dihedral(5), a3(), b3(), h3(),
                                           triangle(), infinite_dihedral(),
                                           matrix_from_upper(3, {testing::kInf, 3, 4})};
  for (const auto& m : systems) {
    WordProblem wp(m);
    for (int trial = 0; trial < 60; ++trial) {
      const Word w = random_word(rng, m.rank(), 11);
      CHECK(wp.reduce(w) == reduce_by_braid_moves(w, m));
    }
  }
}

TEST_CASE("reduce equality matches the geometric representation") {
  std::mt19937 rng(13);
  for (const auto& m : {a3(), b3(), h3(), matrix_from_upper(3, {2, 5, 2})}) {
    WordProblem wp(m);
    const oracle::GeometricRepresentation rep(m);
    for (int trial = 0; trial < 300; ++trial) {
      const Word u = random_word(rng, m.rank(), 12);
      // Every third pair is equal by construction.
      const Word v = trial % 3 == 0 ? concat(reduce_by_braid_moves(u, m).letters(), Word{1, 1})
                                    : random_word(rng, m.rank(), 12);
      CHECK((wp.reduce(u) == wp.reduce(v)) == rep.same_element(u, v));
    }
  }
}

TEST_CASE("group laws hold exhaustively in small groups") {
  for (const auto& m : {a2(), b2(), dihedral(6), a3(), matrix_from_upper(3, {3, 2, 2}),
                        matrix_from_upper(3, {4, 2, 2})}) {
    const auto all = oracle::enumerate_group(m);
    REQUIRE(all.complete);
    REQUIRE(all.elements.size() <= 48);
    WordProblem wp(m);
    const CanonicalElement e;
    for (const auto& a : all.elements) {
      CHECK(wp.multiply(a, e) == a);
      CHECK(wp.multiply(e, a) == a);
      CHECK(wp.multiply(a, wp.invert(a)).is_identity());
      CHECK(wp.invert(wp.invert(a)) == a);
      for (const auto& b : all.elements) {
        const auto ab = wp.multiply(a, b);
        for (const auto& c : all.elements) {
          REQUIRE(wp.multiply(ab, c) == wp.multiply(a, wp.multiply(b, c)));
        }
      }
    }
  }
}

TEST_CASE("longest element satisfies l(w0 w) = l(w0) - l(w)") {
  for (const auto& m : {a2(), b2(), a3(), b3(), h3(), d4()}) {
    const auto all = oracle::enumerate_group(m);
    REQUIRE(all.complete);
    WordProblem wp(m);
    const auto w0 = longest_element(wp, m.generators());
    CHECK(wp.multiply(w0, w0).is_identity());
    for (const auto& w : all.elements) {
      CHECK(wp.multiply(w0, w).length() == w0.length() - w.length());
    }
  }
}

TEST_CASE("node cap is enforced") {
  WordProblem wp(h3(), 20);
  try {
    wp.reduce(Word{0, 1, 0, 1, 0, 2, 1, 0, 1, 0, 2, 1, 0, 1, 2});
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}
