#include <doctest.h>

#include "coxeter/error.hpp"
#include "coxeter/oracle.hpp"
#include "systems.hpp"

using namespace coxeter;
using namespace coxeter::testing;

namespace {

std::vector<Word> words(const std::vector<CanonicalElement>& elements) {
  std::vector<Word> out;
  for (const auto& e : elements) out.push_back(e.letters());
  return out;
}

}  // namespace

TEST_CASE("enumerate_group examples") {
  auto r = oracle::enumerate_group(rank1(), 10);
  CHECK(r.complete);
  CHECK(words(r.elements) == std::vector<Word>{{}, {0}});

  r = oracle::enumerate_group(b2(), 100);
  CHECK(r.complete);
  CHECK(words(r.elements) == std::vector<Word>{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1},
                                               {0, 1, 0, 1}});

  r = oracle::enumerate_group(infinite_dihedral(), 50);
  CHECK_FALSE(r.complete);
  CHECK(r.elements.size() == 50);

  CHECK(oracle::enumerate_group(b2(), 8).complete);
  CHECK_FALSE(oracle::enumerate_group(b2(), 7).complete);
  try {
    oracle::enumerate_group(infinite_dihedral(), 50, true);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("enumeration sizes match the known orders") {
  CHECK(oracle::enumerate_group(h3()).elements.size() == 120);
  CHECK(oracle::enumerate_group(d4()).elements.size() == 192);
  CHECK(oracle::enumerate_group(b4()).elements.size() == 384);
  CHECK(oracle::enumerate_group(f4()).elements.size() == 1152);
  CHECK(oracle::enumerate_group(direct_sum({b2(), a2()})).elements.size() == 48);
}

TEST_CASE("ball examples") {
  CHECK(words(oracle::ball(h3(), 0)) == std::vector<Word>{{}});
  CHECK(words(oracle::ball(a2(), 1)) == std::vector<Word>{{}, {0}, {1}});
  CHECK(words(oracle::ball(infinite_dihedral(), 3)) ==
        std::vector<Word>{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1}});
  // Radius at least l(w0) gives the whole finite group.
  CHECK(oracle::ball(b3(), 9).size() == 48);
}

TEST_CASE("brute_center examples") {
  CHECK(words(oracle::brute_center(b2(), oracle::enumerate_group(b2()).elements)) ==
        std::vector<Word>{{}, {0, 1, 0, 1}});
  CHECK(words(oracle::brute_center(a2(), oracle::enumerate_group(a2()).elements)) ==
        std::vector<Word>{{}});
  CHECK(words(oracle::brute_center(triangle(), oracle::ball(triangle(), 6))) ==
        std::vector<Word>{{}});
}

TEST_CASE("gram eigenvalues") {
  auto ev = oracle::gram_eigenvalues(a2(), GeneratorSet{0, 1});
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(0.5));
  CHECK(ev[1] == doctest::Approx(1.5));
  CHECK(oracle::gram_positive_definite(a2(), GeneratorSet{0, 1}));

  ev = oracle::gram_eigenvalues(triangle(), GeneratorSet{0, 1, 2});
  REQUIRE(ev.size() == 3);
  CHECK(std::abs(ev[0]) < 1e-12);
  CHECK(ev[1] == doctest::Approx(1.5));
  CHECK(ev[2] == doctest::Approx(1.5));
  CHECK_FALSE(oracle::gram_positive_definite(triangle(), GeneratorSet{0, 1, 2}));

  ev = oracle::gram_eigenvalues(infinite_dihedral(), GeneratorSet{0, 1});
  CHECK(std::abs(ev[0]) < 1e-12);
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK_FALSE(oracle::gram_positive_definite(infinite_dihedral(), GeneratorSet{0, 1}));

  CHECK(oracle::gram_positive_definite(a2(), GeneratorSet{}));
}

TEST_CASE("geometric representation is an involutive action") {
  const oracle::GeometricRepresentation rep(h3());
  for (Generator s = 0; s < 3; ++s) {
    CHECK(rep.same_element(Word{s, s}, Word{}));
  }
  CHECK(rep.same_element(Word{0, 1, 0, 1, 0}, Word{1, 0, 1, 0, 1}));
  CHECK_FALSE(rep.same_element(Word{0, 1}, Word{1, 0}));
}
