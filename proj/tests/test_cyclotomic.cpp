#include <doctest.h>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/jacobi.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

using Rows = std::vector<std::uint64_t>;

CharacterSetup setup(std::uint32_t p, std::uint32_t r, std::uint32_t e) {
  return CharacterSetup::make(Field::build(p, r), e);
}

}  // namespace

TEST_CASE("character setup") {
  const auto s = CharacterSetup::make(Field::build(7, 1), 3, FieldElement{3});
  CHECK(s.cofactor() == 2);
  CHECK(s.generator() == FieldElement{3});
  CHECK(s.symmetry().kind == RuleKind::Even);

  const auto s5 = setup(5, 1, 2);
  CHECK(s5.cofactor() == 2);
  CHECK(s5.generator() == FieldElement{2});

  CHECK_THROWS_AS(setup(7, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(setup(7, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(CharacterSetup::make(Field::build(7, 1), 3, FieldElement{2}),
                  std::invalid_argument);
}

TEST_CASE("cyclotomic numbers for q = 7, e = 3") {
  const auto s = CharacterSetup::make(Field::build(7, 1), 3, FieldElement{3});
  const CycNumMatrix m = cyclotomic_direct(s);
  CHECK(m.entries == Rows{0, 0, 1, 0, 1, 1, 1, 1, 0});
  CHECK(m.total() == 5);
}

TEST_CASE("frozen small matrices") {
  CHECK(cyclotomic_direct(setup(5, 1, 2)).entries == Rows{0, 1, 1, 1});
  CHECK(cyclotomic_direct(setup(13, 1, 4)).entries ==
        Rows{0, 1, 2, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1});
  CHECK(cyclotomic_direct(setup(2, 2, 3)).entries == Rows{0, 0, 0, 0, 0, 1, 0, 1, 0});
  CHECK(cyclotomic_direct(setup(2, 4, 5)).entries ==
        Rows{2, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0});
}

TEST_CASE("direct counting matches the definition with naive logs") {
  for (auto [p, r] : oracle::prime_powers(128)) {
    const Field f = Field::build(p, r);
    const auto logs = oracle::naive_logs(f, f.find_generator());
    for (std::uint32_t e = 2; e <= 12; ++e) {
      if ((f.q() - 1) % e != 0) continue;
      CAPTURE(f.q());
      CAPTURE(e);
      const auto s = CharacterSetup::make(f, e);
      CHECK(cyclotomic_direct(s).entries == oracle::cyclotomic_brute(f, e, logs));
    }
  }
}

TEST_CASE("representatives expand to the full matrix") {
  WorkStats stats;
  const auto s7 = CharacterSetup::make(Field::build(7, 1), 3, FieldElement{3});
  CHECK(cyclotomic_via_reps(s7, &stats) == cyclotomic_direct(s7));
  CHECK(stats.direct_entries == 4);
  CHECK(stats.derived_entries == 5);

  for (auto [p, r, e] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {13, 1, 4}, {2, 2, 3}, {2, 4, 5}, {2, 4, 15}, {3, 2, 4}, {3, 2, 8}, {5, 2, 12},
           {37, 1, 12}, {61, 1, 6}, {2, 6, 9}, {2, 6, 7}}) {
    CAPTURE(p);
    CAPTURE(r);
    CAPTURE(e);
    const auto s = setup(p, r, e);
    CHECK(cyclotomic_via_reps(s, &stats) == cyclotomic_direct(s));
    CHECK(stats.direct_entries == class_count(e));
  }
}

TEST_CASE("cyclotomic numbers are constant on orbits") {
  for (auto [p, r] : oracle::prime_powers(400)) {
    const Field f = Field::build(p, r);
    for (std::uint32_t e = 2; e <= 12; ++e) {
      if ((f.q() - 1) % e != 0) continue;
      const auto s = CharacterSetup::make(f, e);
      const auto m = cyclotomic_direct(s);
      CHECK(m.total() == f.q() - 2);
      for (const auto& c : enumerate_classes(s.symmetry(), Family::Cyclotomic, s.cofactor())) {
        for (const auto& x : c.members) {
          CHECK(m.at(x.first, x.second) == m.at(c.representative.first, c.representative.second));
        }
      }
    }
  }
}

TEST_CASE("inversion from Jacobi sums") {
  const auto s7 = CharacterSetup::make(Field::build(7, 1), 3, FieldElement{3});
  const auto jac = jacobi_all_direct(s7);
  CHECK(inversion_sum(jac, 0, 2).as_integer() == 9);
  CHECK(cyclotomic_from_jacobi(jac, s7).entries == Rows{0, 0, 1, 0, 1, 1, 1, 1, 0});

  const auto s5 = setup(5, 1, 2);
  CHECK(cyclotomic_from_jacobi(jacobi_all_direct(s5), s5) == cyclotomic_direct(s5));
}

TEST_CASE("inconsistent Jacobi input is rejected") {
  const auto s7 = CharacterSetup::make(Field::build(7, 1), 3, FieldElement{3});
  auto jac = jacobi_all_direct(s7);
  jac.at(0, 1) += CycInt(s7.ring(), 1);
  CHECK_THROWS_AS(cyclotomic_from_jacobi(jac, s7), InconsistencyError);

  auto twisted = jacobi_all_direct(s7);
  twisted.at(1, 1) = twisted.at(1, 1).times_zeta_power(1);
  CHECK_THROWS_AS(cyclotomic_from_jacobi(twisted, s7), InconsistencyError);

  // J(0,0) = -q - 2 keeps divisibility by e^2 = 9 but forces negative counts
  auto negative = jacobi_all_direct(s7);
  negative.at(0, 0) = CycInt(s7.ring(), -4);
  CHECK_THROWS_AS(cyclotomic_from_jacobi(negative, s7), InconsistencyError);

  const auto s13 = setup(13, 1, 3);
  CHECK_THROWS_AS(cyclotomic_from_jacobi(jacobi_all_direct(s13), s7), std::invalid_argument);
}

TEST_CASE("round trip through Jacobi sums") {
  for (auto [p, r] : oracle::prime_powers(300)) {
    const Field f = Field::build(p, r);
    for (std::uint32_t e = 2; e <= 12; ++e) {
      if ((f.q() - 1) % e != 0) continue;
      const auto s = CharacterSetup::make(f, e);
      const auto m = cyclotomic_direct(s);
      CHECK(cyclotomic_from_jacobi(jacobi_from_cyclotomic(m, s), s) == m);
    }
  }
}

TEST_CASE("non-default generator changes the matrix consistently") {
  // 5 is the other generator of F_7^*; it induces chi^{-1}, swapping
  // residues a -> -a.
  const auto s3 = CharacterSetup::make(Field::build(7, 1), 3, FieldElement{3});
  const auto s5 = CharacterSetup::make(Field::build(7, 1), 3, FieldElement{5});
  const auto m3 = cyclotomic_direct(s3);
  const auto m5 = cyclotomic_direct(s5);
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) CHECK(m5.at(a, b) == m3.at((3 - a) % 3, (3 - b) % 3));
  }
  CHECK(cyclotomic_via_reps(s5) == m5);
}
