#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclo/orbits.hpp"

using namespace cyclo;

namespace {

using Pairs = std::vector<IndexPair>;

// Orbit count of the S3 action on {(i,j,l) : i+j+l = 0 mod e} by Burnside.
std::uint64_t burnside_count(std::uint32_t e) {
  return (std::uint64_t{e} * e + 3 * e + 2 * std::gcd(3u, e)) / 6;
}

std::vector<SymmetryCase> cases_for(std::uint32_t e) {
  std::vector<SymmetryCase> out{make_case(RuleKind::Even, e)};
  if (e % 2 == 0) out.push_back(make_case(RuleKind::Odd, e));
  return out;
}

}  // namespace

TEST_CASE("case selection") {
  CHECK(select_case(3, 2, 7).kind == RuleKind::Even);
  CHECK(select_case(3, 1, 2).kind == RuleKind::Even);
  CHECK(select_case(4, 1, 5).kind == RuleKind::Odd);
  CHECK(select_case(5, 3, 2).kind == RuleKind::Even);  // q = 16
  CHECK(select_case(12, 1, 13).kind == RuleKind::Odd);
  CHECK(select_case(4, 6, 5).kind == RuleKind::Even);  // q = 25
  CHECK_THROWS_AS(select_case(3, 2, 5), std::invalid_argument);
  // odd e with odd k needs q even; q = 3*1 + 1 = 4 is fine, 3*3 + 1 = 10 is not a prime power
  CHECK_THROWS_AS(select_case(3, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_case(RuleKind::Odd, 3), std::invalid_argument);
}

TEST_CASE("cyclotomic orbits for e = 3") {
  const auto sc = make_case(RuleKind::Even, 3);
  CHECK(cyclotomic_orbit({1, 2}, sc).members == Pairs{{1, 2}, {2, 1}});
  CHECK(cyclotomic_orbit({0, 0}, sc).members == Pairs{{0, 0}});
  const auto orbit = cyclotomic_orbit({1, 1}, sc);
  CHECK(orbit.members == Pairs{{0, 2}, {1, 1}, {2, 0}});
  CHECK(orbit.representative == IndexPair{0, 2});
}

TEST_CASE("jacobi orbits for e = 3") {
  const auto sc = make_case(RuleKind::Even, 3);
  CHECK(jacobi_orbit({1, 1}, sc, 2).members == Pairs{{1, 1}});
  CHECK(jacobi_orbit({2, 2}, sc, 2).members == Pairs{{2, 2}});
  const auto orbit = jacobi_orbit({0, 1}, sc, 2);
  CHECK(orbit.members == Pairs{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  CHECK(std::all_of(orbit.signs.begin(), orbit.signs.end(), [](int s) { return s == 1; }));
}

TEST_CASE("signed jacobi orbit for e = 4, k odd") {
  const auto sc = make_case(RuleKind::Odd, 4);
  const auto orbit = jacobi_orbit({0, 1}, sc, 1);
  std::map<IndexPair, int> sign;
  for (std::size_t n = 0; n < orbit.size(); ++n) sign[orbit.members[n]] = orbit.signs[n];
  CHECK(orbit.size() == 6);
  CHECK(sign.at({0, 1}) == 1);
  CHECK(sign.at({1, 0}) == -1);
  CHECK(sign.at({3, 1}) == 1);
  CHECK(sign.at({1, 3}) == 1);
  CHECK(sign.at({3, 0}) == -1);
  CHECK(sign.at({0, 3}) == 1);
  // odd rules need odd k
  CHECK_THROWS_AS(jacobi_orbit({0, 1}, sc, 2), std::invalid_argument);
}

TEST_CASE("odd-rule signs are (-1)^{k (j' - j)} relative to the representative") {
  for (std::uint32_t e = 2; e <= 30; e += 2) {
    const auto sc = make_case(RuleKind::Odd, e);
    for (std::uint64_t k : {1u, 3u}) {
      for (const auto& c : enumerate_classes(sc, Family::Jacobi, k)) {
        for (std::size_t n = 0; n < c.size(); ++n) {
          const std::int64_t diff =
              static_cast<std::int64_t>(c.members[n].second) - c.representative.second;
          const int expected = (diff * static_cast<std::int64_t>(k)) % 2 == 0 ? 1 : -1;
          CHECK(c.signs[n] == expected);
        }
      }
    }
  }
}

TEST_CASE("enumerated classes for small orders") {
  const auto even3 = make_case(RuleKind::Even, 3);
  auto reps = [](const std::vector<OrbitClass>& classes) {
    Pairs out;
    for (const auto& c : classes) out.push_back(c.representative);
    return out;
  };
  CHECK(reps(enumerate_classes(even3, Family::Cyclotomic, 2)) ==
        Pairs{{0, 0}, {0, 1}, {0, 2}, {1, 2}});
  CHECK(reps(enumerate_classes(even3, Family::Jacobi, 2)) ==
        Pairs{{0, 0}, {0, 1}, {1, 1}, {2, 2}});

  const auto even2 = enumerate_classes(make_case(RuleKind::Even, 2), Family::Cyclotomic, 2);
  REQUIRE(even2.size() == 2);
  CHECK(even2[0].members == Pairs{{0, 0}});
  CHECK(even2[1].members == Pairs{{0, 1}, {1, 0}, {1, 1}});

  CHECK(enumerate_classes(make_case(RuleKind::Odd, 6), Family::Jacobi, 1).size() == 10);
}

TEST_CASE("closed-form class counts") {
  CHECK(class_count(3) == 4);
  CHECK(class_count(5) == 7);
  CHECK(class_count(7) == 12);
  CHECK(class_count(6) == 10);
  CHECK(class_count(12) == 31);
  CHECK(stated_class_count(3) == 5);
  CHECK(stated_class_count(5) == 7);
  CHECK(stated_class_count(12) == 32);
}

TEST_CASE("orbits partition all pairs and match the closed form") {
  for (std::uint32_t e = 2; e <= 30; ++e) {
    CAPTURE(e);
    CHECK(class_count(e) == burnside_count(e));
    for (const auto& sc : cases_for(e)) {
      for (Family family : {Family::Cyclotomic, Family::Jacobi}) {
        const std::uint64_t k = sc.kind == RuleKind::Odd ? 1 : 2;
        const auto classes = enumerate_classes(sc, family, k);
        CHECK(classes.size() == class_count(e));

        std::set<IndexPair> seen;
        std::size_t total = 0;
        for (const auto& c : classes) {
          CHECK(c.members.front() == c.representative);
          CHECK(std::is_sorted(c.members.begin(), c.members.end()));
          CHECK(6 % c.size() == 0);
          CHECK(c.signs.size() == c.size());
          for (const auto& m : c.members) seen.insert(m);
          total += c.size();
          // closure: the orbit of any member is the same orbit
          const auto again = family == Family::Cyclotomic
                                 ? cyclotomic_orbit(c.members.back(), sc)
                                 : jacobi_orbit(c.members.back(), sc, k);
          CHECK(again.members == c.members);
          CHECK(again.signs == c.signs);
        }
        CHECK(total == std::size_t{e} * e);
        CHECK(seen.size() == std::size_t{e} * e);
      }
    }
  }
}

TEST_CASE("cyclotomic orbit census") {
  // one singleton, e - 1 classes of three, one class of two when 3 | e,
  // and classes of six for the rest
  for (std::uint32_t e = 2; e <= 30; ++e) {
    for (const auto& sc : cases_for(e)) {
      std::map<std::size_t, std::size_t> sizes;
      for (const auto& c : enumerate_classes(sc, Family::Cyclotomic, 1)) ++sizes[c.size()];
      CAPTURE(e);
      CHECK(sizes[1] == 1);
      CHECK(sizes[2] == (e % 3 == 0 ? 1u : 0u));
      CHECK(sizes[3] == e - 1);
      CHECK(sizes[1] + 2 * sizes[2] + 3 * sizes[3] + 6 * sizes[6] == std::size_t{e} * e);
    }
  }
}

TEST_CASE("singleton cyclotomic class is (0,0) or (0,e/2)") {
  CHECK(enumerate_classes(make_case(RuleKind::Even, 8), Family::Cyclotomic, 2)[0].size() == 1);
  for (const auto& c : enumerate_classes(make_case(RuleKind::Odd, 8), Family::Cyclotomic, 1)) {
    if (c.size() == 1) CHECK(c.representative == IndexPair{0, 4});
  }
}
