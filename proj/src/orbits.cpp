#include "cyclo/orbits.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace cyclo {

namespace {

struct Image {
  IndexPair pair;
  int sign;
};

using Generators = std::array<Image, 5>;

std::uint32_t mod_e(std::int64_t x, std::uint32_t e) {
  const std::int64_t m = x % static_cast<std::int64_t>(e);
  return static_cast<std::uint32_t>(m < 0 ? m + e : m);
}

Generators cyclotomic_images(IndexPair x, const SymmetryCase& sc) {
  const std::int64_t a = x.first, b = x.second;
  const std::uint32_t e = sc.e;
  auto pair = [e](std::int64_t u, std::int64_t v) { return IndexPair{mod_e(u, e), mod_e(v, e)}; };
  if (sc.kind == RuleKind::Even) {
    return {{{pair(b, a), 1},
             {pair(a - b, -b), 1},
             {pair(b - a, -a), 1},
             {pair(-a, b - a), 1},
             {pair(-b, a - b), 1}}};
  }
  const std::int64_t h = e / 2;
  return {{{pair(b + h, a + h), 1},
           {pair(h + a - b, -b), 1},
           {pair(h + b - a, h - a), 1},
           {pair(-a, b - a), 1},
           {pair(h - b, a - b), 1}}};
}

Generators jacobi_images(IndexPair x, const SymmetryCase& sc, std::uint64_t k) {
  const std::int64_t i = x.first, j = x.second;
  const std::uint32_t e = sc.e;
  auto pair = [e](std::int64_t u, std::int64_t v) { return IndexPair{mod_e(u, e), mod_e(v, e)}; };
  // chi(-1) = (-1)^k under odd rules and 1 otherwise.
  auto chi_minus_one_pow = [&](std::int64_t n) {
    return (sc.kind == RuleKind::Odd && (n * static_cast<std::int64_t>(k % 2)) % 2 != 0) ? -1 : 1;
  };
  const int swap_sign = chi_minus_one_pow(i + j);
  const int i_sign = chi_minus_one_pow(i);
  return {{{pair(j, i), swap_sign},
           {pair(-i - j, i), swap_sign},
           {pair(i, -i - j), i_sign},
           {pair(j, -i - j), i_sign},
           {pair(-i - j, j), 1}}};
}

template <typename ImageFn>
OrbitClass close_orbit(IndexPair start, std::uint32_t e, ImageFn images) {
  if (start.first >= e || start.second >= e) {
    throw std::invalid_argument("index pair out of range for order " + std::to_string(e));
  }
  std::map<IndexPair, int> seen{{start, 1}};
  std::vector<IndexPair> frontier{start};
  while (!frontier.empty()) {
    const IndexPair x = frontier.back();
    frontier.pop_back();
    const int sx = seen.at(x);
    for (const Image& img : images(x)) {
      const int s = sx * img.sign;
      auto [it, inserted] = seen.emplace(img.pair, s);
      if (inserted) {
        frontier.push_back(img.pair);
      } else if (it->second != s) {
        throw std::logic_error("inconsistent signs in orbit closure");
      }
    }
  }
  OrbitClass orbit;
  orbit.representative = seen.begin()->first;
  const int rep_sign = seen.begin()->second;
  for (const auto& [member, sign] : seen) {
    orbit.members.push_back(member);
    orbit.signs.push_back(sign * rep_sign);
  }
  return orbit;
}

}  // namespace

std::string_view to_string(RuleKind kind) { return kind == RuleKind::Even ? "even" : "odd"; }

std::string_view to_string(Family family) {
  return family == Family::Cyclotomic ? "cyclotomic" : "jacobi";
}

SymmetryCase make_case(RuleKind kind, std::uint32_t e) {
  if (e == 0) throw std::invalid_argument("order must be positive");
  if (kind == RuleKind::Odd && e % 2 != 0) {
    throw std::invalid_argument("odd rules need an even order; e = " + std::to_string(e));
  }
  return {kind, e};
}

SymmetryCase select_case(std::uint32_t e, std::uint64_t k, std::uint32_t p) {
  std::uint64_t q = static_cast<std::uint64_t>(e) * k + 1;
  std::uint64_t rest = q;
  while (p > 1 && rest % p == 0) rest /= p;
  if (p < 2 || rest != 1 || q == 1) {
    throw std::invalid_argument("ek + 1 = " + std::to_string(q) + " is not a power of " +
                                std::to_string(p));
  }
  const RuleKind kind = (k % 2 == 0 || p == 2) ? RuleKind::Even : RuleKind::Odd;
  if (kind == RuleKind::Odd && e % 2 != 0) {
    throw std::invalid_argument("inconsistent parameters: odd k and odd e with q odd");
  }
  return {kind, e};
}

OrbitClass cyclotomic_orbit(IndexPair pair, const SymmetryCase& sc) {
  return close_orbit(pair, sc.e, [&](IndexPair x) { return cyclotomic_images(x, sc); });
}

OrbitClass jacobi_orbit(IndexPair pair, const SymmetryCase& sc, std::uint64_t k) {
  if (sc.kind == RuleKind::Odd && k % 2 == 0) {
    throw std::invalid_argument("odd rules require an odd cofactor k");
  }
  return close_orbit(pair, sc.e, [&](IndexPair x) { return jacobi_images(x, sc, k); });
}

std::vector<OrbitClass> enumerate_classes(const SymmetryCase& sc, Family family,
                                          std::uint64_t k) {
  make_case(sc.kind, sc.e);
  const std::uint32_t e = sc.e;
  std::vector<bool> covered(static_cast<std::size_t>(e) * e, false);
  std::vector<OrbitClass> classes;
  for (std::uint32_t a = 0; a < e; ++a) {
    for (std::uint32_t b = 0; b < e; ++b) {
      if (covered[a * e + b]) continue;
      OrbitClass orbit = family == Family::Cyclotomic ? cyclotomic_orbit({a, b}, sc)
                                                      : jacobi_orbit({a, b}, sc, k);
      for (const IndexPair& m : orbit.members) covered[m.first * e + m.second] = true;
      classes.push_back(std::move(orbit));
    }
  }
  // Row-major scanning meets each orbit first at its least member.
  return classes;
}

std::uint64_t class_count(std::uint32_t e) {
  const std::uint64_t n = static_cast<std::uint64_t>(e - 1) * (e - 2);
  return e + (n + 5) / 6;
}

std::uint64_t stated_class_count(std::uint32_t e) {
  const std::uint64_t n = static_cast<std::uint64_t>(e - 1) * (e - 2);
  return n % 6 == 0 ? e + n / 6 : e + (n + 5) / 6 + 1;
}

}  // namespace cyclo
