#pragma once

// Symmetry classes of index pairs (a, b) mod e. Two regimes apply:
//   Even rules: k even or q = 2^r. Cyclotomic numbers are invariant under
//     (b,a), (a-b,-b), (b-a,-a), (-a,b-a), (-b,a-b); Jacobi sums under
//     (j,i), (-i-j,i), (i,-i-j), (j,-i-j), (-i-j,j).
//   Odd rules: k odd and q odd, which forces e even. Cyclotomic maps are
//     shifted by h = e/2; Jacobi sums pick up signs, and
//     (-1)^{jk} J(i,j) is the orbit invariant.

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace cyclo {

enum class RuleKind { Even, Odd };
enum class Family { Cyclotomic, Jacobi };

struct SymmetryCase {
  RuleKind kind = RuleKind::Even;
  std::uint32_t e = 0;

  bool operator==(const SymmetryCase&) const = default;
};

struct IndexPair {
  std::uint32_t first = 0;
  std::uint32_t second = 0;

  auto operator<=>(const IndexPair&) const = default;
};

struct OrbitClass {
  IndexPair representative;
  std::vector<IndexPair> members;  // sorted; members.front() == representative
  std::vector<int> signs;          // value(member) = sign * value(representative)

  std::size_t size() const { return members.size(); }
};

std::string_view to_string(RuleKind kind);
std::string_view to_string(Family family);

/// Regime for q = ek + 1 = p^r. Throws std::invalid_argument if ek + 1 is
/// not a power of p, or if the odd regime would be selected with odd e.
SymmetryCase select_case(std::uint32_t e, std::uint64_t k, std::uint32_t p);

/// Checks that the case is usable with order e: e >= 1, and e even under
/// odd rules.
SymmetryCase make_case(RuleKind kind, std::uint32_t e);

OrbitClass cyclotomic_orbit(IndexPair pair, const SymmetryCase& sc);

/// k matters only through its parity; odd rules require odd k.
OrbitClass jacobi_orbit(IndexPair pair, const SymmetryCase& sc, std::uint64_t k);

/// Partition of all e^2 pairs, ordered by representative.
std::vector<OrbitClass> enumerate_classes(const SymmetryCase& sc, Family family,
                                          std::uint64_t k);

/// Number of classes: e + (e-1)(e-2)/6 when 3 does not divide e, else
/// e + ceil((e-1)(e-2)/6).
std::uint64_t class_count(std::uint32_t e);

/// Variant of the closed form with an extra +1 in the 3 | e branch. It
/// exceeds the enumerated count by one there; kept for reporting.
std::uint64_t stated_class_count(std::uint32_t e);

}  // namespace cyclo
