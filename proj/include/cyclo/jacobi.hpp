#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/cyclotomic.hpp"

namespace cyclo {

struct JacobiMatrix {
  RingPtr ring;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  FieldElement generator;
  std::vector<CycInt> entries;  // row-major, entries[i * e + j] = J_e(i, j)

  const CycInt& at(std::uint32_t i, std::uint32_t j) const { return entries[i * e + j]; }
  CycInt& at(std::uint32_t i, std::uint32_t j) { return entries[i * e + j]; }

  friend bool operator==(const JacobiMatrix& x, const JacobiMatrix& y) {
    return x.e == y.e && x.q == y.q && x.generator == y.generator && x.entries == y.entries;
  }
};

/// sum over v in F_q of chi^i(v) chi^j(v+1), with chi^n(0) = 0 for every n.
CycInt jacobi_direct(const CharacterSetup& s, std::uint32_t i, std::uint32_t j);

/// All e^2 sums from a single pass over the field.
JacobiMatrix jacobi_all_direct(const CharacterSetup& s);

/// J(i,j) = sum_{a,b} (a,b)_e zeta^{ai+bj}.
JacobiMatrix jacobi_from_cyclotomic(const CycNumMatrix& m, const CharacterSetup& s);

/// Direct sums at class representatives only, expanded with orbit signs.
JacobiMatrix jacobi_via_reps(const CharacterSetup& s, WorkStats* stats = nullptr);

}  // namespace cyclo
