#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclo/cycint.hpp"
#include "cyclo/field.hpp"
#include "cyclo/orbits.hpp"

namespace cyclo {

struct JacobiMatrix;

/// Raised when a derived quantity violates an identity that holds for any
/// consistent input (e.g. a Jacobi matrix that does not come from a field).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixes the character chi_e by chi_e(generator) = zeta_e, with q = ek + 1.
class CharacterSetup {
 public:
  /// Throws std::invalid_argument if e < 2, e does not divide q - 1, or
  /// the supplied element is not a generator.
  static CharacterSetup make(Field field, std::uint32_t e,
                             std::optional<FieldElement> generator = std::nullopt);

  const Field& field() const { return field_; }
  std::uint32_t order() const { return e_; }
  std::uint64_t cofactor() const { return k_; }
  std::uint32_t q() const { return field_.q(); }
  FieldElement generator() const { return index_.generator(); }
  const IndexTable& index() const { return index_; }
  const RingPtr& ring() const { return ring_; }
  SymmetryCase symmetry() const { return case_; }

  /// ind(v) mod e for nonzero v.
  std::uint32_t residue(FieldElement v) const { return index_.index(v) % e_; }

 private:
  CharacterSetup(Field field, std::uint32_t e, IndexTable index);

  Field field_;
  std::uint32_t e_;
  std::uint64_t k_;
  IndexTable index_;
  RingPtr ring_;
  SymmetryCase case_;
};

struct CycNumMatrix {
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  FieldElement generator;
  std::vector<std::uint64_t> entries;  // row-major, entries[a * e + b] = (a, b)_e

  std::uint64_t at(std::uint32_t a, std::uint32_t b) const { return entries[a * e + b]; }
  std::uint64_t& at(std::uint32_t a, std::uint32_t b) { return entries[a * e + b]; }
  std::uint64_t total() const;

  bool operator==(const CycNumMatrix&) const = default;
};

/// How many entries were obtained by a direct field pass versus by orbit
/// expansion.
struct WorkStats {
  std::size_t direct_entries = 0;
  std::size_t derived_entries = 0;
};

/// Counts v outside {0, -1} by (ind v, ind(v+1)) mod e in one pass.
CycNumMatrix cyclotomic_direct(const CharacterSetup& s);

/// Counts only class representatives, then fills each orbit.
CycNumMatrix cyclotomic_via_reps(const CharacterSetup& s, WorkStats* stats = nullptr);

/// sum_{i,j} zeta^{-(ai+bj)} J(i,j), before division by e^2.
CycInt inversion_sum(const JacobiMatrix& jacobi, std::uint32_t a, std::uint32_t b);

/// Recovers (a,b)_e = inversion_sum / e^2. Throws InconsistencyError if a
/// sum is not a rational integer, not divisible by e^2, or negative.
CycNumMatrix cyclotomic_from_jacobi(const JacobiMatrix& jacobi, const CharacterSetup& s);

}  // namespace cyclo
