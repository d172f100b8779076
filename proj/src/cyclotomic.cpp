#include "cyclo/cyclotomic.hpp"

#include <numeric>
#include <string>

#include "cyclo/jacobi.hpp"

namespace cyclo {

CharacterSetup::CharacterSetup(Field field, std::uint32_t e, IndexTable index)
    : field_(std::move(field)),
      e_(e),
      k_((field_.q() - 1) / e),
      index_(std::move(index)),
      ring_(CyclotomicRing::make(e)),
      case_(select_case(e, k_, field_.p())) {}

CharacterSetup CharacterSetup::make(Field field, std::uint32_t e,
                                    std::optional<FieldElement> generator) {
  if (e < 2) throw std::invalid_argument("order e must be at least 2");
  if ((field.q() - 1) % e != 0) {
    throw std::invalid_argument("e = " + std::to_string(e) + " does not divide q - 1 = " +
                                std::to_string(field.q() - 1));
  }
  const FieldElement g = generator ? *generator : field.find_generator();
  IndexTable index = IndexTable::build(field, g);
  return CharacterSetup(std::move(field), e, std::move(index));
}

std::uint64_t CycNumMatrix::total() const {
  return std::accumulate(entries.begin(), entries.end(), std::uint64_t{0});
}

namespace {

CycNumMatrix empty_matrix(const CharacterSetup& s) {
  const std::uint32_t e = s.order();
  return {e, s.q(), s.generator(), std::vector<std::uint64_t>(std::size_t{e} * e, 0)};
}

// Calls f(ind(v) mod e, ind(v+1) mod e) for every v outside {0, -1}.
template <typename F>
void for_each_residue_pair(const CharacterSetup& s, F&& f) {
  const Field& field = s.field();
  for (std::uint32_t code = 1; code < field.q(); ++code) {
    const FieldElement v{code};
    const FieldElement w = field.plus_one(v);
    if (w.code == 0) continue;
    f(s.residue(v), s.residue(w));
  }
}

}  // namespace

CycNumMatrix cyclotomic_direct(const CharacterSetup& s) {
  CycNumMatrix m = empty_matrix(s);
  for_each_residue_pair(s, [&](std::uint32_t a, std::uint32_t b) { ++m.at(a, b); });
  return m;
}

CycNumMatrix cyclotomic_via_reps(const CharacterSetup& s, WorkStats* stats) {
  const std::uint32_t e = s.order();
  const auto classes = enumerate_classes(s.symmetry(), Family::Cyclotomic, s.cofactor());

  std::vector<bool> is_rep(std::size_t{e} * e, false);
  for (const auto& c : classes) is_rep[c.representative.first * e + c.representative.second] = true;

  CycNumMatrix m = empty_matrix(s);
  for_each_residue_pair(s, [&](std::uint32_t a, std::uint32_t b) {
    if (is_rep[a * e + b]) ++m.at(a, b);
  });
  for (const auto& c : classes) {
    const std::uint64_t value = m.at(c.representative.first, c.representative.second);
    for (const IndexPair& member : c.members) m.at(member.first, member.second) = value;
  }
  if (stats) {
    stats->direct_entries = classes.size();
    stats->derived_entries = std::size_t{e} * e - classes.size();
  }
  return m;
}

CycInt inversion_sum(const JacobiMatrix& jacobi, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t e = jacobi.e;
  std::vector<Integer> residues(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) {
      const std::int64_t exponent = -static_cast<std::int64_t>((a * i + b * j) % e);
      jacobi.at(i, j).accumulate_shifted(residues, exponent);
    }
  }
  return CycInt::from_residue_counts(jacobi.ring, residues);
}

CycNumMatrix cyclotomic_from_jacobi(const JacobiMatrix& jacobi, const CharacterSetup& s) {
  const std::uint32_t e = s.order();
  if (jacobi.e != e || jacobi.entries.size() != std::size_t{e} * e) {
    throw std::invalid_argument("Jacobi matrix order does not match the setup");
  }
  if (jacobi.q != s.q() || jacobi.generator != s.generator()) {
    throw std::invalid_argument("Jacobi matrix belongs to a different field or generator");
  }
  const Integer e_squared = Integer(e) * e;
  CycNumMatrix m = empty_matrix(s);
  for (std::uint32_t a = 0; a < e; ++a) {
    for (std::uint32_t b = 0; b < e; ++b) {
      const CycInt sum = inversion_sum(jacobi, a, b);
      const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (!sum.is_integer()) {
        throw InconsistencyError("inversion sum at " + where + " is not a rational integer: " +
                                 sum.to_string());
      }
      const Integer value = sum.coeffs()[0];
      if (value % e_squared != 0) {
        throw InconsistencyError("inversion sum " + value.get_str() + " at " + where +
                                 " is not divisible by e^2 = " + e_squared.get_str());
      }
      if (value < 0) {
        throw InconsistencyError("negative cyclotomic number at " + where);
      }
      const Integer count = value / e_squared;
      if (!count.fits_ulong_p()) throw InconsistencyError("cyclotomic number out of range");
      m.at(a, b) = count.get_ui();
    }
  }
  if (m.total() != std::uint64_t{s.q()} - 2) {
    throw InconsistencyError("recovered cyclotomic numbers do not sum to q - 2");
  }
  return m;
}

}  // namespace cyclo
