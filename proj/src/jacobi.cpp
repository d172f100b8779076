#include "cyclo/jacobi.hpp"

#include <algorithm>
#include <string>

namespace cyclo {

namespace {

CycInt from_counts(const RingPtr& ring, const std::uint64_t* counts) {
  std::vector<Integer> residues(ring->order());
  for (std::uint32_t t = 0; t < ring->order(); ++t) residues[t] = Integer(counts[t]);
  return CycInt::from_residue_counts(ring, residues);
}

JacobiMatrix empty_matrix(const CharacterSetup& s) {
  const std::uint32_t e = s.order();
  return {s.ring(), e, s.q(), s.generator(),
          std::vector<CycInt>(std::size_t{e} * e, CycInt(s.ring()))};
}

}  // namespace

CycInt jacobi_direct(const CharacterSetup& s, std::uint32_t i, std::uint32_t j) {
  const std::uint32_t e = s.order();
  if (i >= e || j >= e) {
    throw std::invalid_argument("character exponents must lie in [0, " + std::to_string(e) + ")");
  }
  const Field& field = s.field();
  const IndexTable& index = s.index();
  std::vector<std::uint64_t> counts(e, 0);
  for (std::uint32_t code = 1; code < field.q(); ++code) {
    const FieldElement v{code};
    const FieldElement w = field.plus_one(v);
    if (w.code == 0) continue;
    const std::uint64_t exponent =
        std::uint64_t{i} * index.index(v) + std::uint64_t{j} * index.index(w);
    ++counts[exponent % e];
  }
  return from_counts(s.ring(), counts.data());
}

JacobiMatrix jacobi_all_direct(const CharacterSetup& s) {
  const std::uint32_t e = s.order();
  const Field& field = s.field();
  // buckets[(i * e + j) * e + t] counts v with i ind(v) + j ind(v+1) = t mod e
  std::vector<std::uint64_t> buckets(std::size_t{e} * e * e, 0);
  for (std::uint32_t code = 1; code < field.q(); ++code) {
    const FieldElement v{code};
    const FieldElement w = field.plus_one(v);
    if (w.code == 0) continue;
    const std::uint32_t a = s.residue(v);
    const std::uint32_t b = s.residue(w);
    std::uint64_t* cell = buckets.data();
    for (std::uint32_t i = 0; i < e; ++i) {
      const std::uint32_t ia = (i * a) % e;
      for (std::uint32_t j = 0; j < e; ++j, cell += e) ++cell[(ia + j * b) % e];
    }
  }
  JacobiMatrix m = empty_matrix(s);
  for (std::size_t cell = 0; cell < m.entries.size(); ++cell) {
    m.entries[cell] = from_counts(s.ring(), buckets.data() + cell * e);
  }
  return m;
}

JacobiMatrix jacobi_from_cyclotomic(const CycNumMatrix& cyc, const CharacterSetup& s) {
  const std::uint32_t e = s.order();
  if (cyc.e != e || cyc.entries.size() != std::size_t{e} * e) {
    throw std::invalid_argument("cyclotomic matrix order does not match the setup");
  }
  if (cyc.q != s.q() || cyc.generator != s.generator()) {
    throw std::invalid_argument("cyclotomic matrix belongs to a different field or generator");
  }
  JacobiMatrix m = empty_matrix(s);
  std::vector<std::uint64_t> counts(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t a = 0; a < e; ++a) {
        for (std::uint32_t b = 0; b < e; ++b) counts[(a * i + b * j) % e] += cyc.at(a, b);
      }
      m.at(i, j) = from_counts(s.ring(), counts.data());
    }
  }
  return m;
}

JacobiMatrix jacobi_via_reps(const CharacterSetup& s, WorkStats* stats) {
  const std::uint32_t e = s.order();
  const auto classes = enumerate_classes(s.symmetry(), Family::Jacobi, s.cofactor());
  JacobiMatrix m = empty_matrix(s);
  for (const auto& c : classes) {
    const CycInt value = jacobi_direct(s, c.representative.first, c.representative.second);
    const CycInt negated = -value;
    for (std::size_t n = 0; n < c.members.size(); ++n) {
      m.at(c.members[n].first, c.members[n].second) = c.signs[n] > 0 ? value : negated;
    }
  }
  if (stats) {
    stats->direct_entries = classes.size();
    stats->derived_entries = std::size_t{e} * e - classes.size();
  }
  return m;
}

}  // namespace cyclo
