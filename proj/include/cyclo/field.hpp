#pragma once

// Finite fields F_{p^r} at desk scale: prime and extension fields with a
// full discrete-logarithm table over the cyclic group F_q^*.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

/// Largest field size for which an index table may be built.
inline constexpr std::uint64_t kMaxTableSize = 1'000'000;

/// Largest field size accepted by build_field.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 31;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::uint32_t q = 0;
  // Monic, little-endian, length r + 1. Empty for prime fields.
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

/// An element of F_q, packed as sum_t c_t p^t over its little-endian
/// coefficients. The packing is a storage detail; the canonical ordering
/// of elements is Field::rank, not the packed code.
struct FieldElement {
  std::uint32_t code = 0;

  auto operator<=>(const FieldElement&) const = default;
};

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order (n >= 1).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Ben-Or irreducibility test for a monic polynomial over F_p
/// (little-endian coefficients, leading coefficient last).
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

class Field {
 public:
  /// Throws std::invalid_argument for a non-prime p, r == 0, an oversized
  /// field, or a supplied modulus that is not monic irreducible of degree r.
  static Field build(std::uint32_t p, std::uint32_t r,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t r() const { return spec_.r; }
  std::uint32_t q() const { return spec_.q; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t n) const;

  /// a + 1, without a general addition.
  FieldElement plus_one(FieldElement a) const {
    return (a.code % spec_.p == spec_.p - 1) ? FieldElement{a.code - (spec_.p - 1)}
                                             : FieldElement{a.code + 1};
  }

  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  /// Throws std::invalid_argument unless exactly r coefficients in [0, p).
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;

  /// Position of an element in the canonical ordering: lexicographic on
  /// the coefficient tuple, constant term first.
  std::uint32_t rank(FieldElement a) const;
  FieldElement element_at_rank(std::uint32_t n) const;

  /// Decimal residue for r = 1, "c0,c1,...,c{r-1}" otherwise.
  std::string to_string(FieldElement a) const;
  /// Inverse of to_string. Throws std::invalid_argument on malformed text.
  FieldElement parse(std::string_view text) const;

  /// True iff a has multiplicative order exactly q - 1.
  bool is_generator(FieldElement a) const;
  /// Least generator of F_q^* in the canonical ordering.
  FieldElement find_generator() const;

 private:
  explicit Field(FieldSpec spec);

  FieldSpec spec_;
  std::vector<std::uint32_t> powers_;  // p^t for t in [0, r]
  std::vector<std::uint64_t> group_prime_factors_;
};

/// Discrete logarithms to a fixed generator, for every nonzero element.
class IndexTable {
 public:
  static constexpr std::uint32_t kNoIndex = 0xFFFF'FFFFu;

  /// Builds the table in one pass of repeated multiplication. Throws
  /// std::invalid_argument if g does not generate F_q^* or if q exceeds
  /// kMaxTableSize.
  static IndexTable build(const Field& field, FieldElement g);

  FieldElement generator() const { return generator_; }
  std::uint32_t group_order() const { return static_cast<std::uint32_t>(exp_.size()); }

  /// Index of a nonzero element; kNoIndex for zero.
  std::uint32_t index(FieldElement v) const { return log_[v.code]; }
  /// generator^t for t in [0, q - 1).
  FieldElement power(std::uint32_t t) const { return exp_[t]; }

 private:
  IndexTable() = default;

  FieldElement generator_;
  std::vector<std::uint32_t> log_;
  std::vector<FieldElement> exp_;
};

}  // namespace cyclo
