#pragma once

// Exact arithmetic in Z[zeta_e], elements kept in the power basis
// 1, z, ..., z^{phi(e)-1} reduced modulo the cyclotomic polynomial.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cyclo {

using Integer = mpz_class;

std::uint32_t euler_phi(std::uint32_t n);

/// Divisors of n in increasing order.
std::vector<std::uint32_t> divisors(std::uint32_t n);

struct CycPoly {
  std::uint32_t e = 0;
  std::vector<Integer> coeffs;  // little-endian, monic, length phi(e) + 1

  std::uint32_t degree() const { return static_cast<std::uint32_t>(coeffs.size() - 1); }
};

/// Phi_e by exact division of x^e - 1 by Phi_d over the proper divisors d.
CycPoly cyclotomic_polynomial(std::uint32_t e);

/// Shared, immutable per-order data: Phi_e and the reduced powers of zeta.
class CyclotomicRing {
 public:
  /// Throws std::invalid_argument for e == 0.
  static std::shared_ptr<const CyclotomicRing> make(std::uint32_t e);

  std::uint32_t order() const { return modulus_.e; }
  std::uint32_t rank() const { return modulus_.degree(); }
  const CycPoly& modulus() const { return modulus_; }

  /// Reduce a polynomial in z (any length) modulo Phi_e, in place; the
  /// result is resized to rank().
  void reduce(std::vector<Integer>& poly) const;

 private:
  explicit CyclotomicRing(CycPoly modulus) : modulus_(std::move(modulus)) {}

  CycPoly modulus_;
};

using RingPtr = std::shared_ptr<const CyclotomicRing>;

class CycInt {
 public:
  explicit CycInt(RingPtr ring);
  CycInt(RingPtr ring, const Integer& value);
  /// Reduces coeffs modulo Phi_e; any length is accepted.
  CycInt(RingPtr ring, std::vector<Integer> coeffs);

  /// zeta^{t mod e} in canonical form.
  static CycInt zeta_power(RingPtr ring, std::int64_t t);
  /// sum_t counts[t] zeta^t over t in [0, e), reduced.
  static CycInt from_residue_counts(RingPtr ring, std::span<const Integer> counts);

  std::uint32_t order() const { return ring_->order(); }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integer() const;
  /// Throws std::domain_error if any non-constant coefficient is nonzero.
  Integer as_integer() const;

  /// Image under zeta -> zeta^t. Throws std::invalid_argument unless
  /// gcd(t, e) = 1.
  CycInt conjugate(std::int64_t t) const;
  /// this * zeta^t.
  CycInt times_zeta_power(std::int64_t t) const;

  /// Adds the lifted coefficients of this * zeta^shift into an
  /// e-periodic residue buffer (length e). No reduction is performed.
  void accumulate_shifted(std::span<Integer> residues, std::int64_t shift) const;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt& operator*=(const CycInt& other);
  CycInt operator-() const;

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

  /// Signed integer combination such as "-1-3*z" or "2+z^3".
  std::string to_string() const;

 private:
  void require_same_order(const CycInt& other) const;

  RingPtr ring_;
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycInt& a);

}  // namespace cyclo
