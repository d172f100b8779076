#include "cyclo/cycint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cyclo {

namespace {

std::uint32_t positive_mod(std::int64_t t, std::uint32_t e) {
  const std::int64_t m = t % static_cast<std::int64_t>(e);
  return static_cast<std::uint32_t>(m < 0 ? m + e : m);
}

// Exact quotient of a by the monic polynomial b; throws if b does not divide a.
std::vector<Integer> exact_divide(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<Integer> quotient(a.size() - db, 0);
  for (std::size_t d = a.size(); d-- > db;) {
    const Integer c = a[d];
    quotient[d - db] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= db; ++t) a[d - db + t] -= c * b[t];
  }
  if (std::any_of(a.begin(), a.end(), [](const Integer& c) { return c != 0; })) {
    throw std::logic_error("inexact polynomial division");
  }
  return quotient;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

CycPoly cyclotomic_polynomial(std::uint32_t e) {
  if (e == 0) throw std::invalid_argument("cyclotomic polynomial order must be positive");
  std::map<std::uint32_t, std::vector<Integer>> known;
  for (std::uint32_t d : divisors(e)) {
    std::vector<Integer> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (const auto& [smaller, phi] : known) {
      if (d % smaller == 0) poly = exact_divide(std::move(poly), phi);
    }
    known.emplace(d, std::move(poly));
  }
  return {e, std::move(known.at(e))};
}

std::shared_ptr<const CyclotomicRing> CyclotomicRing::make(std::uint32_t e) {
  return std::shared_ptr<const CyclotomicRing>(new CyclotomicRing(cyclotomic_polynomial(e)));
}

void CyclotomicRing::reduce(std::vector<Integer>& poly) const {
  const std::size_t phi = rank();
  const auto& m = modulus_.coeffs;
  for (std::size_t d = poly.size(); d-- > phi;) {
    if (poly[d] == 0) continue;
    const Integer c = poly[d];
    for (std::size_t t = 0; t <= phi; ++t) poly[d - phi + t] -= c * m[t];
  }
  poly.resize(phi, 0);
}

CycInt::CycInt(RingPtr ring) : ring_(std::move(ring)), coeffs_(ring_->rank(), 0) {}

CycInt::CycInt(RingPtr ring, const Integer& value) : CycInt(std::move(ring)) {
  coeffs_[0] = value;
}

CycInt::CycInt(RingPtr ring, std::vector<Integer> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  ring_->reduce(coeffs_);
}

CycInt CycInt::zeta_power(RingPtr ring, std::int64_t t) {
  std::vector<Integer> poly(ring->order(), 0);
  poly[positive_mod(t, ring->order())] = 1;
  return CycInt(std::move(ring), std::move(poly));
}

CycInt CycInt::from_residue_counts(RingPtr ring, std::span<const Integer> counts) {
  if (counts.size() != ring->order()) {
    throw std::invalid_argument("residue buffer length must equal the order");
  }
  return CycInt(std::move(ring), std::vector<Integer>(counts.begin(), counts.end()));
}

bool CycInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

bool CycInt::is_integer() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Integer& c) { return c == 0; });
}

Integer CycInt::as_integer() const {
  if (!is_integer()) throw std::domain_error("non-integer element " + to_string());
  return coeffs_[0];
}

void CycInt::accumulate_shifted(std::span<Integer> residues, std::int64_t shift) const {
  const std::uint32_t e = order();
  const std::uint32_t s = positive_mod(shift, e);
  for (std::uint32_t t = 0; t < coeffs_.size(); ++t) {
    if (coeffs_[t] != 0) residues[(t + s) % e] += coeffs_[t];
  }
}

CycInt CycInt::conjugate(std::int64_t t) const {
  const std::uint32_t e = order();
  const std::uint32_t u = positive_mod(t, e);
  if (std::gcd(u, e) != 1) {
    throw std::invalid_argument("conjugation exponent " + std::to_string(t) +
                                " is not a unit modulo " + std::to_string(e));
  }
  std::vector<Integer> lifted(e, 0);
  for (std::uint32_t s = 0; s < coeffs_.size(); ++s) {
    lifted[static_cast<std::uint64_t>(s) * u % e] += coeffs_[s];
  }
  return CycInt(ring_, std::move(lifted));
}

CycInt CycInt::times_zeta_power(std::int64_t t) const {
  std::vector<Integer> lifted(order(), 0);
  accumulate_shifted(lifted, t);
  return CycInt(ring_, std::move(lifted));
}

void CycInt::require_same_order(const CycInt& other) const {
  if (order() != other.order()) {
    throw std::invalid_argument("mismatched cyclotomic orders " + std::to_string(order()) +
                                " and " + std::to_string(other.order()));
  }
}

CycInt& CycInt::operator+=(const CycInt& other) {
  require_same_order(other);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] += other.coeffs_[t];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  require_same_order(other);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] -= other.coeffs_[t];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& other) {
  require_same_order(other);
  const std::size_t n = coeffs_.size();
  std::vector<Integer> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  ring_->reduce(prod);
  coeffs_ = std::move(prod);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string CycInt::to_string() const {
  std::string out;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    const Integer& c = coeffs_[t];
    if (c == 0) continue;
    if (t == 0) {
      out += c.get_str();
      continue;
    }
    const Integer magnitude = abs(c);
    out += (c < 0) ? "-" : (out.empty() ? "" : "+");
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "z";
    if (t > 1) out += "^" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycInt& a) { return os << a.to_string(); }

}  // namespace cyclo
