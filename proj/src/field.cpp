#include "cyclo/field.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cyclo {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime; a is a nonzero residue.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t n = p - 2; n > 0; n >>= 1) {
    if (n & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Remainder of a modulo b over F_p; b nonzero after trimming.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t t = 0; t <= db; ++t) {
      a[shift + t] = (a[shift + t] + (p - c) * b[t]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  for (; n > 0; n >>= 1) {
    if (n & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly rem = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(rem);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // f is irreducible iff gcd(f, x^{p^i} - x) = 1 for 1 <= i <= degree/2.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  powers_.resize(spec_.r + 1);
  powers_[0] = 1;
  for (std::uint32_t t = 1; t <= spec_.r; ++t) powers_[t] = powers_[t - 1] * spec_.p;
  group_prime_factors_ = prime_factors(spec_.q - 1);
}

Field Field::build(std::uint32_t p, std::uint32_t r,
                   std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  }
  if (r == 0) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t t = 0; t < r; ++t) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(r) +
                                  " exceeds the supported range");
    }
  }

  FieldSpec spec{p, r, static_cast<std::uint32_t>(q), {}};
  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != r + 1 || m.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree " + std::to_string(r));
    }
    if (std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; })) {
      throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
    if (r > 1 && !is_irreducible(m, p)) {
      throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
    }
    if (r > 1) spec.modulus = m;
  } else if (r > 1) {
    // Scan monic polynomials with the constant term as the most significant
    // digit of the lexicographic order.
    std::vector<std::uint32_t> candidate(r + 1, 0);
    candidate[r] = 1;
    const std::uint64_t count = q;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t rest = n;
      for (std::uint32_t t = r; t-- > 0;) {
        candidate[t] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_irreducible(candidate, p)) {
        spec.modulus = candidate;
        break;
      }
    }
  }
  return Field(std::move(spec));
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> out(spec_.r);
  std::uint32_t rest = a.code;
  for (auto& c : out) {
    c = rest % spec_.p;
    rest /= spec_.p;
  }
  return out;
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != spec_.r) {
    throw std::invalid_argument("expected " + std::to_string(spec_.r) + " coefficients");
  }
  std::uint32_t code = 0;
  for (std::uint32_t t = 0; t < spec_.r; ++t) {
    if (coeffs[t] >= spec_.p) throw std::invalid_argument("coefficient out of range [0, p)");
    code += coeffs[t] * powers_[t];
  }
  return {code};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (spec_.r == 1) {
    return {static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % spec_.p)};
  }
  std::uint32_t code = 0;
  std::uint32_t x = a.code;
  std::uint32_t y = b.code;
  for (std::uint32_t t = 0; t < spec_.r; ++t) {
    code += ((x % spec_.p + y % spec_.p) % spec_.p) * powers_[t];
    x /= spec_.p;
    y /= spec_.p;
  }
  return {code};
}

FieldElement Field::neg(FieldElement a) const {
  std::uint32_t code = 0;
  std::uint32_t x = a.code;
  for (std::uint32_t t = 0; t < spec_.r; ++t) {
    code += ((spec_.p - x % spec_.p) % spec_.p) * powers_[t];
    x /= spec_.p;
  }
  return {code};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  const std::uint64_t p = spec_.p;
  if (spec_.r == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p)};

  const std::uint32_t r = spec_.r;
  std::vector<std::uint64_t> x(r), y(r), prod(2 * r - 1, 0);
  std::uint32_t ca = a.code, cb = b.code;
  for (std::uint32_t t = 0; t < r; ++t) {
    x[t] = ca % p;
    y[t] = cb % p;
    ca /= spec_.p;
    cb /= spec_.p;
  }
  for (std::uint32_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  // modulus is monic: x^r = -sum_{t<r} m_t x^t
  for (std::uint32_t d = 2 * r - 2; d >= r; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t t = 0; t < r; ++t) {
      prod[d - r + t] = (prod[d - r + t] + (p - c) * spec_.modulus[t]) % p;
    }
  }
  std::uint32_t code = 0;
  for (std::uint32_t t = 0; t < r; ++t) code += static_cast<std::uint32_t>(prod[t]) * powers_[t];
  return {code};
}

FieldElement Field::pow(FieldElement a, std::uint64_t n) const {
  FieldElement result = one();
  for (; n > 0; n >>= 1) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inversion of zero");
  return pow(a, spec_.q - 2);
}

std::uint32_t Field::rank(FieldElement a) const {
  std::uint32_t n = 0;
  std::uint32_t rest = a.code;
  for (std::uint32_t t = 0; t < spec_.r; ++t) {
    n += (rest % spec_.p) * powers_[spec_.r - 1 - t];
    rest /= spec_.p;
  }
  return n;
}

FieldElement Field::element_at_rank(std::uint32_t n) const {
  std::uint32_t code = 0;
  for (std::uint32_t t = spec_.r; t-- > 0;) {
    code += (n % spec_.p) * powers_[t];
    n /= spec_.p;
  }
  return {code};
}

std::string Field::to_string(FieldElement a) const {
  if (spec_.r == 1) return std::to_string(a.code);
  std::string out;
  for (auto c : coeffs(a)) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

FieldElement Field::parse(std::string_view text) const {
  std::vector<std::uint32_t> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_coeffs(parts);
}

bool Field::is_generator(FieldElement a) const {
  if (a.code == 0 || a.code >= spec_.q) return false;
  const std::uint64_t order = spec_.q - 1;
  if (pow(a, order) != one()) return false;
  return std::none_of(group_prime_factors_.begin(), group_prime_factors_.end(),
                      [&](std::uint64_t l) { return pow(a, order / l) == one(); });
}

FieldElement Field::find_generator() const {
  for (std::uint32_t n = 1; n < spec_.q; ++n) {
    const FieldElement candidate = element_at_rank(n);
    if (is_generator(candidate)) return candidate;
  }
  throw std::logic_error("no generator found for F_" + std::to_string(spec_.q));
}

IndexTable IndexTable::build(const Field& field, FieldElement g) {
  if (field.q() > kMaxTableSize) {
    throw std::invalid_argument("index tables are limited to q <= " +
                                std::to_string(kMaxTableSize));
  }
  if (!field.is_generator(g)) {
    throw std::invalid_argument(field.to_string(g) + " does not generate F_" +
                                std::to_string(field.q()) + "^*");
  }
  IndexTable table;
  table.generator_ = g;
  const std::uint32_t order = field.q() - 1;
  table.log_.assign(field.q(), kNoIndex);
  table.exp_.resize(order);
  FieldElement x = field.one();
  for (std::uint32_t t = 0; t < order; ++t) {
    if (table.log_[x.code] != kNoIndex) {
      throw std::logic_error("generator power cycle shorter than q - 1");
    }
    table.log_[x.code] = t;
    table.exp_[t] = x;
    x = field.mul(x, g);
  }
  return table;
}

}  // namespace cyclo
