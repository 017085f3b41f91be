#include "sic/finite_field.hpp"

#include "sic/error.hpp"

#include <string>

namespace sic {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Poly poly_mod(Poly a, const Poly& divisor, std::uint32_t p) {
  trim(a);
  const std::size_t dd = divisor.size() - 1;
  while (a.size() > dd) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * divisor[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
  Poly out(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> is_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::pair<std::uint32_t, std::uint32_t>{static_cast<std::uint32_t>(q), 1};
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::pair<std::uint32_t, std::uint32_t>{static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = digits(static_cast<std::uint32_t>(idx), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  auto pm = is_prime_power(q);
  if (!pm || q > kMaxOrder)
    throw Error(ErrorKind::NotPrimePower, "field order " + std::to_string(q) + " is not a supported prime power");
  p_ = pm->first;
  m_ = pm->second;
  if (m_ == 1) return;

  // Candidates in lexicographic order of (c0, c1, ..., c_{m-1}): c0 is the
  // most significant digit of the running index.
  for (std::uint32_t idx = 0; idx < q_; ++idx) {
    Poly cand(m_ + 1, 0);
    std::uint32_t rest = idx;
    for (std::uint32_t i = m_; i-- > 0;) {
      cand[i] = rest % p_;
      rest /= p_;
    }
    cand[m_] = 1;
    if (is_irreducible(cand, p_)) {
      modulus_ = std::move(cand);
      break;
    }
  }

  if (q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits({a}, {b}, false).value);
        const auto prod = mul_poly({a}, {b}).value;
        mul_table_[a * q_ + b] = static_cast<std::uint16_t>(prod);
        if (prod == 1) inv_table_[a] = static_cast<std::uint16_t>(b);
      }
    }
  }
}

FieldElement FiniteField::element(std::uint32_t value) const {
  if (value >= q_)
    throw Error(ErrorKind::ParameterOutOfRange,
                "value " + std::to_string(value) + " is not an element of GF(" + std::to_string(q_) + ")");
  return {value};
}

FieldElement FiniteField::add_digits(FieldElement a, FieldElement b, bool subtract) const {
  std::uint32_t x = a.value, y = b.value, out = 0, place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t da = x % p_, db = y % p_;
    const std::uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return {out};
}

FieldElement FiniteField::mul_poly(FieldElement a, FieldElement b) const {
  const Poly da = digits(a.value, p_, m_), db = digits(b.value, p_, m_);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(m_, 0);
  return {undigits(r, p_)};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (m_ == 1) return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) + b.value) % p_)};
  if (!add_table_.empty()) return {add_table_[a.value * q_ + b.value]};
  return add_digits(a, b, false);
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const {
  if (m_ == 1) return {(a.value + p_ - b.value) % p_};
  return add_digits(a, b, true);
}

FieldElement FiniteField::neg(FieldElement a) const { return sub(zero(), a); }

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (m_ == 1) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  if (!mul_table_.empty()) return {mul_table_[a.value * q_ + b.value]};
  return mul_poly(a, b);
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.value == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
  if (!inv_table_.empty()) return {inv_table_[a.value]};
  // a^(q-2) = a^-1 in the multiplicative group of order q-1.
  return pow(a, q_ - 2);
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t v = 0; v < q_; ++v) out[v] = {v};
  return out;
}

}  // namespace sic
