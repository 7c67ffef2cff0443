#include "toricode/field.hpp"

#include <array>
#include <cstddef>

namespace toricode {
namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableOrder = 256;
constexpr std::uint32_t kMaxDegree = 16;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Digits = std::array<std::uint16_t, kMaxDegree>;

Digits to_digits(std::uint32_t enc, std::uint32_t p, std::uint32_t e) {
  Digits d{};
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = static_cast<std::uint16_t>(enc % p);
    enc /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p, std::uint32_t e) {
  std::uint32_t enc = 0;
  for (std::uint32_t i = e; i-- > 0;) enc = enc * p + d[i];
  return enc;
}

// Remainder of a monic-or-not polynomial (low-first coefficients, mod p) by a
// monic divisor. Used only during modulus selection.
std::vector<std::uint16_t> poly_rem(std::vector<std::uint16_t> num,
                                    const std::vector<std::uint16_t>& den,
                                    std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const std::uint32_t lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    if (lead != 0) {
      for (std::size_t j = 0; j <= dd; ++j) {
        std::uint32_t sub = (lead * den[j]) % p;
        std::uint32_t cur = num[shift + j];
        num[shift + j] = static_cast<std::uint16_t>((cur + p - sub) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

bool is_zero_poly(const std::vector<std::uint16_t>& v) {
  for (auto c : v)
    if (c != 0) return false;
  return true;
}

// Trial division against every monic polynomial of degree <= e/2.
bool is_irreducible(const std::vector<std::uint16_t>& poly, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(poly.size()) - 1;
  for (std::uint32_t dd = 1; dd <= e / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint16_t> div(dd + 1, 0);
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < dd; ++i) {
        div[i] = static_cast<std::uint16_t>(t % p);
        t /= p;
      }
      div[dd] = 1;
      if (is_zero_poly(poly_rem(poly, div, p))) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree e over GF(p),
// coefficients compared low-degree-first (c0 most significant in the scan).
std::vector<std::uint16_t> pick_modulus(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint16_t> cand(e + 1, 0);
    std::uint64_t t = idx;
    for (std::uint32_t i = e; i-- > 0;) {
      cand[i] = static_cast<std::uint16_t>(t % p);
      t /= p;
    }
    cand[e] = 1;
    if (is_irreducible(cand, p)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
  if (e < 1 || e > kMaxDegree) throw std::invalid_argument("extension degree must be in 1..16");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw std::invalid_argument("field order exceeds table budget of 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = pick_modulus(p_, e_);

  if (q_ <= kTableOrder) {
    add_tab_.resize(std::size_t(q_) * q_);
    mul_tab_.resize(std::size_t(q_) * q_);
    neg_tab_.resize(q_);
    inv_tab_.resize(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      neg_tab_[a] = neg_slow(static_cast<std::uint16_t>(a));
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_tab_[std::size_t(a) * q_ + b] = add_slow(static_cast<std::uint16_t>(a),
                                                     static_cast<std::uint16_t>(b));
        mul_tab_[std::size_t(a) * q_ + b] = mul_slow(static_cast<std::uint16_t>(a),
                                                     static_cast<std::uint16_t>(b));
      }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_tab_[std::size_t(a) * q_ + b] == 1) {
          inv_tab_[a] = static_cast<std::uint16_t>(b);
          break;
        }
    tabled_ = true;
  }
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) {
    ++p;
    if (std::uint64_t(p) * p > q) {
      p = q;
      break;
    }
  }
  std::uint32_t e = 0;
  std::uint64_t acc = 1;
  while (acc < q) {
    acc *= p;
    ++e;
  }
  if (acc != q)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return FiniteField(p, e);
}

std::uint16_t FiniteField::add_slow(std::uint16_t a, std::uint16_t b) const {
  if (e_ == 1) {
    std::uint32_t s = std::uint32_t(a) + b;
    return static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
  }
  Digits da = to_digits(a, p_, e_), db = to_digits(b, p_, e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t s = std::uint32_t(da[i]) + db[i];
    da[i] = static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
  }
  return static_cast<std::uint16_t>(from_digits(da, p_, e_));
}

std::uint16_t FiniteField::neg_slow(std::uint16_t a) const {
  if (e_ == 1) return static_cast<std::uint16_t>(a == 0 ? 0 : p_ - a);
  Digits d = to_digits(a, p_, e_);
  for (std::uint32_t i = 0; i < e_; ++i)
    d[i] = static_cast<std::uint16_t>(d[i] == 0 ? 0 : p_ - d[i]);
  return static_cast<std::uint16_t>(from_digits(d, p_, e_));
}

std::uint16_t FiniteField::mul_slow(std::uint16_t a, std::uint16_t b) const {
  if (e_ == 1)
    return static_cast<std::uint16_t>((std::uint64_t(a) * b) % p_);
  Digits da = to_digits(a, p_, e_), db = to_digits(b, p_, e_);
  std::array<std::uint32_t, 2 * kMaxDegree> prod{};
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + std::uint32_t(da[i]) * db[j]) % p_;
  }
  // Reduce x^i for i >= e using x^e = -(low part of modulus).
  for (std::uint32_t i = 2 * e_ - 2 + 1; i-- > e_;) {
    std::uint32_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < e_; ++j) {
      std::uint32_t sub = (c * modulus_[j]) % p_;
      prod[i - e_ + j] = (prod[i - e_ + j] + p_ - sub) % p_;
    }
  }
  Digits out{};
  for (std::uint32_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint16_t>(prod[i]);
  return static_cast<std::uint16_t>(from_digits(out, p_, e_));
}

std::uint16_t FiniteField::inv(std::uint16_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  if (tabled_) return inv_tab_[a];
  return pow(a, static_cast<long long>(q_) - 2);
}

std::uint16_t FiniteField::pow(std::uint16_t a, long long n) const {
  if (n < 0) {
    a = inv(a);
    // -n would overflow for LLONG_MIN; accumulate the magnitude unsigned.
    unsigned long long m = static_cast<unsigned long long>(-(n + 1)) + 1ull;
    std::uint16_t r = 1, base = a;
    while (m != 0) {
      if (m & 1ull) r = mul(r, base);
      base = mul(base, base);
      m >>= 1;
    }
    return r;
  }
  std::uint16_t r = 1, base = a;
  unsigned long long m = static_cast<unsigned long long>(n);
  while (m != 0) {
    if (m & 1ull) r = mul(r, base);
    base = mul(base, base);
    m >>= 1;
  }
  return r;
}

FieldElement FiniteField::element(std::uint32_t encoding) const {
  if (encoding >= q_)
    throw std::out_of_range("encoding " + std::to_string(encoding) + " out of range for GF(" +
                            std::to_string(q_) + ")");
  return {static_cast<std::uint16_t>(encoding), this};
}

FieldElement FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint16_t>(r), this};
}

std::vector<FieldElement> FiniteField::units() const {
  std::vector<FieldElement> out;
  out.reserve(q_ - 1);
  for (std::uint32_t a = 1; a < q_; ++a) out.push_back({static_cast<std::uint16_t>(a), this});
  return out;
}

std::string FiniteField::spec_string() const {
  if (e_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(e_);
}

}  // namespace toricode
