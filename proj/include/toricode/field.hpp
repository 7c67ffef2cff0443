#ifndef TORICODE_FIELD_HPP
#define TORICODE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricode {

struct FieldElement;

// GF(q), q = p^e <= 2^16. Elements are canonical encodings 0..q-1: residues
// for prime fields, base-p packings of the polynomial coefficient vector
// (constant term least significant) for extensions. The modulus is the
// lexicographically smallest monic irreducible of degree e over GF(p),
// coefficients compared low-degree-first, so encodings are reproducible.
// Full add/mul/inv/neg tables are built for q <= 256; larger fields compute
// digit-by-digit. Immutable after construction.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t p, std::uint32_t e = 1);

  // Factors q as p^e; rejects non prime powers.
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }

  // Monic modulus polynomial, low-degree-first, length e+1. For e = 1 this is x.
  const std::vector<std::uint16_t>& modulus() const noexcept { return modulus_; }

  bool same_field(const FiniteField& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  // Arithmetic on raw encodings (the hot path).
  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    return tabled_ ? add_tab_[std::size_t(a) * q_ + b] : add_slow(a, b);
  }
  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add(a, neg(b)); }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return tabled_ ? mul_tab_[std::size_t(a) * q_ + b] : mul_slow(a, b);
  }
  std::uint16_t neg(std::uint16_t a) const { return tabled_ ? neg_tab_[a] : neg_slow(a); }
  std::uint16_t inv(std::uint16_t a) const;
  std::uint16_t pow(std::uint16_t a, long long n) const;

  FieldElement element(std::uint32_t encoding) const;
  // Embeds an integer through the prime subfield (value mod p).
  FieldElement from_int(long long v) const;

  // The q-1 units in ascending encoding order (all nonzero encodings).
  std::vector<FieldElement> units() const;

  // "p" for prime fields, "p^e" otherwise.
  std::string spec_string() const;

 private:
  std::uint16_t add_slow(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t neg_slow(std::uint16_t a) const;
  std::uint16_t mul_slow(std::uint16_t a, std::uint16_t b) const;

  std::uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<std::uint16_t> modulus_;
  bool tabled_ = false;
  std::vector<std::uint16_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

// An element bound to its field. Mixed-field arithmetic throws.
struct FieldElement {
  std::uint16_t value = 0;
  const FiniteField* field = nullptr;

  FieldElement() = default;
  FieldElement(std::uint16_t v, const FiniteField* f) : value(v), field(f) {}

  FieldElement inv() const { return {field->inv(value), field}; }
  FieldElement pow(long long n) const { return {field->pow(value, n), field}; }
  bool is_zero() const noexcept { return value == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {a.field->add(a.value, b.value), a.field};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {a.field->sub(a.value, b.value), a.field};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {a.field->mul(a.value, b.value), a.field};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {a.field->mul(a.value, a.field->inv(b.value)), a.field};
  }
  friend FieldElement operator-(FieldElement a) {
    return {a.field->neg(a.value), a.field};
  }
  friend bool operator==(FieldElement a, FieldElement b) {
    check_same(a, b);
    return a.value == b.value;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (a.field == nullptr || b.field == nullptr)
      throw std::invalid_argument("field element is unbound");
    if (a.field != b.field && !a.field->same_field(*b.field))
      throw std::invalid_argument("arithmetic between elements of distinct fields");
  }
};

}  // namespace toricode

#endif
