#pragma once

// Exact scalar fields. A field is a small value object that knows how to
// do arithmetic on its Element type; matrices and representations carry a
// copy of their field.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>

namespace qvl {

using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" into a canonical rational. Throws
/// SemanticError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

template <typename F>
concept Field = std::copyable<F> && std::equality_comparable<F> &&
    requires(const F f, const typename F::Element a,
             const typename F::Element b, const Rational& r, std::int64_t i) {
      { f.zero() } -> std::same_as<typename F::Element>;
      { f.one() } -> std::same_as<typename F::Element>;
      { f.add(a, b) } -> std::same_as<typename F::Element>;
      { f.sub(a, b) } -> std::same_as<typename F::Element>;
      { f.mul(a, b) } -> std::same_as<typename F::Element>;
      { f.neg(a) } -> std::same_as<typename F::Element>;
      { f.inv(a) } -> std::same_as<typename F::Element>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.equal(a, b) } -> std::same_as<bool>;
      { f.from_integer(i) } -> std::same_as<typename F::Element>;
      { f.from_rational(r) } -> std::same_as<typename F::Element>;
      { f.format(a) } -> std::same_as<std::string>;
      { f.characteristic() } -> std::same_as<std::uint32_t>;
    };

/// The prime field F_p, p < 2^31. Elements are stored reduced to [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws SemanticError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t order() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  Element add(Element a, Element b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
  }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  /// Throws ValidationError on zero.
  Element inv(Element a) const;
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }

  Element from_integer(std::int64_t value) const noexcept;
  /// Throws ValidationError when the denominator vanishes mod p.
  Element from_rational(const Rational& value) const;
  std::string format(Element a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// The rationals, with arbitrary-precision numerator and denominator.
class RationalField {
 public:
  using Element = Rational;

  std::uint32_t characteristic() const noexcept { return 0; }

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_integer(std::int64_t value) const {
    return Rational(static_cast<long>(value));
  }
  Element from_rational(const Rational& value) const { return value; }
  std::string format(const Element& a) const { return to_string(a); }

  bool operator==(const RationalField&) const = default;
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

/// Runtime choice of field, used at the I/O boundary.
using FieldSpec = std::variant<PrimeField, RationalField>;

std::string describe(const FieldSpec& field);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace qvl
