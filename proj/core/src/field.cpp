#include "qvl/field.hpp"

#include <cctype>

#include "qvl/errors.hpp"

namespace qvl {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto valid_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' ||
      den[0] == '+') {
    throw SemanticError("malformed rational '" + text + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw SemanticError("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw SemanticError("field characteristic " + std::to_string(p) +
                        " is not a prime below 2^31");
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw ValidationError("division by zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += p_;
  return static_cast<Element>(t0);
}

PrimeField::Element PrimeField::from_integer(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const Rational& value) const {
  const mpz_class num = value.get_num() % p_;
  const mpz_class den = value.get_den() % p_;
  const Element d = from_integer(den.get_si());
  if (d == 0) {
    throw ValidationError("rational " + to_string(value) +
                          " has no image in F_" + std::to_string(p_));
  }
  return mul(from_integer(num.get_si()), inv(d));
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw ValidationError("division by zero in Q");
  return Rational(1) / a;
}

std::string describe(const FieldSpec& field) {
  if (const auto* fp = std::get_if<PrimeField>(&field)) {
    return "F_" + std::to_string(fp->characteristic());
  }
  return "Q";
}

}  // namespace qvl
