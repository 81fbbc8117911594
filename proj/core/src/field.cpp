#include "diffsig/field.hpp"

namespace diffsig {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_prime(const Residue& a, const Residue& b) {
  if (a.prime != b.prime) throw DomainError("mixing residues of different primes");
}

}  // namespace

bool FieldElement::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return residue().value == 0;
}

bool FieldElement::is_one() const {
  if (is_rational()) return rational() == 1;
  return residue().value == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (is_rational()) return FieldElement(mpq_class(rational() + o.rational()));
  const Residue& a = residue();
  const Residue& b = o.residue();
  require_same_prime(a, b);
  std::uint64_t s = std::uint64_t(a.value) + b.value;
  if (s >= a.prime) s -= a.prime;
  return FieldElement(Residue{static_cast<std::uint32_t>(s), a.prime});
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (is_rational()) return FieldElement(mpq_class(rational() - o.rational()));
  const Residue& a = residue();
  const Residue& b = o.residue();
  require_same_prime(a, b);
  std::uint64_t s = std::uint64_t(a.value) + a.prime - b.value;
  if (s >= a.prime) s -= a.prime;
  return FieldElement(Residue{static_cast<std::uint32_t>(s), a.prime});
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (is_rational()) return FieldElement(mpq_class(rational() * o.rational()));
  const Residue& a = residue();
  const Residue& b = o.residue();
  require_same_prime(a, b);
  return FieldElement(
      Residue{static_cast<std::uint32_t>(std::uint64_t(a.value) * b.value % a.prime), a.prime});
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(mpq_class(-rational()));
  const Residue& a = residue();
  return FieldElement(Residue{a.value == 0 ? 0u : a.prime - a.value, a.prime});
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in the coefficient field");
  if (is_rational()) return FieldElement(mpq_class(1 / rational()));
  const Residue& a = residue();
  return FieldElement(Residue{mod_pow(a.value, a.prime - 2, a.prime), a.prime});
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return rational() == o.rational();
  return residue().value == o.residue().value && residue().prime == o.residue().prime;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(residue().value);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p))
    throw DomainError("field characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

FieldElement Field::from_int(long v) const {
  if (is_rational()) return FieldElement(mpq_class(v));
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return FieldElement(Residue{static_cast<std::uint32_t>(r), p_});
}

FieldElement Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return FieldElement(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return FieldElement(Residue{static_cast<std::uint32_t>(r.get_ui()), p_});
}

FieldElement Field::from_rational(const mpq_class& v) const {
  if (is_rational()) return FieldElement(v);
  FieldElement den = from_mpz(v.get_den());
  if (den.is_zero())
    throw DomainError("coefficient " + v.get_str() + " is not invertible in " + to_string());
  return from_mpz(v.get_num()) / den;
}

std::string Field::to_string() const {
  if (is_rational()) return "Q";
  return "F_" + std::to_string(p_);
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace diffsig
