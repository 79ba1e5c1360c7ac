#include "bds/bignum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bds {
namespace {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "GMP ui/si entry points are assumed to take 64-bit operands");

bool is_decimal(std::string_view digits) {
  return !digits.empty() &&
         std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigNat::BigNat(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {}

BigNat BigNat::from_decimal(std::string_view text) {
  if (!is_decimal(text)) {
    throw std::invalid_argument("not a decimal natural number: '" + std::string(text) + "'");
  }
  return BigNat(mpz_class(std::string(text), 10));
}

BigNat BigNat::from_mpz(mpz_class value) {
  if (sgn(value) < 0) throw std::domain_error("BigNat cannot hold a negative value");
  return BigNat(std::move(value));
}

BigNat BigNat::pow(std::uint64_t base, std::uint64_t exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return BigNat(std::move(out));
}

BigNat BigNat::pow2(std::uint64_t exponent) {
  mpz_class out;
  mpz_setbit(out.get_mpz_t(), exponent);
  return BigNat(std::move(out));
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw std::domain_error("BigNat subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigNat& BigNat::operator*=(std::uint64_t rhs) {
  mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), rhs);
  return *this;
}

void BigNat::add_product(const BigNat& a, std::uint64_t b) {
  mpz_addmul_ui(value_.get_mpz_t(), a.value_.get_mpz_t(), b);
}

void BigNat::add_product(const BigNat& a, const BigNat& b) {
  mpz_addmul(value_.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
}

BigNat& BigNat::divide_exact(std::uint64_t divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_ui_p(value_.get_mpz_t(), divisor)) {
    throw std::domain_error("inexact division by " + std::to_string(divisor));
  }
  mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), divisor);
  return *this;
}

BigNat& BigNat::divide_exact(const BigNat& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  if (!divisible_by(divisor)) throw std::domain_error("inexact big-integer division");
  mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return *this;
}

BigNat BigNat::mod(const BigNat& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return BigNat(std::move(r));
}

bool BigNat::divisible_by(const BigNat& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  return mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()) != 0;
}

std::size_t BigNat::digit_count() const {
  if (is_zero()) return 1;
  // mpz_sizeinbase is exact or one too large for base 10.
  std::size_t estimate = mpz_sizeinbase(value_.get_mpz_t(), 10);
  mpz_class threshold;
  mpz_ui_pow_ui(threshold.get_mpz_t(), 10, estimate - 1);
  return cmp(value_, threshold) < 0 ? estimate - 1 : estimate;
}

std::size_t BigNat::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

BigInt::BigInt(std::int64_t value) : value_(static_cast<long>(value)) {}

BigInt::BigInt(const BigNat& value) : value_(value.mpz()) {}

BigInt BigInt::from_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_decimal(digits)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  mpz_class v(std::string(digits), 10);
  if (text.front() == '-') v = -v;
  return BigInt(std::move(v));
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigInt& BigInt::operator*=(std::int64_t rhs) {
  mpz_mul_si(value_.get_mpz_t(), value_.get_mpz_t(), rhs);
  return *this;
}

BigInt difference(const BigNat& a, const BigNat& b) {
  return BigInt::from_mpz(mpz_class(a.mpz() - b.mpz()));
}

}  // namespace bds
