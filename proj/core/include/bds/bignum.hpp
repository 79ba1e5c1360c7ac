#pragma once

// Exact arbitrary-precision integers used by every evaluator.
//
// BigNat is a nonnegative integer; subtraction that would go below zero is a
// domain error. BigInt is signed and can hold any difference of two BigNats.
// Both are thin value types over GMP's mpz_class.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bds {

class BigInt;

class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  // Throws std::invalid_argument unless `text` is a plain decimal numeral.
  static BigNat from_decimal(std::string_view text);
  // Throws std::domain_error if `value` is negative.
  static BigNat from_mpz(mpz_class value);

  static BigNat pow(std::uint64_t base, std::uint64_t exponent);
  static BigNat pow2(std::uint64_t exponent);

  BigNat& operator+=(const BigNat& rhs);
  BigNat& operator-=(const BigNat& rhs);  // throws std::domain_error on underflow
  BigNat& operator*=(const BigNat& rhs);
  BigNat& operator*=(std::uint64_t rhs);

  // this += a * b, the inner-loop primitive of every double sum.
  void add_product(const BigNat& a, std::uint64_t b);
  void add_product(const BigNat& a, const BigNat& b);

  // Exact division; throws std::domain_error if the remainder is nonzero
  // or the divisor is zero.
  BigNat& divide_exact(std::uint64_t divisor);
  BigNat& divide_exact(const BigNat& divisor);

  // Remainder of division by `divisor`; throws std::domain_error on zero.
  [[nodiscard]] BigNat mod(const BigNat& divisor) const;
  [[nodiscard]] bool divisible_by(const BigNat& divisor) const;

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }
  // Exact number of decimal digits; zero has one digit.
  [[nodiscard]] std::size_t digit_count() const;
  [[nodiscard]] std::size_t bit_length() const;

  [[nodiscard]] const mpz_class& mpz() const { return value_; }

  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
  friend BigNat operator-(BigNat lhs, const BigNat& rhs) { return lhs -= rhs; }
  friend BigNat operator*(BigNat lhs, const BigNat& rhs) { return lhs *= rhs; }
  friend BigNat operator*(BigNat lhs, std::uint64_t rhs) { return lhs *= rhs; }
  friend BigNat operator*(std::uint64_t lhs, BigNat rhs) { return rhs *= lhs; }

  friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit BigNat(mpz_class value) : value_(std::move(value)) {}

  mpz_class value_;
};

class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigInt(const BigNat& value);  // NOLINT(google-explicit-constructor)

  static BigInt from_decimal(std::string_view text);
  static BigInt from_mpz(mpz_class value) { return BigInt(std::move(value)); }

  // -1, 0 or +1.
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] BigNat magnitude() const { return BigNat::from_mpz(abs(value_)); }
  // Throws std::domain_error if negative.
  [[nodiscard]] BigNat to_nat() const { return BigNat::from_mpz(value_); }

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator*=(std::int64_t rhs);
  BigInt operator-() const { return BigInt(mpz_class(-value_)); }

  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }
  [[nodiscard]] std::size_t digit_count() const { return magnitude().digit_count(); }
  [[nodiscard]] const mpz_class& mpz() const { return value_; }

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend BigInt operator*(BigInt lhs, std::int64_t rhs) { return lhs *= rhs; }
  friend BigInt operator*(std::int64_t lhs, BigInt rhs) { return rhs *= lhs; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit BigInt(mpz_class value) : value_(std::move(value)) {}

  mpz_class value_;
};

// Signed difference of two naturals; always representable.
BigInt difference(const BigNat& a, const BigNat& b);

}  // namespace bds
