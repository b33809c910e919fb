#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tcconf {

enum class Field : std::uint8_t { Rationals, GF2 };

std::string_view to_string(Field field);

/// Exact element of Q or F_2.
///
/// Rational values are kept canonical (lowest terms, positive denominator).
/// F_2 values are stored as 0 or 1. Mixing fields in one operation throws
/// std::invalid_argument.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(long value, Field field = Field::Rationals);
  Scalar(long numerator, long denominator);
  Scalar(mpq_class value, Field field);

  static Scalar zero(Field field) { return Scalar(0, field); }
  static Scalar one(Field field) { return Scalar(1, field); }
  /// Parses "3", "-3/4", "+1". F_2 inputs are reduced mod 2 (denominator must be odd).
  static Scalar parse(std::string_view text, Field field);

  Field field() const { return field_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
  }

  /// Canonical text: "3", "-3/4". Never carries a leading '+'.
  std::string to_string() const;

 private:
  void check_field(const Scalar& rhs) const;
  void reduce_mod2();

  mpq_class value_{0};
  Field field_ = Field::Rationals;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tcconf
