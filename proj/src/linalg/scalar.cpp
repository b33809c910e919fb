#include "tcconf/scalar.hpp"

#include <stdexcept>

namespace tcconf {

std::string_view to_string(Field field) {
  return field == Field::Rationals ? "Q" : "F2";
}

Scalar::Scalar(long value, Field field) : value_(value), field_(field) {
  if (field_ == Field::GF2) reduce_mod2();
}

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value, Field field) : value_(std::move(value)), field_(field) {
  value_.canonicalize();
  if (field_ == Field::GF2) reduce_mod2();
}

Scalar Scalar::parse(std::string_view text, Field field) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("zero denominator");
  q.canonicalize();
  return Scalar(q, field);
}

void Scalar::reduce_mod2() {
  mpz_class den = value_.get_den();
  if (mpz_even_p(den.get_mpz_t())) {
    throw std::domain_error("value has no image in F2 (even denominator)");
  }
  mpz_class num = value_.get_num();
  value_ = mpz_odd_p(num.get_mpz_t()) ? 1 : 0;
}

void Scalar::check_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) throw std::invalid_argument("field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_ == Field::Rationals) r.value_ = -r.value_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_field(rhs);
  if (field_ == Field::GF2) {
    value_ = (value_ == rhs.value_) ? 0 : 1;
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_field(rhs);
  if (field_ == Field::GF2) {
    value_ = (value_ == rhs.value_) ? 0 : 1;
  } else {
    value_ -= rhs.value_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_field(rhs);
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_field(rhs);
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Scalar Scalar::inverse() const { return Scalar::one(field_) / *this; }

std::string Scalar::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace tcconf
