#pragma once

#include <gmpxx.h>

#include <string>

namespace imptab {

// Fixed-point decimal rendering of an exact rational, round-half-even at the
// last digit. digits may be 0 (integer rounding); at most 400.
std::string decimal_string(const mpq_class& v, int digits);

// An exact element a + b*sqrt(k) of a real quadratic field, k in {2, 3, 10}
// (k == 0 marks a plain rational; b is then 0). Every limit constant in the
// analysis module lives in one of these three fields, so exact arithmetic,
// comparison, and printing never need floating point.
class QuadExt {
 public:
  QuadExt() : k_(0) {}
  QuadExt(const mpq_class& rational) : a_(rational), k_(0) {}  // implicit on purpose
  QuadExt(long rational) : a_(rational), k_(0) {}
  QuadExt(mpq_class a, mpq_class b, int k);
  static QuadExt sqrt_of(int k);  // sqrt(k), k in {2, 3, 10}

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }
  int radicand() const { return k_; }
  bool is_rational() const { return k_ == 0; }

  int sign() const;  // -1, 0, +1; exact
  QuadExt abs() const;

  friend QuadExt operator-(const QuadExt& v);
  friend QuadExt operator+(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator-(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator*(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator/(const QuadExt& u, const QuadExt& v);

  bool operator==(const QuadExt& v) const;
  bool operator!=(const QuadExt& v) const { return !(*this == v); }
  bool operator<(const QuadExt& v) const { return (*this - v).sign() < 0; }
  bool operator<=(const QuadExt& v) const { return (*this - v).sign() <= 0; }

  // Canonical symbolic form "(p + q*sqrt(k))/r" with coprime integers,
  // e.g. "(3 - sqrt(3))/6", "sqrt(2)/2", "2 + 2*sqrt(2)", "1/2".
  std::string exact_form() const;

  // Fixed-point decimal to `digits` places. Rationals round half-even;
  // irrational values are bracketed by integer square roots at increasing
  // precision until the rounded digit string is unambiguous (a tie cannot
  // occur: an irrational is never a half-ulp).
  std::string decimal(int digits) const;

 private:
  void normalize();
  mpq_class a_, b_;
  int k_ = 0;
};

}  // namespace imptab
