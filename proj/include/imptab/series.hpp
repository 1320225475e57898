#pragma once

#include <gmpxx.h>

#include <vector>

#include "imptab/sequences.hpp"

namespace imptab {

// Formal power series truncated to a fixed order: coefficients of
// x^0 .. x^{order-1}, exact rationals throughout. Binary operators require
// equal orders (use truncated() to align); division requires a unit constant
// term.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  explicit PowerSeries(std::vector<mpq_class> coeffs);
  static PowerSeries constant(const mpq_class& c, int order);
  static PowerSeries x(int order);  // the monomial x (order >= 2)

  int order() const { return static_cast<int>(c_.size()); }
  const mpq_class& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  mpq_class& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  PowerSeries truncated(int order) const;  // shrink, or extend with zeros

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<mpq_class> c_;
};

PowerSeries operator-(const PowerSeries& a);
PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const mpq_class& s, const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const mpq_class& s);
PowerSeries operator/(const PowerSeries& a, const mpq_class& s);

// Square root of a rational; throws std::domain_error unless q is the square
// of a rational.
mpq_class rational_sqrt(const mpq_class& q);

// Principal square root: the unique series s with s^2 == a and
// s(0) = +sqrt(a(0)). Newton's iteration s -> (s + a/s)/2, doubling the
// number of correct coefficients per step. The constant term must be positive
// with a rational square root.
PowerSeries ps_sqrt(const PowerSeries& a);

// The sequence's generating function, built from its closed form in the
// radicals sqrt(1-8x), sqrt(1-4x), sqrt(2 + 2*sqrt(1-8x) + 8x) and
// sqrt(3 - 4x - 2*sqrt(1-8x)). Coefficients of x^0 .. x^{N-1}.
PowerSeries gf_series(SequenceId id, int N);

// Coefficients of x^1 .. x^{N-1} of gf_series(id, N). The x^0 coefficient is
// asserted to vanish. The results are exact rationals; that they reduce to
// integers is a theorem, not a rounding.
std::vector<mpq_class> gf_coefficients(SequenceId id, int N);

}  // namespace imptab
