#include "imptab/quadratic.hpp"

#include <stdexcept>

namespace imptab {

namespace {

mpz_class pow10(int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10u, static_cast<unsigned long>(e));
  return r;
}

void check_digits(int digits) {
  if (digits < 0 || digits > 400)
    throw std::invalid_argument("decimal rendering supports 0 to 400 digits");
}

// Digit string of the non-negative integer scaled, with the decimal point
// `digits` places from the right; sign prepended unless the result is zero.
std::string place_point(bool negative, const mpz_class& scaled, int digits) {
  std::string s = scaled.get_str();
  std::string out;
  if (negative && scaled != 0) out += '-';
  if (digits == 0) return out + s;
  if (s.size() <= static_cast<std::size_t>(digits))
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  out += s.substr(0, s.size() - digits);
  out += '.';
  out += s.substr(s.size() - digits);
  return out;
}

bool valid_radicand(int k) { return k == 2 || k == 3 || k == 10; }

}  // namespace

std::string decimal_string(const mpq_class& v, int digits) {
  check_digits(digits);
  mpz_class num = v.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  num *= pow10(digits);
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
  const mpz_class twice = 2 * r;
  const int c = cmp(twice, v.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return place_point(negative, q, digits);
}

QuadExt::QuadExt(mpq_class a, mpq_class b, int k) : a_(std::move(a)), b_(std::move(b)), k_(k) {
  if (b_ != 0 && !valid_radicand(k_))
    throw std::invalid_argument("QuadExt: radicand must be 2, 3 or 10");
  normalize();
}

QuadExt QuadExt::sqrt_of(int k) {
  if (!valid_radicand(k)) throw std::invalid_argument("QuadExt::sqrt_of: radicand must be 2, 3 or 10");
  return QuadExt(0, 1, k);
}

void QuadExt::normalize() {
  if (b_ == 0) k_ = 0;
}

int QuadExt::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with k b^2; sqrt(k) is irrational, so the
  // difference cannot vanish.
  const int c = cmp(a_ * a_, k_ * b_ * b_);
  return c > 0 ? sa : sb;
}

QuadExt QuadExt::abs() const { return sign() < 0 ? -*this : *this; }

namespace {

int merged_radicand(const QuadExt& u, const QuadExt& v) {
  const int ku = u.radicand(), kv = v.radicand();
  if (ku != 0 && kv != 0 && ku != kv)
    throw std::domain_error("QuadExt: cannot combine values from distinct quadratic fields");
  return ku != 0 ? ku : kv;
}

}  // namespace

QuadExt operator-(const QuadExt& v) { return QuadExt(-v.a_, -v.b_, v.k_ ? v.k_ : 2); }

QuadExt operator+(const QuadExt& u, const QuadExt& v) {
  const int k = merged_radicand(u, v);
  return QuadExt(u.a_ + v.a_, u.b_ + v.b_, k ? k : 2);
}

QuadExt operator-(const QuadExt& u, const QuadExt& v) { return u + (-v); }

QuadExt operator*(const QuadExt& u, const QuadExt& v) {
  const int k = merged_radicand(u, v);
  return QuadExt(u.a_ * v.a_ + mpq_class(k) * u.b_ * v.b_, u.a_ * v.b_ + u.b_ * v.a_, k ? k : 2);
}

QuadExt operator/(const QuadExt& u, const QuadExt& v) {
  const int k = merged_radicand(u, v);
  const mpq_class norm = v.a_ * v.a_ - mpq_class(k) * v.b_ * v.b_;
  if (norm == 0) throw std::domain_error("QuadExt: division by zero");
  const QuadExt conj(v.a_ / norm, -v.b_ / norm, k ? k : 2);
  return u * conj;
}

bool QuadExt::operator==(const QuadExt& v) const {
  if (b_ == 0 && v.b_ == 0) return a_ == v.a_;
  return a_ == v.a_ && b_ == v.b_ && k_ == v.k_;
}

std::string QuadExt::exact_form() const {
  if (k_ == 0) return a_.get_str();
  // Clear denominators: value = (p + q*sqrt(k)) / r with gcd(p, q, r) == 1.
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a_.get_den().get_mpz_t(), b_.get_den().get_mpz_t());
  mpz_class p = a_.get_num() * (r / a_.get_den());
  mpz_class q = b_.get_num() * (r / b_.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
  p /= g;
  q /= g;
  r /= g;

  const std::string root = "sqrt(" + std::to_string(k_) + ")";
  auto radical_term = [&](const mpz_class& coeff) {
    if (coeff == 1) return root;
    return coeff.get_str() + "*" + root;
  };

  std::string body;
  bool parenthesise = false;
  if (p == 0) {
    body = (q < 0 ? "-" : "") + radical_term(::abs(q));
  } else if (q > 0 && p < 0) {
    body = radical_term(q) + " - " + mpz_class(-p).get_str();
    parenthesise = true;
  } else if (p > 0 && q < 0) {
    body = p.get_str() + " - " + radical_term(-q);
    parenthesise = true;
  } else if (p > 0) {
    body = p.get_str() + " + " + radical_term(q);
    parenthesise = true;
  } else {
    body = "-(" + mpz_class(-p).get_str() + " + " + radical_term(-q) + ")";
  }
  if (r == 1) return body;
  if (parenthesise) body = "(" + body + ")";
  return body + "/" + r.get_str();
}

std::string QuadExt::decimal(int digits) const {
  check_digits(digits);
  if (k_ == 0) return decimal_string(a_, digits);
  const mpz_class scale = pow10(digits);
  for (int m = digits + 10; m <= 1 << 14; m *= 2) {
    // sqrt(k) lies strictly between s/10^m and (s+1)/10^m: k*10^(2m) is
    // never a perfect square for k in {2, 3, 10}.
    const mpz_class tenm = pow10(m);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), mpz_class(k_ * tenm * tenm).get_mpz_t());
    mpq_class root_lo(s, tenm), root_hi(s + 1, tenm);
    root_lo.canonicalize();
    root_hi.canonicalize();
    const mpq_class vlo = a_ + b_ * (b_ > 0 ? root_lo : root_hi);
    const mpq_class vhi = a_ + b_ * (b_ > 0 ? root_hi : root_lo);
    // Nearest integer to value*10^digits, decided once both bounds agree.
    auto nearest = [&](const mpq_class& v) {
      const mpq_class shifted = v * scale + mpq_class(1, 2);
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
      return fl;
    };
    const mpz_class lo = nearest(vlo), hi = nearest(vhi);
    if (lo == hi) {
      const bool negative = lo < 0;
      return place_point(negative, negative ? mpz_class(-lo) : lo, digits);
    }
  }
  throw std::logic_error("QuadExt::decimal: failed to isolate the value");
}

}  // namespace imptab
