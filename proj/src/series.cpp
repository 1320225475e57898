#include "imptab/series.hpp"

#include <stdexcept>
#include <utility>

namespace imptab {

namespace {

void check_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("power series arithmetic needs equal truncation orders");
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  if (order < 1) throw std::invalid_argument("PowerSeries: order must be >= 1");
  c_.resize(static_cast<std::size_t>(order));
}

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("PowerSeries: order must be >= 1");
}

PowerSeries PowerSeries::constant(const mpq_class& c, int order) {
  PowerSeries s(order);
  s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::x(int order) {
  if (order < 2) throw std::invalid_argument("PowerSeries::x: order must be >= 2");
  PowerSeries s(order);
  s.c_[1] = 1;
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order < 1) throw std::invalid_argument("PowerSeries::truncated: order must be >= 1");
  PowerSeries s(order);
  for (int i = 0; i < std::min(order, this->order()); ++i) s.c_[i] = c_[i];
  return s;
}

PowerSeries operator-(const PowerSeries& a) {
  PowerSeries r(a.order());
  for (int i = 0; i < a.order(); ++i) r[i] = -a[i];
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  PowerSeries r(a.order());
  for (int i = 0; i < a.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  PowerSeries r(a.order());
  for (int i = 0; i < a.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  PowerSeries r(a.order());
  for (int i = 0; i < a.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < a.order(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  if (b[0] == 0)
    throw std::domain_error("power series division needs a nonzero constant term in the divisor");
  PowerSeries q(a.order());
  for (int k = 0; k < a.order(); ++k) {
    mpq_class acc = a[k];
    for (int i = 1; i <= k; ++i) acc -= b[i] * q[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

PowerSeries operator*(const mpq_class& s, const PowerSeries& a) {
  PowerSeries r(a.order());
  for (int i = 0; i < a.order(); ++i) r[i] = s * a[i];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const mpq_class& s) { return s * a; }

PowerSeries operator/(const PowerSeries& a, const mpq_class& s) {
  if (s == 0) throw std::domain_error("power series division by zero scalar");
  PowerSeries r(a.order());
  for (int i = 0; i < a.order(); ++i) r[i] = a[i] / s;
  return r;
}

mpq_class rational_sqrt(const mpq_class& q) {
  if (q < 0) throw std::domain_error("rational_sqrt: negative argument");
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    throw std::domain_error("rational_sqrt: argument has no rational square root");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

PowerSeries ps_sqrt(const PowerSeries& a) {
  const int N = a.order();
  if (a[0] == 0) throw std::domain_error("ps_sqrt: constant term must be nonzero");
  if (a[0] < 0) throw std::domain_error("ps_sqrt: constant term must be positive");
  PowerSeries s = PowerSeries::constant(rational_sqrt(a[0]), 1);
  int prec = 1;
  while (prec < N) {
    prec = std::min(2 * prec, N);
    const PowerSeries ap = a.truncated(prec);
    const PowerSeries sp = s.truncated(prec);
    s = (sp + ap / sp) / mpq_class(2);
  }
  return s;
}

PowerSeries gf_series(SequenceId id, int N) {
  if (N < 2) throw std::invalid_argument("gf_series: truncation order must be >= 2");
  using PS = PowerSeries;
  const PS one = PS::constant(1, N);
  const PS x = PS::x(N);
  auto cst = [N](long v) { return PS::constant(v, N); };
  auto r8 = [&] { return ps_sqrt(one - 8 * x); };
  auto r4 = [&] { return ps_sqrt(one - 4 * x); };

  switch (id) {
    case SequenceId::G:
      return (one - r8()) / 2;
    case SequenceId::Cat:
    case SequenceId::H:
      return (one - r4()) / 2;
    case SequenceId::F: {
      const PS s8 = r8();
      const PS inner = ps_sqrt(cst(2) + 2 * s8 + 8 * x);
      return (-one - s8 + inner) / 4;
    }
    case SequenceId::T2: {
      const PS s8 = r8();
      const PS inner = ps_sqrt(cst(2) + 2 * s8 + 8 * x);
      return (-one - s8 + inner - 4 * x) / 4;
    }
    case SequenceId::T3: {
      const PS s8 = r8();
      const PS inner = ps_sqrt(cst(2) + 2 * s8 + 8 * x);
      return (cst(2) + 2 * s8 - inner - s8 * inner) / 8;
    }
    case SequenceId::T1: {
      const PS s8 = r8();
      const PS inner = ps_sqrt(cst(2) + 2 * s8 + 8 * x);
      return (cst(6) - 2 * s8 - 3 * inner + s8 * inner) / 8;
    }
    case SequenceId::Y: {
      const PS s8 = r8();
      const PS yr = ps_sqrt(cst(3) - 4 * x - 2 * s8);
      return (cst(2) - s8 - yr) / 2;
    }
    case SequenceId::D2:
    case SequenceId::D3: {
      const PS s8 = r8();
      const PS yr = ps_sqrt(cst(3) - 4 * x - 2 * s8);
      return (cst(-5) + 3 * s8 + 3 * yr + 4 * x - s8 * yr) / 4;
    }
    case SequenceId::D1: {
      const PS s8 = r8();
      const PS yr = ps_sqrt(cst(3) - 4 * x - 2 * s8);
      return (cst(4) - 3 * s8 - 2 * yr - 6 * x + s8 * yr) / 2;
    }
    case SequenceId::K2:
    case SequenceId::K3: {
      const PS s8 = r8();
      const PS s4 = r4();
      return (-one - s8 + s8 * s4 + s4 + 4 * x) / 4;
    }
    case SequenceId::K1:
      return (one - 6 * x - r4() * r8()) / 2;
  }
  throw std::logic_error("gf_series: unhandled id");
}

std::vector<mpq_class> gf_coefficients(SequenceId id, int N) {
  const PowerSeries s = gf_series(id, N);
  if (s[0] != 0) throw std::logic_error("gf_coefficients: closed form has a nonzero x^0 term");
  std::vector<mpq_class> out;
  out.reserve(static_cast<std::size_t>(N - 1));
  for (int i = 1; i < N; ++i) out.push_back(s[i]);
  return out;
}

}  // namespace imptab
