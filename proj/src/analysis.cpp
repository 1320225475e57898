#include "imptab/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace imptab {

namespace {

QuadExt q3(long an, long ad, long bn, long bd) { return QuadExt(mpq_class(an, ad), mpq_class(bn, bd), 3); }
QuadExt q10(long an, long ad, long bn, long bd) { return QuadExt(mpq_class(an, ad), mpq_class(bn, bd), 10); }
QuadExt q2(long an, long ad, long bn, long bd) { return QuadExt(mpq_class(an, ad), mpq_class(bn, bd), 2); }

// value of id_n / g_n as n -> infinity
QuadExt per_total_limit(SequenceId id) {
  switch (id) {
    case SequenceId::G: return QuadExt(1);
    case SequenceId::Cat:
    case SequenceId::H: return QuadExt(0);
    case SequenceId::F:
    case SequenceId::T2: return q3(1, 2, -1, 6);    // (3 - sqrt(3))/6
    case SequenceId::T1: return QuadExt(mpq_class(1, 2));
    case SequenceId::T3: return q3(-1, 2, 1, 3);    // (2*sqrt(3) - 3)/6
    case SequenceId::Y: return q10(1, 1, -1, 5);    // (5 - sqrt(10))/5
    case SequenceId::D1: return q10(3, 1, -9, 10);  // (30 - 9*sqrt(10))/10
    case SequenceId::D2:
    case SequenceId::D3: return q10(-3, 2, 11, 20); // (11*sqrt(10) - 30)/20
    case SequenceId::K1: return q2(0, 1, 1, 2);     // sqrt(2)/2
    case SequenceId::K2:
    case SequenceId::K3: return q2(1, 2, -1, 4);    // (2 - sqrt(2))/4
  }
  throw std::logic_error("per_total_limit: unhandled id");
}

std::vector<LimitConstant> build_constants() {
  std::vector<LimitConstant> out;
  auto add = [&out](SequenceId num, SequenceId den, QuadExt value) {
    LimitConstant c;
    c.name = std::string(sequence_name(num)) + "/" + std::string(sequence_name(den));
    c.numerator = num;
    c.denominator = den;
    c.value = value;
    c.exact_form = value.exact_form();
    c.decimal30 = value.decimal(30);
    out.push_back(std::move(c));
  };

  for (SequenceId id : kAllSequenceIds)
    if (id != SequenceId::G) add(id, SequenceId::G, per_total_limit(id));

  // Within-connective quotients, each recorded in its published exact form.
  add(SequenceId::T3, SequenceId::T2, q3(-1, 2, 1, 2));    // (sqrt(3) - 1)/2
  add(SequenceId::T2, SequenceId::T3, q3(1, 1, 1, 1));     // 1 + sqrt(3)
  add(SequenceId::T3, SequenceId::T1, q3(-1, 1, 2, 3));    // (2*sqrt(3) - 3)/3
  add(SequenceId::T1, SequenceId::T3, q3(3, 1, 2, 1));     // 3 + 2*sqrt(3)
  add(SequenceId::T2, SequenceId::T1, q3(1, 1, -1, 3));    // (3 - sqrt(3))/3
  add(SequenceId::T1, SequenceId::T2, q3(3, 2, 1, 2));     // (3 + sqrt(3))/2
  add(SequenceId::D1, SequenceId::D3, q10(-18, 31, 12, 31)); // (12*sqrt(10) - 18)/31
  add(SequenceId::D3, SequenceId::D1, q10(1, 2, 1, 3));    // (3 + 2*sqrt(10))/6
  add(SequenceId::D1, SequenceId::Y, q10(2, 1, -1, 2));    // (4 - sqrt(10))/2
  add(SequenceId::Y, SequenceId::D1, q10(4, 3, 1, 3));     // (4 + sqrt(10))/3
  add(SequenceId::Y, SequenceId::D3, q10(16, 31, 10, 31)); // (16 + 10*sqrt(10))/31
  add(SequenceId::D3, SequenceId::Y, q10(-2, 3, 5, 12));   // (5*sqrt(10) - 8)/12
  add(SequenceId::K2, SequenceId::K1, q2(-1, 2, 1, 2));    // (sqrt(2) - 1)/2
  add(SequenceId::K1, SequenceId::K2, q2(2, 1, 2, 1));     // 2 + 2*sqrt(2)
  return out;
}

}  // namespace

QuadExt limit_constant(SequenceId num, SequenceId den) {
  if (den == SequenceId::G) return per_total_limit(num);
  const QuadExt d = per_total_limit(den);
  if (d.sign() == 0)
    throw std::domain_error("limit_constant: " + std::string(sequence_name(den)) +
                            " vanishes against g, so ratios against it have no finite limit here");
  return per_total_limit(num) / d;
}

const std::vector<LimitConstant>& limit_constants() {
  static const std::vector<LimitConstant> table = build_constants();
  return table;
}

const LimitConstant* find_limit_constant(SequenceId num, SequenceId den) {
  for (const LimitConstant& c : limit_constants())
    if (c.numerator == num && c.denominator == den) return &c;
  return nullptr;
}

mpq_class ratio_exact(const SequenceTable& num, const SequenceTable& den, int n) {
  const mpz_class& d = den.at(n);
  if (d == 0) throw std::domain_error("ratio_exact: zero denominator entry");
  mpq_class r(num.at(n), d);
  r.canonicalize();
  return r;
}

std::string ratio_decimal(const SequenceTable& num, const SequenceTable& den, int n, int digits) {
  return decimal_string(ratio_exact(num, den, n), digits);
}

std::string ratio_decimal(SequenceId id, int n, int digits) {
  SequenceBasis basis(n);
  return ratio_decimal(compute(id, basis), compute(SequenceId::G, basis), n, digits);
}

ConvergenceReport convergence_check(SequenceId num, SequenceId den, const QuadExt& limit,
                                    std::span<const int> probes) {
  if (probes.empty()) throw std::invalid_argument("convergence_check: need at least one probe");
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (probes[i] < 2) throw std::invalid_argument("convergence_check: probes must be >= 2");
    if (i > 0 && probes[i] <= probes[i - 1])
      throw std::invalid_argument("convergence_check: probes must be strictly ascending");
  }

  ConvergenceReport report;
  report.numerator = num;
  report.denominator = den;
  report.probes.assign(probes.begin(), probes.end());

  SequenceBasis basis(probes.back());
  const SequenceTable tn = compute(num, basis);
  const SequenceTable td = compute(den, basis);

  std::optional<QuadExt> prev;
  for (int n : probes) {
    const QuadExt err = (QuadExt(ratio_exact(tn, td, n)) - limit).abs();
    report.errors.push_back(err.decimal(12));
    if (prev && !(err < *prev)) {
      report.pass = false;
      report.failure = "error did not decrease strictly at n=" + std::to_string(n);
    }
    if (!(err < QuadExt(mpq_class(5, n)))) {
      report.pass = false;
      report.failure = "error at n=" + std::to_string(n) + " exceeds the envelope 5/n";
    }
    prev = err;
  }
  return report;
}

ConvergenceReport convergence_check(SequenceId id, const QuadExt& limit,
                                    std::span<const int> probes) {
  return convergence_check(id, SequenceId::G, limit, probes);
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

ParityReport parity_check(SequenceId id, int n_max) {
  if (n_max < 2) throw std::invalid_argument("parity_check: n_max must be >= 2");
  ParityReport report;
  report.id = id;
  report.n_max = n_max;
  const SequenceTable table = compute(id, n_max);
  const int start = (table.at(1) == 0) ? 2 : 1;
  for (int n = start; n <= n_max; ++n) {
    const bool odd = mpz_odd_p(table.at(n).get_mpz_t());
    if (odd != is_power_of_two(n)) {
      report.pass = false;
      report.counterexample = n;
      break;
    }
  }
  return report;
}

}  // namespace imptab
