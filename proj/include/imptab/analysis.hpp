#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imptab/quadratic.hpp"
#include "imptab/sequences.hpp"

namespace imptab {

// A proven limit of a sequence ratio as n grows, with its exact value in a
// quadratic field. The per-total family divides each of the 13 case
// sequences by g; the pairwise family covers the within-connective ratios
// (t-family, d-family and k-family quotients).
struct LimitConstant {
  std::string name;  // "f/g", "t3/t2", ...
  SequenceId numerator;
  SequenceId denominator;
  QuadExt value;
  std::string exact_form;
  std::string decimal30;
};

// Exact limit of num/den. Per-total limits are tabulated; other pairs are
// formed as quotients (throws std::domain_error when the denominator's
// own limit against g is zero, as for h).
QuadExt limit_constant(SequenceId num, SequenceId den = SequenceId::G);

// The 13 per-total constants followed by the 14 pairwise ones, in a fixed
// order. The pairwise values are recorded independently of the per-total
// table; that the two agree (t3/t2 == (t3/g)/(t2/g) and so on) is one of the
// acceptance checks.
const std::vector<LimitConstant>& limit_constants();
const LimitConstant* find_limit_constant(SequenceId num, SequenceId den);

mpq_class ratio_exact(const SequenceTable& num, const SequenceTable& den, int n);
std::string ratio_decimal(const SequenceTable& num, const SequenceTable& den, int n, int digits);
std::string ratio_decimal(SequenceId id, int n, int digits);  // id over g

// Checks |num_n/den_n - limit| at the given probes (ascending, >= 2): the
// errors must decrease strictly and stay below the envelope 5/n. All
// comparisons are exact.
struct ConvergenceReport {
  SequenceId numerator;
  SequenceId denominator;
  bool pass = true;
  std::vector<int> probes;
  std::vector<std::string> errors;  // |ratio - limit| per probe, 12 digits
  std::string failure;              // empty when pass
};
ConvergenceReport convergence_check(SequenceId num, SequenceId den, const QuadExt& limit,
                                    std::span<const int> probes);
ConvergenceReport convergence_check(SequenceId id, const QuadExt& limit,
                                    std::span<const int> probes);  // id over g

// The parity law: the sequence value is odd exactly when n is a power of
// two. Sequences starting 0 at n = 1 are checked from n = 2; the rest from
// n = 1 (2^0 counts as a power of two). Not meaningful for g, which is even
// everywhere.
struct ParityReport {
  SequenceId id;
  int n_max;
  bool pass = true;
  std::optional<int> counterexample;
};
ParityReport parity_check(SequenceId id, int n_max);

bool is_power_of_two(int n);

}  // namespace imptab
