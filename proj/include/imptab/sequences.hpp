#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace imptab {

// The named sequences. G counts all truth-table rows of all bracketings of n
// variables; the rest split those rows by connective and case:
//
//   ordinary ->      F (case 4: false rows), T1..T3 (cases 1..3)
//   type 1 (-.)      Y (case 4), D1..D3 (cases 1..3)
//   type 2 (.-)      H (case 4), K1..K3 (cases 1..3)
//
// Cat is the bracketing count itself (Cat_1 = Cat_2 = 1, Cat_3 = 2, ...); H
// coincides with it, but the two are computed by different routes (H by its
// convolution recurrence, Cat in closed form) so that the coincidence stays a
// checkable fact. Type 3 (..) needs no ids of its own: its case counts are
// T1, F, T3, T2 in case order.
enum class SequenceId { G, Cat, F, T1, T2, T3, Y, D1, D2, D3, H, K1, K2, K3 };

inline constexpr std::array<SequenceId, 14> kAllSequenceIds = {
    SequenceId::G,  SequenceId::Cat, SequenceId::F,  SequenceId::T1, SequenceId::T2,
    SequenceId::T3, SequenceId::Y,   SequenceId::D1, SequenceId::D2, SequenceId::D3,
    SequenceId::H,  SequenceId::K1,  SequenceId::K2, SequenceId::K3};

std::string_view sequence_name(SequenceId id);                      // "g", "cat", "f", "t1", ...
std::optional<SequenceId> sequence_from_name(std::string_view s);

// Number of bracketings of n variables: 1, 1, 2, 5, 14, ... (n >= 1); 0 at n = 0.
mpz_class catalan(int n);

// g_n = 2^n * catalan(n), in closed form.
mpz_class total_rows(int n);

// g computed through its convolution recurrence g_n = sum g_i g_{n-i}, as an
// independent route to the closed form above.
std::vector<mpz_class> total_rows_by_recurrence(int n_max);  // [0] unused, [n] = g_n

// The three false-count recurrences share one shape: the false rows of a
// bracketing split as (true left, true right) pulled from the connective's
// false combination. SequenceBasis runs one pass computing, for n = 1..n_max,
//   g_n   and the pairs   f/t = g - f,   y/d = g - y,   h/k = g - h,
// where f_n = sum t_i f_{n-i}, y_n = sum d_i d_{n-i}, h_n = sum h_i h_{n-i}
// (bases f_1 = y_1 = h_1 = 1). Every other id is a single convolution of
// these arrays. Index 0 is unused and holds 0.
class SequenceBasis {
 public:
  explicit SequenceBasis(int n_max);

  int n_max() const { return n_max_; }
  const std::vector<mpz_class>& g() const { return g_; }
  const std::vector<mpz_class>& f() const { return f_; }
  const std::vector<mpz_class>& t() const { return t_; }
  const std::vector<mpz_class>& y() const { return y_; }
  const std::vector<mpz_class>& d() const { return d_; }
  const std::vector<mpz_class>& h() const { return h_; }
  const std::vector<mpz_class>& k() const { return k_; }

 private:
  int n_max_;
  std::vector<mpz_class> g_, f_, t_, y_, d_, h_, k_;
};

struct SequenceTable {
  SequenceId id;
  std::vector<mpz_class> values;  // values[i] is the n = i+1 entry

  int n_max() const { return static_cast<int>(values.size()); }
  const mpz_class& at(int n) const;  // 1-based, bounds-checked
};

SequenceTable compute(SequenceId id, int n_max);
SequenceTable compute(SequenceId id, const SequenceBasis& basis);

// Checks, for 2 <= n <= n_max: t2 == f, d2 == d3, k2 == k3, h == cat, and the
// three per-connective partitions f+t1+t2+t3 == y+d1+d2+d3 == h+k1+k2+k3 == g.
struct IdentityReport {
  bool pass = true;
  std::vector<std::string> lines;  // one verdict per identity
};
IdentityReport verify_identities(int n_max);

}  // namespace imptab
