#include "imptab/sequences.hpp"

#include <stdexcept>

namespace imptab {

namespace {

constexpr std::array<std::string_view, 14> kSeqNames = {
    "g", "cat", "f", "t1", "t2", "t3", "y", "d1", "d2", "d3", "h", "k1", "k2", "k3"};

// sum_{i=1}^{n-1} a_i b_{n-i}
mpz_class convolve_at(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, int n) {
  mpz_class acc = 0;
  for (int i = 1; i < n; ++i)
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
  return acc;
}

std::vector<mpz_class> convolution_table(const std::vector<mpz_class>& a,
                                         const std::vector<mpz_class>& b, int n_max) {
  std::vector<mpz_class> out(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) out[n - 1] = convolve_at(a, b, n);
  return out;
}

void check_n_max(int n_max) {
  if (n_max < 1) throw std::invalid_argument("sequence tables need n_max >= 1");
}

}  // namespace

std::string_view sequence_name(SequenceId id) { return kSeqNames[static_cast<int>(id)]; }

std::optional<SequenceId> sequence_from_name(std::string_view s) {
  for (int i = 0; i < 14; ++i)
    if (s == kSeqNames[i]) return static_cast<SequenceId>(i);
  return std::nullopt;
}

mpz_class catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  if (n == 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), 2ul * (n - 1), static_cast<unsigned long>(n - 1));
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class total_rows(int n) {
  if (n < 0) throw std::invalid_argument("total_rows: n must be >= 0");
  mpz_class r = catalan(n);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return r;
}

std::vector<mpz_class> total_rows_by_recurrence(int n_max) {
  check_n_max(n_max);
  std::vector<mpz_class> g(static_cast<std::size_t>(n_max) + 1);
  g[1] = 2;
  for (int n = 2; n <= n_max; ++n) g[n] = convolve_at(g, g, n);
  return g;
}

SequenceBasis::SequenceBasis(int n_max) : n_max_(n_max) {
  check_n_max(n_max);
  auto sized = [n_max] { return std::vector<mpz_class>(static_cast<std::size_t>(n_max) + 1); };
  g_ = sized();
  f_ = sized(); t_ = sized();
  y_ = sized(); d_ = sized();
  h_ = sized(); k_ = sized();
  for (int n = 1; n <= n_max; ++n) {
    g_[n] = total_rows(n);
    f_[n] = (n == 1) ? 1 : convolve_at(t_, f_, n);
    y_[n] = (n == 1) ? 1 : convolve_at(d_, d_, n);
    h_[n] = (n == 1) ? 1 : convolve_at(h_, h_, n);
    t_[n] = g_[n] - f_[n];
    d_[n] = g_[n] - y_[n];
    k_[n] = g_[n] - h_[n];
  }
}

const mpz_class& SequenceTable::at(int n) const {
  if (n < 1 || n > n_max()) throw std::out_of_range("SequenceTable::at: n outside the computed range");
  return values[static_cast<std::size_t>(n - 1)];
}

SequenceTable compute(SequenceId id, const SequenceBasis& basis) {
  const int n_max = basis.n_max();
  auto copy_tail = [n_max](const std::vector<mpz_class>& a) {
    return std::vector<mpz_class>(a.begin() + 1, a.begin() + 1 + n_max);
  };
  SequenceTable table{id, {}};
  switch (id) {
    case SequenceId::G: table.values = copy_tail(basis.g()); break;
    case SequenceId::F: table.values = copy_tail(basis.f()); break;
    case SequenceId::Y: table.values = copy_tail(basis.y()); break;
    case SequenceId::H: table.values = copy_tail(basis.h()); break;
    case SequenceId::Cat:
      table.values.resize(static_cast<std::size_t>(n_max));
      for (int n = 1; n <= n_max; ++n) table.values[n - 1] = catalan(n);
      break;
    case SequenceId::T1: table.values = convolution_table(basis.t(), basis.t(), n_max); break;
    case SequenceId::T2: table.values = convolution_table(basis.f(), basis.t(), n_max); break;
    case SequenceId::T3: table.values = convolution_table(basis.f(), basis.f(), n_max); break;
    case SequenceId::D1: table.values = convolution_table(basis.y(), basis.y(), n_max); break;
    case SequenceId::D2: table.values = convolution_table(basis.y(), basis.d(), n_max); break;
    case SequenceId::D3: table.values = convolution_table(basis.d(), basis.y(), n_max); break;
    case SequenceId::K1: table.values = convolution_table(basis.k(), basis.k(), n_max); break;
    case SequenceId::K2: table.values = convolution_table(basis.k(), basis.h(), n_max); break;
    case SequenceId::K3: table.values = convolution_table(basis.h(), basis.k(), n_max); break;
  }
  return table;
}

SequenceTable compute(SequenceId id, int n_max) {
  check_n_max(n_max);
  return compute(id, SequenceBasis(n_max));
}

IdentityReport verify_identities(int n_max) {
  if (n_max < 2) throw std::invalid_argument("verify_identities: n_max must be >= 2");
  SequenceBasis basis(n_max);
  std::vector<SequenceTable> tables;
  tables.reserve(kAllSequenceIds.size());
  for (SequenceId id : kAllSequenceIds) tables.push_back(compute(id, basis));
  auto tab = [&](SequenceId id) -> const SequenceTable& {
    return tables[static_cast<std::size_t>(id)];
  };

  IdentityReport report;
  auto check_equal = [&](std::string name, const SequenceTable& a, const SequenceTable& b) {
    for (int n = 2; n <= n_max; ++n) {
      if (a.at(n) != b.at(n)) {
        report.pass = false;
        report.lines.push_back(name + ": FAIL at n=" + std::to_string(n) + " (" +
                               a.at(n).get_str() + " vs " + b.at(n).get_str() + ")");
        return;
      }
    }
    report.lines.push_back(name + ": pass (2 <= n <= " + std::to_string(n_max) + ")");
  };
  auto check_partition = [&](std::string name, SequenceId c4, SequenceId c1, SequenceId c2,
                             SequenceId c3) {
    for (int n = 2; n <= n_max; ++n) {
      mpz_class sum = tab(c4).at(n) + tab(c1).at(n) + tab(c2).at(n) + tab(c3).at(n);
      if (sum != basis.g()[n]) {
        report.pass = false;
        report.lines.push_back(name + ": FAIL at n=" + std::to_string(n) + " (" + sum.get_str() +
                               " vs g=" + basis.g()[n].get_str() + ")");
        return;
      }
    }
    report.lines.push_back(name + ": pass (2 <= n <= " + std::to_string(n_max) + ")");
  };

  check_equal("t2 == f", tab(SequenceId::T2), tab(SequenceId::F));
  check_equal("d2 == d3", tab(SequenceId::D2), tab(SequenceId::D3));
  check_equal("k2 == k3", tab(SequenceId::K2), tab(SequenceId::K3));
  check_equal("h == cat", tab(SequenceId::H), tab(SequenceId::Cat));
  check_partition("f + t1 + t2 + t3 == g", SequenceId::F, SequenceId::T1, SequenceId::T2,
                  SequenceId::T3);
  check_partition("y + d1 + d2 + d3 == g", SequenceId::Y, SequenceId::D1, SequenceId::D2,
                  SequenceId::D3);
  check_partition("h + k1 + k2 + k3 == g", SequenceId::H, SequenceId::K1, SequenceId::K2,
                  SequenceId::K3);
  return report;
}

}  // namespace imptab
