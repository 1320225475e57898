#include "imptab/census.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "imptab/sequences.hpp"

namespace imptab {

namespace {

Valuation valuation_from_mask(std::uint64_t mask, int n) {
  Valuation v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = (mask >> (n - 1 - i)) & 1u;  // p1 is the high bit
  return v;
}

}  // namespace

Census run_census(int n, Connective c, int cap) {
  if (n < 1) throw std::invalid_argument("run_census: n must be >= 1");
  const int effective_cap = std::min(cap, kHardCensusCap);
  if (n > effective_cap) {
    std::ostringstream msg;
    msg << "run_census: n=" << n << " exceeds the row cap (n <= " << effective_cap << "); a census at n=" << n;
    if (n <= 20)
      msg << " would touch " << total_rows(n).get_str() << " rows";
    else
      msg << " would touch more than 10^15 rows";
    if (effective_cap < kHardCensusCap && n <= kHardCensusCap)
      msg << "; raise the cap (hard limit " << kHardCensusCap << ") to run it anyway";
    else
      msg << "; use the sequence recurrences (seq) for counts at this size";
    throw CensusCapError(n, effective_cap, msg.str());
  }

  Census out;
  out.n = n;
  out.connective = c;
  if (n == 1) {
    out.uncased_true = 1;
    out.uncased_false = 1;
    out.total = 2;
    return out;
  }

  const auto formulas = enumerate_bracketings(n);
  std::array<std::uint64_t, 4> counts{};
  for (std::uint64_t mask = (std::uint64_t{1} << n); mask-- > 0;) {
    const Valuation v = valuation_from_mask(mask, n);
    const std::span<const std::uint8_t> vs(v);
    for (const auto& f : formulas)
      ++counts[static_cast<std::size_t>(top_split_case(f, c, vs)) - 1];
  }
  for (int i = 0; i < 4; ++i) {
    out.cases[i] = static_cast<unsigned long>(counts[i]);
    out.total += out.cases[i];
  }
  return out;
}

Census per_formula_census(const Formula& f, Connective c) {
  if (!f) throw std::invalid_argument("per_formula_census: null formula");
  const int n = f->leaf_count();
  Census out;
  out.n = n;
  out.connective = c;
  if (n == 1) {
    out.uncased_true = 1;
    out.uncased_false = 1;
    out.total = 2;
    return out;
  }
  std::array<std::uint64_t, 4> counts{};
  for (std::uint64_t mask = (std::uint64_t{1} << n); mask-- > 0;) {
    const Valuation v = valuation_from_mask(mask, n);
    ++counts[static_cast<std::size_t>(top_split_case(f, c, v)) - 1];
  }
  for (int i = 0; i < 4; ++i) {
    out.cases[i] = static_cast<unsigned long>(counts[i]);
    out.total += out.cases[i];
  }
  return out;
}

std::string render_table(int n, Connective c, bool unicode) {
  if (n < 1) throw std::invalid_argument("render_table: n must be >= 1");
  if (n > 5)
    throw std::invalid_argument(
        "render_table: a merged table for n > 5 is too wide to print; use run_census for the counts");

  const auto formulas = enumerate_bracketings(n);
  std::vector<std::string> headers;
  headers.reserve(formulas.size());
  for (const auto& f : formulas) headers.push_back(render(f, c, unicode));

  // Cells are "<v> #<case>" for n >= 2, bare "<v>" for the single variable.
  std::vector<std::size_t> widths;
  for (const auto& h : headers) widths.push_back(std::max<std::size_t>(h.size(), n >= 2 ? 4 : 1));

  std::ostringstream out;
  for (int i = 1; i <= n; ++i) out << (i > 1 ? " " : "") << 'p' << i;
  for (std::size_t j = 0; j < headers.size(); ++j)
    out << " | " << std::string(widths[j] - headers[j].size(), ' ') << headers[j];
  out << '\n';
  out << std::string(3 * static_cast<std::size_t>(n) - 1, '-');
  for (std::size_t j = 0; j < headers.size(); ++j) out << "-+-" << std::string(widths[j], '-');
  out << '\n';

  for (std::uint64_t mask = (std::uint64_t{1} << n); mask-- > 0;) {
    const Valuation v = valuation_from_mask(mask, n);
    for (int i = 0; i < n; ++i) out << (i > 0 ? "  " : " ") << int(v[i]);
    for (std::size_t j = 0; j < formulas.size(); ++j) {
      std::string cell;
      if (n == 1) {
        cell = v[0] ? "1" : "0";
      } else {
        const bool val = evaluate(formulas[j], c, v);
        const int rc = static_cast<int>(top_split_case(formulas[j], c, v));
        cell = std::string(val ? "1" : "0") + " #" + std::to_string(rc);
      }
      out << " | " << std::string(widths[j] - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace imptab
