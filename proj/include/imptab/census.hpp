#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

#include "imptab/formula.hpp"

namespace imptab {

// Row counts over every bracketing of n variables and every valuation.
// For n >= 2 each row lands in one of the four cases; the n = 1 truth table
// (one formula, two rows) has no top-level split, so its rows are reported
// separately rather than forced into a case.
struct Census {
  int n = 0;
  Connective connective = Connective::Imp;
  std::array<mpz_class, 4> cases{};  // cases[i] counts RowCase i+1
  mpz_class uncased_true{0};
  mpz_class uncased_false{0};
  mpz_class total{0};

  const mpz_class& count(RowCase rc) const {
    return cases[static_cast<std::size_t>(rc) - 1];
  }
};

// The brute-force census touches all 2^n * catalan(n) rows, which grows past
// 3 * 10^9 by n = 13. The default cap keeps casual calls at or below n = 10
// (about five million rows); callers may raise it to the hard cap of 12.
inline constexpr int kDefaultCensusCap = 10;
inline constexpr int kHardCensusCap = 12;

class CensusCapError : public std::runtime_error {
 public:
  CensusCapError(int n, int cap, std::string what) : std::runtime_error(std::move(what)), n_(n), cap_(cap) {}
  int n() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

Census run_census(int n, Connective c, int cap = kDefaultCensusCap);
Census per_formula_census(const Formula& f, Connective c);

// Merged truth table for all bracketings of n <= 5 variables: one row per
// valuation in descending binary order, one column per bracketing in
// enumeration order, each cell showing the row's value and (for n >= 2) its
// case tag.
std::string render_table(int n, Connective c, bool unicode = false);

}  // namespace imptab
