#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>

#include "imptab/sequences.hpp"

namespace imptab {

// Positions where the published reference tables for these sequences disagree
// with the recomputed values (dropped or doubled digits, one stray page
// artifact). `printed` is the digit string as it appears in print; the
// correct value is whatever compute() yields. Emitting a value at one of
// these positions should carry a warning so the two sources can be told
// apart.
struct Misprint {
  SequenceId id;
  int n;
  const char* printed;
  const char* where;  // "reference list" or "convergence table"
};

std::span<const Misprint> known_misprints();
std::optional<Misprint> misprint_at(SequenceId id, int n);

std::string misprint_warning(const Misprint& m, const mpz_class& correct);

}  // namespace imptab
