#include "imptab/misprints.hpp"

#include <sstream>

namespace imptab {

namespace {

constexpr Misprint kMisprints[] = {
    {SequenceId::G, 5, "428", "convergence table"},
    {SequenceId::F, 8, "424595", "convergence table"},
    {SequenceId::K1, 6, "514", "reference list"},
    {SequenceId::Y, 10, "819238", "reference list"},
    {SequenceId::D3, 14, "13+2916689516", "reference list"},
    {SequenceId::D1, 19, "8683418448780", "reference list"},
    {SequenceId::D1, 23, "3118472460044221368", "reference list"},
    {SequenceId::K3, 19, "0632122219688", "reference list"},
    {SequenceId::K3, 25, "684174390763667239", "reference list"},
};

}  // namespace

std::span<const Misprint> known_misprints() { return kMisprints; }

std::optional<Misprint> misprint_at(SequenceId id, int n) {
  for (const Misprint& m : kMisprints)
    if (m.id == id && m.n == n) return m;
  return std::nullopt;
}

std::string misprint_warning(const Misprint& m, const mpz_class& correct) {
  std::ostringstream out;
  out << "warning: " << sequence_name(m.id) << "(" << m.n << ") = " << correct.get_str()
      << " corrects a misprint in the published " << m.where << ", which shows \"" << m.printed
      << "\"";
  return out.str();
}

}  // namespace imptab
