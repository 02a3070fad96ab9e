#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/classify.hpp"
#include "fano/nat.hpp"
#include "fano/rational.hpp"
#include "fano/weights.hpp"

namespace fano {

enum class FamilyKind {
  CanonicalMaxIndex,            // n >= 2
  TerminalMaxIndex,             // n >= 3
  GorensteinCanonicalMaxIndex,  // n >= 1
  GorensteinTerminalMaxVolume,  // odd n >= 5
  NillGorensteinMaxVolume,      // n >= 4
  KasprzykTerminalMaxVolume,    // n >= 2
  BknCanonicalMaxVolume,        // n >= 4
  Sporadic,
};

inline constexpr FamilyKind kGeneratedFamilies[] = {
    FamilyKind::CanonicalMaxIndex,           FamilyKind::TerminalMaxIndex,
    FamilyKind::GorensteinCanonicalMaxIndex, FamilyKind::GorensteinTerminalMaxVolume,
    FamilyKind::NillGorensteinMaxVolume,     FamilyKind::KasprzykTerminalMaxVolume,
    FamilyKind::BknCanonicalMaxVolume,
};

// CLI spelling: "canonical-max-index", "terminal-max-index", ...
std::string_view to_string(FamilyKind k);
FamilyKind family_kind_from_string(std::string_view s);  // InvalidInput on unknown

bool in_domain(FamilyKind k, std::size_t n);
std::size_t min_dimension(FamilyKind k);

// What the construction asserts about the space.
struct FamilyClaim {
  std::optional<SingularityClass> at_least;  // Terminal or CanonicalNotTerminal
  bool gorenstein = false;
};

struct FamilyInstance {
  FamilyKind kind = FamilyKind::Sporadic;
  std::string name;  // e.g. "terminal-max-index/4" or "P3-index-19"
  std::size_t dim = 0;
  Weights weights{std::vector<Nat>{Nat(1u), Nat(1u)}};  // descending, as in the construction
  std::optional<Nat> predicted_index;
  std::optional<Rat> predicted_volume;
  FamilyClaim claim;
  CertificateMap certificates;  // keyed by position in `weights`
};

// Explicit member of a family. InvalidInput when n is outside the domain.
FamilyInstance generate(FamilyKind kind, std::size_t n);

// Closed forms; nullopt for volume-only (resp. index-only) families.
std::optional<Nat> predicted_fano_index(FamilyKind kind, std::size_t n);
std::optional<Rat> predicted_volume(FamilyKind kind, std::size_t n);

// Fixed table of record examples. Names: P3-index-19, P3-index-17,
// P3-gorcan-vol-a, P3-gorcan-vol-b, P4-gorterm-vol, P6-gorterm-vol,
// P8-gorterm-vol, P10-gorterm-vol.
const std::vector<FamilyInstance>& sporadic_table();
const FamilyInstance& sporadic(std::string_view name);  // InvalidInput on unknown

}  // namespace fano
