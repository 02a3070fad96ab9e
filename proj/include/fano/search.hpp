#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/classify.hpp"
#include "fano/families.hpp"
#include "fano/rational.hpp"
#include "fano/weights.hpp"

namespace fano {

enum class ClassFilter { Canonical, Terminal, GorensteinCanonical, GorensteinTerminal };
enum class Objective { FanoIndex, Volume };

std::string_view to_string(ClassFilter f);
ClassFilter class_filter_from_string(std::string_view s);
std::string_view to_string(Objective o);
Objective objective_from_string(std::string_view s);

// Whether a classified space passes the filter. Smooth counts as terminal.
bool passes_filter(ClassFilter f, SingularityClass overall, bool gorenstein);

struct SearchConfig {
  std::size_t dim = 2;
  ClassFilter class_filter = ClassFilter::Canonical;
  Objective objective = Objective::FanoIndex;
  std::uint64_t sum_max = 3;  // bound on h = Σ weights, >= dim + 1
  Nat cost_cap = kDefaultCostCap;
  std::size_t worker_count = 1;
  std::ostream* progress = nullptr;  // shard completion lines, if set
};

// One classified tuple, as written to CSV.
struct SearchRow {
  std::vector<std::uint64_t> weights;  // non-decreasing
  std::uint64_t h = 0;
  SingularityClass cls = SingularityClass::Smooth;
  bool gorenstein = false;
  Rat volume;
};

struct SearchRecord {
  SearchConfig config;
  std::optional<Rat> best_value;  // integral for the index objective
  std::vector<Weights> achievers;  // canonical form, ascending lexicographic
  std::uint64_t tuples_enumerated = 0;
  std::uint64_t tuples_classified = 0;
  std::vector<SearchRow> rows;  // filled only when requested, in enumeration order
};

// Every well-formed non-decreasing positive tuple of length dim + 1 with sum
// <= sum_max, each exactly once, ordered by sum and then lexicographically.
// Visiting stops early when `visit` returns false.
void for_each_weight_tuple(std::size_t dim, std::uint64_t sum_max,
                           const std::function<bool(std::span<const std::uint64_t>)>& visit);

std::vector<Weights> enumerate_weight_tuples(std::size_t dim, std::uint64_t sum_max);

// Exhaustive brute-force search. InvalidInput if sum_max > cost_cap, sum_max <
// dim + 1, dim < 1 or worker_count == 0. The record does not depend on
// worker_count.
SearchRecord find_extremal(const SearchConfig& config, bool collect_rows = false);

// Achievers rendered as "(1,2,3)" with ascending entries.
std::string format_achievers(const std::vector<Weights>& achievers);

struct ConjectureEvidence {
  Rat family_value;
  Rat search_best;
  bool unbeaten = false;  // the family member attains the maximum within the bound
};

// The family's matching filter and objective.
ClassFilter family_filter(FamilyKind kind);
Objective family_objective(FamilyKind kind);

// Evidence within a bound, never a proof. InvalidInput when the family
// member's h exceeds sum_max.
ConjectureEvidence verify_conjecture(FamilyKind kind, std::size_t n, std::uint64_t sum_max,
                                     const Nat& cost_cap = kDefaultCostCap,
                                     std::size_t worker_count = 1);

}  // namespace fano
