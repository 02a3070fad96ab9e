#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fano/nat.hpp"
#include "fano/rational.hpp"
#include "fano/singularity.hpp"

namespace fano {

// Weights a_0..a_n of the weighted projective space P^n(a_0,...,a_n).
//
// At least two entries, each >= 1. Entry order is preserved as given; two
// Weights describe the same space iff their canonical forms agree, which is
// what operator== compares.
class Weights {
 public:
  explicit Weights(std::vector<Nat> entries);

  // Comma-separated decimal list, e.g. "33,22,6,5". Whitespace around tokens is
  // ignored. A bad token is reported by position and text.
  static Weights parse(std::string_view csv);

  std::span<const Nat> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t dimension() const { return entries_.size() - 1; }
  const Nat& operator[](std::size_t i) const { return entries_[i]; }

  Nat sum() const;
  Nat product() const;

  // Entries sorted descending. Idempotent.
  Weights canonical_form() const;

  std::string str(char sep = ',') const;  // "33,22,6,5"
  std::string name() const;               // "P^3(33,22,6,5)"

  friend bool operator==(const Weights& a, const Weights& b);

 private:
  std::vector<Nat> entries_;
};

// gcd of all entries but one equals 1, for every choice of omitted entry.
bool is_well_formed(const Weights& w);

// The degree h = Σ a_i of -K = O(h). Throws PreconditionViolation unless well-formed.
Nat fano_index(const Weights& w);

// Every weight divides h.
bool is_gorenstein(const Weights& w);

// (-K)^n = h^n / Π a_i.
Rat anticanonical_volume(const Weights& w);

struct CoordinatePoint {
  std::size_t index;  // position in the weights
  CyclicQuotientSingularity singularity;
};

// 1/a_i(a_j mod a_i : j != i) for every entry a_i >= 2, in entry order.
// Throws PreconditionViolation unless well-formed.
std::vector<CoordinatePoint> coordinate_singularities(const Weights& w);

}  // namespace fano
