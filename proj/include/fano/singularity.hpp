#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fano/nat.hpp"

namespace fano {

// Totally ordered: NonCanonical < CanonicalNotTerminal < Terminal < Smooth.
enum class SingularityClass : int {
  NonCanonical = 0,
  CanonicalNotTerminal = 1,
  Terminal = 2,
  Smooth = 3,
};

inline bool is_canonical(SingularityClass c) { return c >= SingularityClass::CanonicalNotTerminal; }
inline bool is_terminal(SingularityClass c) { return c >= SingularityClass::Terminal; }

// "non-canonical", "canonical-not-terminal", "terminal", "smooth".
std::string_view to_string(SingularityClass c);
SingularityClass singularity_class_from_string(std::string_view s);  // InvalidInput on unknown

// The quotient of affine s-space by mu_r acting with weights b_1..b_s,
// written 1/r(b_1,...,b_s). Residues are reduced mod r on construction.
class CyclicQuotientSingularity {
 public:
  // r >= 1 and at least one residue, otherwise InvalidInput.
  CyclicQuotientSingularity(Nat order, std::vector<Nat> residues);

  const Nat& order() const { return r_; }
  std::span<const Nat> residues() const { return b_; }

  // gcd(r, all residues except residue i) = 1 for every i.
  bool is_well_formed() const;

  // "1/5(2,3,2)"
  std::string str() const;

  friend bool operator==(const CyclicQuotientSingularity&, const CyclicQuotientSingularity&) = default;

 private:
  Nat r_;
  std::vector<Nat> b_;
};

// Sum over k of (t * b_k mod r). t must lie in [1, r-1], otherwise InvalidInput.
Nat reid_tai_sum(const Nat& t, const CyclicQuotientSingularity& s);

// Reid–Tai by exhausting t = 1..r-1. Throws CostCapExceeded when r > cost_cap
// or when (s + 1) r does not fit in 64 bits, and InvalidInput when s is not
// well-formed. r = 1 is Smooth.
SingularityClass classify_brute(const CyclicQuotientSingularity& s, const Nat& cost_cap);

// Native kernel behind classify_brute, for orders that fit a machine word.
// The residues must already be reduced mod r and the description well-formed.
SingularityClass classify_brute_u64(std::uint64_t r, std::span<const std::uint64_t> residues);

enum class CertificateKind { Terminal, Canonical };

std::string_view to_string(CertificateKind k);  // "terminal" / "canonical"

// Subset I of residue positions with sum(b_k, k in I) = multiple * r.
//
// A canonical certificate also needs gcd({b_k : k in I} ∪ {r}) = 1; a terminal
// one additionally names a witness i outside I with gcd(b_i, r) = 1. Passing
// certificates prove lower bounds only. `multiple` records the quotient over
// the unreduced weights and is not consulted by the checkers.
struct SubsetCertificate {
  CertificateKind kind = CertificateKind::Terminal;
  std::vector<std::size_t> subset;
  std::optional<std::size_t> witness;
  Nat multiple;

  friend bool operator==(const SubsetCertificate&, const SubsetCertificate&) = default;
};

// True means the singularity is terminal. False only means the certificate
// does not apply. Requires kind == Terminal and a witness (InvalidInput
// otherwise); indices out of range, duplicates, an empty subset or a witness
// inside the subset are InvalidInput as well.
bool check_terminal_certificate(const CyclicQuotientSingularity& s, const SubsetCertificate& c);

// True means the singularity is canonical. Requires kind == Canonical.
bool check_canonical_certificate(const CyclicQuotientSingularity& s, const SubsetCertificate& c);

// Dispatches on c.kind. Returns the proven lower bound on the class, or
// nullopt when the certificate fails its checks.
std::optional<SingularityClass> certified_lower_bound(const CyclicQuotientSingularity& s,
                                                      const SubsetCertificate& c);

}  // namespace fano
