#include "fano/singularity.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

namespace {

void validate_indices(const CyclicQuotientSingularity& s, const SubsetCertificate& c) {
  if (!s.is_well_formed()) throw InvalidInput("singularity " + s.str() + " is not well-formed");
  const std::size_t n = s.residues().size();
  if (c.subset.empty()) throw InvalidInput("certificate subset is empty");
  std::vector<std::size_t> sorted = c.subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("certificate subset has duplicate indices");
  }
  if (sorted.back() >= n) {
    throw InvalidInput("certificate index " + std::to_string(sorted.back()) +
                       " out of range for " + std::to_string(n) + " residues");
  }
  if (c.witness) {
    if (*c.witness >= n) throw InvalidInput("certificate witness out of range");
    if (std::binary_search(sorted.begin(), sorted.end(), *c.witness)) {
      throw InvalidInput("certificate witness lies inside the subset");
    }
  }
}

// Σ_{k∈I} b_k ≡ 0 (mod r) and gcd({b_k : k∈I} ∪ {r}) = 1.
bool subset_condition(const CyclicQuotientSingularity& s, const SubsetCertificate& c) {
  const auto b = s.residues();
  Nat sum;
  Nat g = s.order();
  for (std::size_t k : c.subset) {
    sum += b[k];
    g = gcd(g, b[k]);
  }
  return (sum % s.order()).is_zero() && g.is_one();
}

}  // namespace

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::NonCanonical: return "non-canonical";
    case SingularityClass::CanonicalNotTerminal: return "canonical-not-terminal";
    case SingularityClass::Terminal: return "terminal";
    case SingularityClass::Smooth: return "smooth";
  }
  return "?";
}

SingularityClass singularity_class_from_string(std::string_view s) {
  for (auto c : {SingularityClass::NonCanonical, SingularityClass::CanonicalNotTerminal,
                 SingularityClass::Terminal, SingularityClass::Smooth}) {
    if (to_string(c) == s) return c;
  }
  throw InvalidInput("unknown singularity class '" + std::string(s) + "'");
}

std::string_view to_string(CertificateKind k) {
  return k == CertificateKind::Terminal ? "terminal" : "canonical";
}

CyclicQuotientSingularity::CyclicQuotientSingularity(Nat order, std::vector<Nat> residues)
    : r_(std::move(order)), b_(std::move(residues)) {
  if (r_.is_zero()) throw InvalidInput("cyclic quotient singularity of order 0");
  if (b_.empty()) throw InvalidInput("cyclic quotient singularity without residues");
  for (Nat& b : b_) b %= r_;
}

bool CyclicQuotientSingularity::is_well_formed() const {
  // gcd with residue i omitted, via prefix and suffix gcds.
  const std::size_t n = b_.size();
  std::vector<Nat> suffix(n + 1);
  suffix[n] = r_;
  for (std::size_t i = n; i-- > 0;) suffix[i] = gcd(suffix[i + 1], b_[i]);
  Nat prefix = r_;
  for (std::size_t i = 0; i < n; ++i) {
    if (!gcd(prefix, suffix[i + 1]).is_one()) return false;
    prefix = gcd(prefix, b_[i]);
  }
  return true;
}

std::string CyclicQuotientSingularity::str() const {
  std::ostringstream os;
  os << "1/" << r_ << "(";
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  os << ")";
  return os.str();
}

Nat reid_tai_sum(const Nat& t, const CyclicQuotientSingularity& s) {
  const Nat& r = s.order();
  if (t.is_zero() || t >= r) {
    throw InvalidInput("Reid–Tai parameter t=" + t.str() + " outside [1, " + r.str() + "-1]");
  }
  Nat sum;
  for (const Nat& b : s.residues()) sum += (t * b) % r;
  return sum;
}

SingularityClass classify_brute_u64(std::uint64_t r, std::span<const std::uint64_t> residues) {
  if (r <= 1) return SingularityClass::Smooth;
  // cur[k] tracks t * b_k mod r without multiplication.
  std::vector<std::uint64_t> cur(residues.begin(), residues.end());
  bool equality_seen = false;
  for (std::uint64_t t = 1; t < r; ++t) {
    std::uint64_t sum = 0;
    for (std::uint64_t c : cur) sum += c;
    if (sum < r) return SingularityClass::NonCanonical;
    if (sum == r) equality_seen = true;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      cur[k] += residues[k];
      if (cur[k] >= r) cur[k] -= r;
    }
  }
  return equality_seen ? SingularityClass::CanonicalNotTerminal : SingularityClass::Terminal;
}

SingularityClass classify_brute(const CyclicQuotientSingularity& s, const Nat& cost_cap) {
  const Nat& r = s.order();
  if (r > cost_cap) {
    throw CostCapExceeded("order " + r.str() + " exceeds brute-force cost cap " + cost_cap.str());
  }
  if (!s.is_well_formed()) throw InvalidInput("singularity " + s.str() + " is not well-formed");
  if (r.is_one()) return SingularityClass::Smooth;

  // The running sum stays below (s + 1) r, which must fit a machine word.
  const std::size_t n = s.residues().size();
  if (!r.fits_u64() || r.to_u64() > std::numeric_limits<std::uint64_t>::max() / (n + 1)) {
    throw CostCapExceeded("order " + r.str() + " is too large for an exhaustive Reid–Tai check");
  }
  std::vector<std::uint64_t> b;
  b.reserve(n);
  for (const Nat& x : s.residues()) b.push_back(x.to_u64());
  return classify_brute_u64(r.to_u64(), b);
}

bool check_terminal_certificate(const CyclicQuotientSingularity& s, const SubsetCertificate& c) {
  if (c.kind != CertificateKind::Terminal) throw InvalidInput("expected a terminal certificate");
  if (!c.witness) throw InvalidInput("terminal certificate without witness");
  validate_indices(s, c);
  if (!subset_condition(s, c)) return false;
  return gcd(s.residues()[*c.witness], s.order()).is_one();
}

bool check_canonical_certificate(const CyclicQuotientSingularity& s, const SubsetCertificate& c) {
  if (c.kind != CertificateKind::Canonical) throw InvalidInput("expected a canonical certificate");
  validate_indices(s, c);
  return subset_condition(s, c);
}

std::optional<SingularityClass> certified_lower_bound(const CyclicQuotientSingularity& s,
                                                      const SubsetCertificate& c) {
  if (c.kind == CertificateKind::Terminal) {
    if (check_terminal_certificate(s, c)) return SingularityClass::Terminal;
  } else if (check_canonical_certificate(s, c)) {
    return SingularityClass::CanonicalNotTerminal;
  }
  return std::nullopt;
}

}  // namespace fano
