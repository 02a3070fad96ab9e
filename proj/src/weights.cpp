#include "fano/weights.hpp"

#include <algorithm>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

Weights::Weights(std::vector<Nat> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw InvalidInput("a weighted projective space needs at least 2 weights, got " +
                       std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].is_zero()) {
      throw InvalidInput("weight " + std::to_string(i) + " is zero; weights must be positive");
    }
  }
}

Weights Weights::parse(std::string_view csv) {
  std::vector<Nat> out;
  std::size_t pos = 0;
  std::size_t token_no = 0;
  while (true) {
    const std::size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    tok = first == tok.npos ? std::string_view{} : tok.substr(first, last - first + 1);
    try {
      Nat v = Nat::parse(tok);
      if (v.is_zero()) throw InvalidInput("zero weight");
      out.push_back(std::move(v));
    } catch (const InvalidInput&) {
      throw InvalidInput("invalid weight token #" + std::to_string(token_no + 1) + ": '" +
                         std::string(tok) + "' (expected a positive decimal integer)");
    }
    ++token_no;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Weights(std::move(out));
}

Nat Weights::sum() const {
  Nat s;
  for (const Nat& a : entries_) s += a;
  return s;
}

Nat Weights::product() const {
  Nat p(1u);
  for (const Nat& a : entries_) p *= a;
  return p;
}

Weights Weights::canonical_form() const {
  std::vector<Nat> sorted = entries_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return Weights(std::move(sorted));
}

std::string Weights::str(char sep) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << sep;
    os << entries_[i];
  }
  return os.str();
}

std::string Weights::name() const {
  return "P^" + std::to_string(dimension()) + "(" + str() + ")";
}

bool operator==(const Weights& a, const Weights& b) {
  return a.canonical_form().entries_ == b.canonical_form().entries_;
}

bool is_well_formed(const Weights& w) {
  const auto a = w.entries();
  const std::size_t n = a.size();
  std::vector<Nat> suffix(n + 1);  // suffix[n] = 0 is the gcd identity
  for (std::size_t i = n; i-- > 0;) suffix[i] = gcd(suffix[i + 1], a[i]);
  Nat prefix;
  for (std::size_t i = 0; i < n; ++i) {
    if (!gcd(prefix, suffix[i + 1]).is_one()) return false;
    prefix = gcd(prefix, a[i]);
  }
  return true;
}

Nat fano_index(const Weights& w) {
  if (!is_well_formed(w)) {
    throw PreconditionViolation("Fano index is only defined here for well-formed spaces; " +
                                w.name() + " is not well-formed");
  }
  return w.sum();
}

bool is_gorenstein(const Weights& w) {
  const Nat h = w.sum();
  return std::all_of(w.entries().begin(), w.entries().end(),
                     [&](const Nat& a) { return a.divides(h); });
}

Rat anticanonical_volume(const Weights& w) {
  return Rat(Nat::pow(w.sum(), w.dimension()), w.product());
}

std::vector<CoordinatePoint> coordinate_singularities(const Weights& w) {
  if (!is_well_formed(w)) {
    throw PreconditionViolation(w.name() + " is not well-formed");
  }
  std::vector<CoordinatePoint> out;
  const auto a = w.entries();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_one()) continue;
    std::vector<Nat> residues;
    residues.reserve(a.size() - 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) residues.push_back(a[j] % a[i]);
    }
    out.push_back({i, CyclicQuotientSingularity(a[i], std::move(residues))});
  }
  return out;
}

}  // namespace fano
