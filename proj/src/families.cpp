#include "fano/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "fano/errors.hpp"
#include "fano/sylvester.hpp"

namespace fano {

namespace {

const Nat kOne(1u);
const Nat kTwo(2u);

Nat s(std::size_t k) { return sylvester(k); }

// Certificate at the coordinate point in position `point` of `w`. Subset and
// witness are positions in `w`; they are translated to positions in the
// residue list 1/w[point](w[j] : j != point).
SubsetCertificate certificate_at(const std::vector<Nat>& w, std::size_t point,
                                 const std::vector<std::size_t>& subset,
                                 std::optional<std::size_t> witness, CertificateKind kind) {
  auto residue_index = [point](std::size_t pos) {
    if (pos == point) throw std::logic_error("certificate refers to its own point");
    return pos > point ? pos - 1 : pos;
  };
  SubsetCertificate c;
  c.kind = kind;
  Nat sum;
  for (std::size_t pos : subset) {
    c.subset.push_back(residue_index(pos));
    sum += w[pos];
  }
  std::sort(c.subset.begin(), c.subset.end());
  if (witness) c.witness = residue_index(*witness);
  if (!w[point].divides(sum)) {
    throw std::logic_error("subset identity does not hold at point " + std::to_string(point));
  }
  c.multiple = Nat::exact_div(sum, w[point]);
  return c;
}

// Families stated as a_n, ..., a_0 keep a_j at position n - j.
struct Indexed {
  std::size_t n;
  std::size_t pos(std::size_t j) const { return n - j; }
};

FamilyInstance base(FamilyKind kind, std::size_t n, std::vector<Nat> weights) {
  FamilyInstance f;
  f.kind = kind;
  f.name = std::string(to_string(kind)) + "/" + std::to_string(n);
  f.dim = n;
  f.weights = Weights(std::move(weights));
  f.predicted_index = predicted_fano_index(kind, n);
  f.predicted_volume = predicted_volume(kind, n);
  return f;
}

// h = (S-1)(2S-3), a_i = h/s_{n-i} (2 <= i <= n), a_1 = S-1, a_0 = S-2, S = s_{n-1}.
FamilyInstance canonical_max_index(std::size_t n) {
  const Nat S = s(n - 1);
  const Nat h = (S - kOne) * (kTwo * S - Nat(3u));
  std::vector<Nat> w;
  for (std::size_t j = 0; j + 2 <= n; ++j) w.push_back(Nat::exact_div(h, s(j)));
  w.push_back(S - kOne);
  w.push_back(S - kTwo);

  FamilyInstance f = base(FamilyKind::CanonicalMaxIndex, n, w);
  f.claim = {SingularityClass::CanonicalNotTerminal, false};
  const Indexed a{n};
  // a_i | h for i >= 1, so the other weights sum to a multiple of a_i.
  for (std::size_t i = 1; i <= n; ++i) {
    if (w[a.pos(i)].is_one()) continue;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != i) others.push_back(a.pos(j));
    }
    f.certificates[a.pos(i)] =
        certificate_at(w, a.pos(i), others, std::nullopt, CertificateKind::Canonical);
  }
  // a_n + ... + a_2 = (2S-3) a_0.
  if (!w[a.pos(0)].is_one()) {
    std::vector<std::size_t> upper;
    for (std::size_t j = 2; j <= n; ++j) upper.push_back(a.pos(j));
    f.certificates[a.pos(0)] =
        certificate_at(w, a.pos(0), upper, std::nullopt, CertificateKind::Canonical);
  }
  return f;
}

// S = s_{n-1}, half = (S-1)/2:
//   a_0 = half - 1, a_1 = half, a_i = half (S-2) / s_{n-i} (2 <= i <= n-1),
//   a_n = ((S-1)(S-2)/2 - 1) / 2.
FamilyInstance terminal_max_index(std::size_t n) {
  const Nat S = s(n - 1);
  const Nat half = Nat::exact_div(S - kOne, kTwo);
  std::vector<Nat> a(n + 1);
  a[0] = half - kOne;
  a[1] = half;
  for (std::size_t i = 2; i + 1 <= n; ++i) a[i] = Nat::exact_div(half, s(n - i)) * (S - kTwo);
  a[n] = Nat::exact_div(half * (S - kTwo) - kOne, kTwo);

  std::vector<Nat> w(a.rbegin(), a.rend());
  FamilyInstance f = base(FamilyKind::TerminalMaxIndex, n, w);
  f.claim = {SingularityClass::Terminal, false};
  const Indexed x{n};

  // a_n: a_{n-1} + ... + a_2 + a_0 = a_n, witness a_1.
  {
    std::vector<std::size_t> I{x.pos(0)};
    for (std::size_t j = 2; j < n; ++j) I.push_back(x.pos(j));
    f.certificates[x.pos(n)] =
        certificate_at(w, x.pos(n), I, x.pos(1), CertificateKind::Terminal);
  }
  // a_i, 2 <= i <= n-1: a_n + ... + â_i + ... + a_1 = (s_{n-i} - 1) a_i, witness a_0.
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<std::size_t> I;
    for (std::size_t j = 1; j <= n; ++j) {
      if (j != i) I.push_back(x.pos(j));
    }
    f.certificates[x.pos(i)] =
        certificate_at(w, x.pos(i), I, x.pos(0), CertificateKind::Terminal);
  }
  // a_1: a_n + ... + a_2 = (S-3) a_1, witness a_0.
  // a_0: a_n + ... + a_2 = (S-1) a_0, witness a_1.
  std::vector<std::size_t> upper;
  for (std::size_t j = 2; j <= n; ++j) upper.push_back(x.pos(j));
  f.certificates[x.pos(1)] =
      certificate_at(w, x.pos(1), upper, x.pos(0), CertificateKind::Terminal);
  f.certificates[x.pos(0)] =
      certificate_at(w, x.pos(0), upper, x.pos(1), CertificateKind::Terminal);
  return f;
}

// h = s_n - 1, weights h/s_0, ..., h/s_{n-1}, 1.
FamilyInstance gorenstein_canonical_max_index(std::size_t n) {
  const Nat h = s(n) - kOne;
  std::vector<Nat> w;
  for (std::size_t j = 0; j < n; ++j) w.push_back(Nat::exact_div(h, s(j)));
  w.push_back(kOne);

  FamilyInstance f = base(FamilyKind::GorensteinCanonicalMaxIndex, n, w);
  f.claim = {SingularityClass::CanonicalNotTerminal, true};
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].is_one()) continue;
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < w.size(); ++q) {
      if (q != p) others.push_back(q);
    }
    f.certificates[p] = certificate_at(w, p, others, std::nullopt, CertificateKind::Canonical);
  }
  return f;
}

// n = 2k + 1, h = 2(s_k - 1). Weights, descending:
//   h/3, h/4, h/6, then h/s_m, h/(2 s_m) for m = 2..k-1, then 1, 1, 1.
// Equivalently {h/s_m : 1 <= m < k} ∪ {h/(2 s_m) : 0 <= m < k} ∪ {1, 1, 1}.
FamilyInstance gorenstein_terminal_max_volume(std::size_t n) {
  const std::size_t k = (n - 1) / 2;
  const Nat h = kTwo * (s(k) - kOne);

  std::vector<Nat> w;
  std::vector<std::size_t> full_pos(k, 0);  // full_pos[m] = position of h/s_m, m >= 1
  std::vector<std::size_t> half_pos(k, 0);  // half_pos[m] = position of h/(2 s_m)
  auto push = [&w](Nat v) {
    w.push_back(std::move(v));
    return w.size() - 1;
  };
  full_pos[1] = push(Nat::exact_div(h, s(1)));
  half_pos[0] = push(Nat::exact_div(h, kTwo * s(0)));
  half_pos[1] = push(Nat::exact_div(h, kTwo * s(1)));
  for (std::size_t m = 2; m < k; ++m) {
    full_pos[m] = push(Nat::exact_div(h, s(m)));
    half_pos[m] = push(Nat::exact_div(h, kTwo * s(m)));
  }
  const std::size_t one_a = push(kOne);
  const std::size_t one_b = push(kOne);
  const std::size_t one_c = push(kOne);

  FamilyInstance f = base(FamilyKind::GorensteinTerminalMaxVolume, n, w);
  f.claim = {SingularityClass::Terminal, true};

  // h/s_m: h/4 + Σ_{m' != m} h/(2 s_m') + 1 = (s_m - 1)/2 · h/s_m, witness 1.
  // For m = 1 this is the subset a_{2i-1} (all i), a_{n-1}, a_1 used for a_n.
  for (std::size_t m = 1; m < k; ++m) {
    std::vector<std::size_t> I{one_a};
    for (std::size_t mm = 0; mm < k; ++mm) {
      if (mm != m) I.push_back(half_pos[mm]);
    }
    f.certificates[full_pos[m]] =
        certificate_at(w, full_pos[m], I, one_b, CertificateKind::Terminal);
  }
  // h/(2 s_m): Σ_{m' != m} h/s_m' + 1 + 1 = h/2 - h/s_m (h/2 when m = 0), witness 1.
  for (std::size_t m = 0; m < k; ++m) {
    std::vector<std::size_t> I{one_a, one_b};
    for (std::size_t mm = 1; mm < k; ++mm) {
      if (mm != m) I.push_back(full_pos[mm]);
    }
    f.certificates[half_pos[m]] =
        certificate_at(w, half_pos[m], I, one_c, CertificateKind::Terminal);
  }
  return f;
}

// S = s_{n-1}: weights 2(S-1)/s_0, ..., 2(S-1)/s_{n-2}, 1, 1; h = 2(S-1).
FamilyInstance nill_gorenstein_max_volume(std::size_t n) {
  const Nat t = kTwo * (s(n - 1) - kOne);
  std::vector<Nat> w;
  for (std::size_t j = 0; j + 2 <= n; ++j) w.push_back(Nat::exact_div(t, s(j)));
  w.push_back(kOne);
  w.push_back(kOne);

  FamilyInstance f = base(FamilyKind::NillGorensteinMaxVolume, n, w);
  f.claim = {SingularityClass::CanonicalNotTerminal, true};
  for (std::size_t p = 0; p + 2 < w.size(); ++p) {
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < w.size(); ++q) {
      if (q != p) others.push_back(q);
    }
    f.certificates[p] = certificate_at(w, p, others, std::nullopt, CertificateKind::Canonical);
  }
  return f;
}

// S = s_{n-1}: weights (S-1)/s_0, ..., (S-1)/s_{n-2}, 1, 1; h = S.
FamilyInstance kasprzyk_terminal_max_volume(std::size_t n) {
  const Nat t = s(n - 1) - kOne;
  std::vector<Nat> w;
  for (std::size_t j = 0; j + 2 <= n; ++j) w.push_back(Nat::exact_div(t, s(j)));
  w.push_back(kOne);
  w.push_back(kOne);

  FamilyInstance f = base(FamilyKind::KasprzykTerminalMaxVolume, n, w);
  f.claim = {SingularityClass::Terminal, false};
  const std::size_t one_a = w.size() - 2;
  const std::size_t one_b = w.size() - 1;
  // (S-1)/s_j: the other non-unit weights plus one 1 sum to (s_j - 1) r.
  for (std::size_t p = 0; p < one_a; ++p) {
    if (w[p].is_one()) continue;
    std::vector<std::size_t> I{one_a};
    for (std::size_t q = 0; q < one_a; ++q) {
      if (q != p) I.push_back(q);
    }
    f.certificates[p] = certificate_at(w, p, I, one_b, CertificateKind::Terminal);
  }
  return f;
}

// Weights 2(s_n - 1)/s_1, ..., 2(s_n - 1)/s_{n-1}, 1, 1 as printed. No class,
// volume or certificates are asserted for this list.
FamilyInstance bkn_canonical_max_volume(std::size_t n) {
  const Nat t = kTwo * (s(n) - kOne);
  std::vector<Nat> w;
  for (std::size_t j = 1; j < n; ++j) w.push_back(Nat::exact_div(t, s(j)));
  w.push_back(kOne);
  w.push_back(kOne);
  return base(FamilyKind::BknCanonicalMaxVolume, n, w);
}

void require_domain(FamilyKind kind, std::size_t n) {
  if (kind == FamilyKind::Sporadic) {
    throw InvalidInput("sporadic examples are looked up by name, not generated");
  }
  if (!in_domain(kind, n)) {
    std::string msg = std::string(to_string(kind)) + " is not defined in dimension " +
                      std::to_string(n) + " (needs n >= " + std::to_string(min_dimension(kind));
    if (kind == FamilyKind::GorensteinTerminalMaxVolume) msg += ", n odd";
    throw InvalidInput(msg + ")");
  }
}

}  // namespace

std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::CanonicalMaxIndex: return "canonical-max-index";
    case FamilyKind::TerminalMaxIndex: return "terminal-max-index";
    case FamilyKind::GorensteinCanonicalMaxIndex: return "gorenstein-canonical-max-index";
    case FamilyKind::GorensteinTerminalMaxVolume: return "gorenstein-terminal-max-volume";
    case FamilyKind::NillGorensteinMaxVolume: return "nill-gorenstein-max-volume";
    case FamilyKind::KasprzykTerminalMaxVolume: return "kasprzyk-terminal-max-volume";
    case FamilyKind::BknCanonicalMaxVolume: return "bkn-canonical-max-volume";
    case FamilyKind::Sporadic: return "sporadic";
  }
  return "?";
}

FamilyKind family_kind_from_string(std::string_view name) {
  for (FamilyKind k : kGeneratedFamilies) {
    if (to_string(k) == name) return k;
  }
  if (name == "sporadic") return FamilyKind::Sporadic;
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

std::size_t min_dimension(FamilyKind k) {
  switch (k) {
    case FamilyKind::CanonicalMaxIndex: return 2;
    case FamilyKind::TerminalMaxIndex: return 3;
    case FamilyKind::GorensteinCanonicalMaxIndex: return 1;
    case FamilyKind::GorensteinTerminalMaxVolume: return 5;
    case FamilyKind::NillGorensteinMaxVolume: return 4;
    case FamilyKind::KasprzykTerminalMaxVolume: return 2;
    case FamilyKind::BknCanonicalMaxVolume: return 4;
    case FamilyKind::Sporadic: return 2;
  }
  return 0;
}

bool in_domain(FamilyKind k, std::size_t n) {
  if (k == FamilyKind::Sporadic) return false;
  if (n < min_dimension(k)) return false;
  if (k == FamilyKind::GorensteinTerminalMaxVolume) return n % 2 == 1;
  return true;
}

FamilyInstance generate(FamilyKind kind, std::size_t n) {
  require_domain(kind, n);
  switch (kind) {
    case FamilyKind::CanonicalMaxIndex: return canonical_max_index(n);
    case FamilyKind::TerminalMaxIndex: return terminal_max_index(n);
    case FamilyKind::GorensteinCanonicalMaxIndex: return gorenstein_canonical_max_index(n);
    case FamilyKind::GorensteinTerminalMaxVolume: return gorenstein_terminal_max_volume(n);
    case FamilyKind::NillGorensteinMaxVolume: return nill_gorenstein_max_volume(n);
    case FamilyKind::KasprzykTerminalMaxVolume: return kasprzyk_terminal_max_volume(n);
    case FamilyKind::BknCanonicalMaxVolume: return bkn_canonical_max_volume(n);
    case FamilyKind::Sporadic: break;
  }
  throw InvalidInput("unsupported family");
}

std::optional<Nat> predicted_fano_index(FamilyKind kind, std::size_t n) {
  require_domain(kind, n);
  switch (kind) {
    case FamilyKind::CanonicalMaxIndex: {
      const Nat S = s(n - 1);
      return (S - kOne) * (kTwo * S - Nat(3u));
    }
    case FamilyKind::TerminalMaxIndex: {
      const Nat S1 = s(n - 1) - kOne;
      return Nat::exact_div(S1 * S1, kTwo) - kOne;
    }
    case FamilyKind::GorensteinCanonicalMaxIndex:
      return s(n) - kOne;
    default:
      return std::nullopt;
  }
}

std::optional<Rat> predicted_volume(FamilyKind kind, std::size_t n) {
  require_domain(kind, n);
  switch (kind) {
    case FamilyKind::GorensteinTerminalMaxVolume: {
      const Nat t = s((n - 1) / 2) - kOne;
      return Rat(Nat::pow(kTwo, (n + 1) / 2) * Nat::pow(t, 4));
    }
    case FamilyKind::NillGorensteinMaxVolume: {
      const Nat t = s(n - 1) - kOne;
      return Rat(kTwo * t * t);
    }
    case FamilyKind::KasprzykTerminalMaxVolume: {
      const Nat S = s(n - 1);
      return Rat(Nat::pow(S, n), Nat::pow(S - kOne, n - 2));
    }
    default:
      return std::nullopt;
  }
}

const std::vector<FamilyInstance>& sporadic_table() {
  static const std::vector<FamilyInstance> table = [] {
    auto entry = [](std::string name, std::string weights, std::optional<Nat> index,
                    std::optional<Rat> volume, FamilyClaim claim) {
      FamilyInstance f;
      f.kind = FamilyKind::Sporadic;
      f.name = std::move(name);
      f.weights = Weights::parse(weights);
      f.dim = f.weights.dimension();
      f.predicted_index = std::move(index);
      f.predicted_volume = std::move(volume);
      f.claim = claim;
      return f;
    };
    const FamilyClaim terminal{SingularityClass::Terminal, false};
    const FamilyClaim gor_canonical{SingularityClass::CanonicalNotTerminal, true};
    const FamilyClaim gor_terminal{SingularityClass::Terminal, true};
    return std::vector<FamilyInstance>{
        // Q-Fano threefolds of index 19 and 17.
        entry("P3-index-19", "7,5,4,3", Nat(19u), std::nullopt, terminal),
        entry("P3-index-17", "7,5,3,2", Nat(17u), std::nullopt, terminal),
        // Gorenstein toric threefolds of maximal degree 72.
        entry("P3-gorcan-vol-a", "3,1,1,1", std::nullopt, Rat(Nat(72u)), gor_canonical),
        entry("P3-gorcan-vol-b", "6,4,1,1", std::nullopt, Rat(Nat(72u)), gor_canonical),
        // Largest volume Gorenstein terminal spaces in even dimension.
        entry("P4-gorterm-vol", "2,1,1,1,1", std::nullopt, Rat(Nat(648u)), gor_terminal),
        entry("P6-gorterm-vol", "8,6,4,3,1,1,1", std::nullopt, Rat(Nat(331776u)), gor_terminal),
        entry("P8-gorterm-vol", "140,105,84,60,15,10,4,1,1", std::nullopt,
              Rat(Nat(21781872000u)), gor_terminal),
        entry("P10-gorterm-vol", "16328,12246,8164,6123,3768,1884,312,156,1,1,1", std::nullopt,
              Rat(Nat::parse("23029100604532998144")), gor_terminal),
    };
  }();
  return table;
}

const FamilyInstance& sporadic(std::string_view name) {
  for (const FamilyInstance& f : sporadic_table()) {
    if (f.name == name) return f;
  }
  throw InvalidInput("unknown sporadic example '" + std::string(name) + "'");
}

}  // namespace fano
