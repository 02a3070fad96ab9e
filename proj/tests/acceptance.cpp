// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fano/classify.hpp"
#include "fano/families.hpp"
#include "fano/search.hpp"
#include "fano/sylvester.hpp"
#include "oracles.hpp"

using namespace fano;

namespace {

// Collects failed expectations for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Weights W(const char* csv) { return Weights::parse(csv); }

void index_goldens(Check& c) {
  const std::pair<const char*, unsigned> cases[] = {
      {"3,2,1", 6},      {"33,22,6,5", 66}, {"1743,1162,498,42,41", 3486},
      {"7,5,3,2", 17},   {"430,287,123,21,20", 881}, {"7,5,4,3", 19},
  };
  for (const auto& [w, h] : cases) c.expect(fano_index(W(w)) == Nat(h), std::string("index of ") + w);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto f = generate(FamilyKind::GorensteinCanonicalMaxIndex, n);
    c.expect(fano_index(f.weights) == sylvester(n) - Nat(1u), "gorenstein canonical index n=" + std::to_string(n));
  }
}

void volume_goldens(Check& c) {
  const std::pair<const char*, const char*> cases[] = {
      {"4,3,2,1,1,1", "10368"},
      {"28,21,14,12,6,1,1,1", "49787136"},
      {"1204,903,602,516,258,84,42,1,1,1", "340424620687872"},
      {"2,1,1,1,1", "648"},
      {"8,6,4,3,1,1,1", "331776"},
      {"140,105,84,60,15,10,4,1,1", "21781872000"},
      {"16328,12246,8164,6123,3768,1884,312,156,1,1,1", "23029100604532998144"},
      {"3,1,1,1", "72"},
      {"6,4,1,1", "72"},
  };
  for (const auto& [w, v] : cases)
    c.expect(anticanonical_volume(W(w)) == Rat(Nat::parse(v)), std::string("volume of ") + w);
}

void brute_classification(Check& c) {
  const Nat cap(1000000u);
  auto overall = [&](const char* w) {
    return classify_wps(W(w), {}, cap, VerifyMode::Brute).overall;
  };
  c.expect(overall("33,22,6,5") == SingularityClass::CanonicalNotTerminal, "33,22,6,5");
  for (const char* w : {"7,5,3,2", "430,287,123,21,20", "4,3,2,1,1,1", "28,21,14,12,6,1,1,1"})
    c.expect(is_terminal(overall(w)), std::string(w) + " terminal");
  for (const char* w : {"3,1,1,1", "6,4,1,1"}) c.expect(is_canonical(overall(w)), std::string(w) + " canonical");

  // Gorenstein flags of every record example and theorem family member with a claim.
  for (const auto& f : sporadic_table()) {
    c.expect(is_gorenstein(f.weights) == f.claim.gorenstein, f.name + " gorenstein flag");
  }
  c.expect(!is_gorenstein(W("33,22,6,5")), "33,22,6,5 not gorenstein");
  c.expect(!is_gorenstein(W("7,5,3,2")), "7,5,3,2 not gorenstein");
  c.expect(is_gorenstein(W("4,3,2,1,1,1")) && is_gorenstein(W("28,21,14,12,6,1,1,1")), "gorenstein terminal members");
}

void family_certificates(Check& c) {
  const FamilyKind kinds[] = {FamilyKind::CanonicalMaxIndex, FamilyKind::TerminalMaxIndex,
                              FamilyKind::GorensteinCanonicalMaxIndex,
                              FamilyKind::GorensteinTerminalMaxVolume};
  for (FamilyKind k : kinds) {
    for (std::size_t n = 1; n <= 12; ++n) {
      if (!in_domain(k, n)) continue;
      const auto f = generate(k, n);
      c.expect(is_well_formed(f.weights), f.name + " well-formed");
      for (const auto& pt : coordinate_singularities(f.weights)) {
        const auto it = f.certificates.find(pt.index);
        if (it == f.certificates.end()) {
          c.expect(false, f.name + " missing certificate at " + std::to_string(pt.index));
          continue;
        }
        const auto lb = certified_lower_bound(pt.singularity, it->second);
        c.expect(lb && *lb >= *f.claim.at_least, f.name + " certificate at " + std::to_string(pt.index));
      }
      if (f.predicted_index) c.expect(*f.predicted_index == f.weights.sum(), f.name + " index closed form");
      if (f.predicted_volume)
        c.expect(*f.predicted_volume == anticanonical_volume(f.weights), f.name + " volume closed form");
      if (f.claim.gorenstein) c.expect(is_gorenstein(f.weights), f.name + " gorenstein");
    }
  }
}

void oracle_equivalence(Check& c) {
  // Family members of dimension <= 4 with all weights <= 2000.
  int members = 0;
  for (FamilyKind k : kGeneratedFamilies) {
    for (std::size_t n = 1; n <= 4; ++n) {
      if (!in_domain(k, n)) continue;
      const auto f = generate(k, n);
      bool small = true;
      for (const Nat& a : f.weights.entries()) small = small && a <= Nat(2000u);
      if (!small || !is_well_formed(f.weights)) continue;
      ++members;
      for (const auto& pt : coordinate_singularities(f.weights)) {
        const auto it = f.certificates.find(pt.index);
        if (it == f.certificates.end()) continue;
        const auto lb = certified_lower_bound(pt.singularity, it->second);
        if (!lb) continue;
        const auto brute = classify_brute(pt.singularity, Nat(2000u));
        c.expect(brute >= *lb, f.name + " point " + std::to_string(pt.index));
      }
    }
  }
  c.expect(members >= 10, "too few family members: " + std::to_string(members));

  // Random singularities, every subset certificate.
  std::mt19937_64 rng(5);
  for (int done = 0; done < 1000;) {
    const auto r = std::uniform_int_distribution<std::int64_t>(2, 200)(rng);
    const auto s = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    std::vector<std::int64_t> b(s);
    for (auto& x : b) x = std::uniform_int_distribution<std::int64_t>(0, r - 1)(rng);
    if (!oracle::singularity_well_formed(r, b)) continue;
    ++done;
    const int truth = oracle::reid_tai_class(r, b);
    const CyclicQuotientSingularity q(Nat(r), std::vector<Nat>(b.begin(), b.end()));
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < s; ++i)
        if (mask & (1u << i)) subset.push_back(i);
      SubsetCertificate cert{CertificateKind::Canonical, subset, std::nullopt, Nat(0u)};
      if (check_canonical_certificate(q, cert)) c.expect(truth >= 1, q.str() + " canonical cert");
      cert.kind = CertificateKind::Terminal;
      for (std::size_t w = 0; w < s; ++w) {
        if (mask & (1u << w)) continue;
        cert.witness = w;
        if (check_terminal_certificate(q, cert)) c.expect(truth >= 2, q.str() + " terminal cert");
      }
    }
  }
}

SearchConfig search_config(std::size_t dim, ClassFilter f, std::uint64_t sum_max) {
  SearchConfig cfg;
  cfg.dim = dim;
  cfg.class_filter = f;
  cfg.objective = Objective::FanoIndex;
  cfg.sum_max = sum_max;
  cfg.worker_count = 4;
  return cfg;
}

void dim2_search(Check& c) {
  auto rec = find_extremal(search_config(2, ClassFilter::Canonical, 60));
  c.expect(rec.best_value == Rat(Nat(6u)), "canonical best 6");
  c.expect(format_achievers(rec.achievers) == "[(1,2,3)]", "canonical achievers " + format_achievers(rec.achievers));
  rec = find_extremal(search_config(2, ClassFilter::Terminal, 60));
  c.expect(rec.best_value == Rat(Nat(3u)), "terminal best 3");
  c.expect(format_achievers(rec.achievers) == "[(1,1,1)]", "terminal achievers " + format_achievers(rec.achievers));
}

void dim3_search(Check& c) {
  const auto rec = find_extremal(search_config(3, ClassFilter::Terminal, 20), true);
  c.expect(rec.best_value == Rat(Nat(19u)), "best 19");
  c.expect(format_achievers(rec.achievers) == "[(3,4,5,7)]", "achievers " + format_achievers(rec.achievers));
  bool seventeen = false;
  for (const auto& row : rec.rows)
    seventeen = seventeen || (row.weights == std::vector<std::uint64_t>{2, 3, 5, 7} && is_terminal(row.cls));
  c.expect(seventeen, "(2,3,5,7) terminal with index 17");
}

void growth(Check& c) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const Nat bound = Nat::pow(Nat(2u), 1ul << (n - 1));
    c.expect(*predicted_fano_index(FamilyKind::CanonicalMaxIndex, n) > bound, "canonical n=" + std::to_string(n));
    c.expect(generate(FamilyKind::CanonicalMaxIndex, n).weights.sum() > bound, "canonical sum n=" + std::to_string(n));
    if (n < 3) continue;
    c.expect(*predicted_fano_index(FamilyKind::TerminalMaxIndex, n) > bound, "terminal n=" + std::to_string(n));
    c.expect(generate(FamilyKind::TerminalMaxIndex, n).weights.sum() > bound, "terminal sum n=" + std::to_string(n));
  }
}

// Runs the standalone property-test binary that sits next to this one.
void property_suites(Check& c, const std::string& self) {
  const auto slash = self.find_last_of('/');
  const std::string dir = slash == std::string::npos ? "." : self.substr(0, slash);
  const std::string cmd = dir + "/test_properties > /dev/null 2>&1";
  c.expect(std::system(cmd.c_str()) == 0, cmd + " reported failures");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main(int, char** argv) {
  const std::string self = argv[0];
  const Criterion criteria[] = {
      {1, "Fano index golden values", 1, index_goldens},
      {2, "volume golden values", 1, volume_goldens},
      {3, "brute-force classification golden results", 30, brute_classification},
      {4, "family certificates, n <= 12", 30, family_certificates},
      {5, "certificate verdicts agree with brute force", 60, oracle_equivalence},
      {6, "dimension 2 search, h <= 60 [evidence within bound]", 10, dim2_search},
      {7, "dimension 3 terminal search, h <= 20 [evidence within bound]", 60, dim3_search},
      {8, "doubly exponential index growth", 1, growth},
      {9, "property suites", 120, [&self](Check& c) { property_suites(c, self); }},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_s) c.failures.push_back("took longer than the limit");
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s (%.3f s, limit %.0f s)\n", cr.id, ok ? "PASS" : "FAIL", cr.title, secs,
                cr.limit_s);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
