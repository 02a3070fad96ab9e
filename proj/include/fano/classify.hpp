#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "fano/nat.hpp"
#include "fano/rational.hpp"
#include "fano/singularity.hpp"
#include "fano/weights.hpp"

namespace fano {

// 10^6: single-point checks stay well under a second and every dimension <= 4
// example of interest is covered.
inline const Nat kDefaultCostCap{1000000u};

enum class VerifyMode { Auto, Brute, Certificate };

std::string_view to_string(VerifyMode m);
VerifyMode verify_mode_from_string(std::string_view s);

enum class PointMethod { Brute, Certificate };

std::string_view to_string(PointMethod m);
PointMethod point_method_from_string(std::string_view s);

struct PointReport {
  std::size_t index = 0;  // position in the weights
  CyclicQuotientSingularity singularity{Nat(1u), {Nat(0u)}};
  SingularityClass cls = SingularityClass::Smooth;
  PointMethod method = PointMethod::Brute;
  // Set for canonical certificates, which do not rule out terminal.
  bool lower_bound = false;

  friend bool operator==(const PointReport&, const PointReport&) = default;
};

struct WpsClassification {
  std::vector<PointReport> points;
  SingularityClass overall = SingularityClass::Smooth;
  bool overall_lower_bound = false;
};

using CertificateMap = std::map<std::size_t, SubsetCertificate>;

// Classifies every coordinate point of a well-formed space.
//
// Auto: brute force when r <= cost_cap, else the certificate for that point.
// Brute: brute force everywhere (CostCapExceeded above the cap).
// Certificate: certificate everywhere.
// Throws Undecided when a point has neither route, CertificateRejected when a
// certificate that is used fails, PreconditionViolation when not well-formed.
WpsClassification classify_wps(const Weights& w, const CertificateMap& certs = {},
                               const Nat& cost_cap = kDefaultCostCap,
                               VerifyMode mode = VerifyMode::Auto);

// Full analysis record. Fields past `well_formed` are present iff well-formed.
struct WpsReport {
  Weights weights{std::vector<Nat>{Nat(1u), Nat(1u)}};
  bool well_formed = false;

  struct Details {
    Nat h;
    Nat fano_index;
    bool gorenstein = false;
    Rat volume;
    std::vector<PointReport> points;
    SingularityClass overall = SingularityClass::Smooth;
    bool overall_lower_bound = false;

    friend bool operator==(const Details&, const Details&) = default;
  };
  std::optional<Details> details;

  friend bool operator==(const WpsReport& a, const WpsReport& b) {
    return a.weights.entries().size() == b.weights.entries().size() &&
           std::equal(a.weights.entries().begin(), a.weights.entries().end(),
                      b.weights.entries().begin()) &&
           a.well_formed == b.well_formed && a.details == b.details;
  }
};

// Canonicalizes the weights, then computes everything. Classification uses
// brute force only; a point above the cap propagates CostCapExceeded.
WpsReport analyze(const Weights& w, const Nat& cost_cap = kDefaultCostCap);

}  // namespace fano
