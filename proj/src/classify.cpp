#include "fano/classify.hpp"

#include <algorithm>

#include "fano/errors.hpp"

namespace fano {

std::string_view to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::Auto: return "auto";
    case VerifyMode::Brute: return "brute";
    case VerifyMode::Certificate: return "certificate";
  }
  return "?";
}

VerifyMode verify_mode_from_string(std::string_view s) {
  if (s == "auto") return VerifyMode::Auto;
  if (s == "brute") return VerifyMode::Brute;
  if (s == "certificate") return VerifyMode::Certificate;
  throw InvalidInput("unknown verify mode '" + std::string(s) + "'");
}

std::string_view to_string(PointMethod m) {
  return m == PointMethod::Brute ? "brute" : "certificate";
}

PointMethod point_method_from_string(std::string_view s) {
  if (s == "brute") return PointMethod::Brute;
  if (s == "certificate") return PointMethod::Certificate;
  throw InvalidInput("unknown point method '" + std::string(s) + "'");
}

WpsClassification classify_wps(const Weights& w, const CertificateMap& certs,
                               const Nat& cost_cap, VerifyMode mode) {
  WpsClassification out;
  for (CoordinatePoint& pt : coordinate_singularities(w)) {
    PointReport rep{pt.index, std::move(pt.singularity)};
    const Nat& r = rep.singularity.order();
    const bool use_brute =
        mode == VerifyMode::Brute || (mode == VerifyMode::Auto && r <= cost_cap);

    if (use_brute) {
      rep.cls = classify_brute(rep.singularity, cost_cap);
      rep.method = PointMethod::Brute;
    } else {
      const auto it = certs.find(rep.index);
      if (it == certs.end()) {
        throw Undecided(rep.index, "point " + std::to_string(rep.index) + " (" +
                                       rep.singularity.str().substr(0, 64) +
                                       ") has order above the cost cap and no certificate");
      }
      const auto bound = certified_lower_bound(rep.singularity, it->second);
      if (!bound) {
        throw CertificateRejected(rep.index, std::string(to_string(it->second.kind)) +
                                                 " certificate rejected at point " +
                                                 std::to_string(rep.index));
      }
      rep.cls = *bound;
      rep.method = PointMethod::Certificate;
      // A well-formed 1/r(...) with r >= 2 is singular, so a terminal
      // certificate pins the class exactly.
      rep.lower_bound = *bound != SingularityClass::Terminal;
    }
    out.points.push_back(std::move(rep));
  }

  for (const PointReport& p : out.points) out.overall = std::min(out.overall, p.cls);
  out.overall_lower_bound =
      !out.points.empty() &&
      std::none_of(out.points.begin(), out.points.end(), [&](const PointReport& p) {
        return p.cls == out.overall && !p.lower_bound;
      });
  return out;
}

WpsReport analyze(const Weights& w, const Nat& cost_cap) {
  WpsReport rep;
  rep.weights = w.canonical_form();
  rep.well_formed = is_well_formed(rep.weights);
  if (!rep.well_formed) return rep;

  WpsReport::Details d;
  d.h = rep.weights.sum();
  d.fano_index = fano_index(rep.weights);
  d.gorenstein = is_gorenstein(rep.weights);
  d.volume = anticanonical_volume(rep.weights);
  WpsClassification c = classify_wps(rep.weights, {}, cost_cap, VerifyMode::Brute);
  d.points = std::move(c.points);
  d.overall = c.overall;
  d.overall_lower_bound = c.overall_lower_bound;
  rep.details = std::move(d);
  return rep;
}

}  // namespace fano
