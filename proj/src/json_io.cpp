#include "fano/json_io.hpp"

#include "fano/errors.hpp"

namespace fano {

using nlohmann::json;

namespace {

json nat_list(std::span<const Nat> xs) {
  json a = json::array();
  for (const Nat& x : xs) a.push_back(x.str());
  return a;
}

std::vector<Nat> nat_list_from_json(const json& j) {
  std::vector<Nat> out;
  for (const json& x : j) out.push_back(nat_from_json(x));
  return out;
}

}  // namespace

json to_json(const Nat& n) { return n.str(); }

Nat nat_from_json(const json& j) {
  if (!j.is_string()) throw InvalidInput("expected a decimal string, got " + j.dump());
  return Nat::parse(j.get<std::string>());
}

json to_json(const Rat& r) { return {{"num", r.num().str()}, {"den", r.den().str()}}; }

Rat rat_from_json(const json& j) {
  return Rat(nat_from_json(j.at("num")), nat_from_json(j.at("den")));
}

json to_json(const SubsetCertificate& c) {
  json j;
  j["kind"] = std::string(to_string(c.kind));
  j["subset"] = c.subset;
  if (c.witness) j["witness"] = *c.witness;
  j["multiple"] = c.multiple.str();
  return j;
}

SubsetCertificate certificate_from_json(const json& j) {
  SubsetCertificate c;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "terminal") {
    c.kind = CertificateKind::Terminal;
  } else if (kind == "canonical") {
    c.kind = CertificateKind::Canonical;
  } else {
    throw InvalidInput("unknown certificate kind '" + kind + "'");
  }
  c.subset = j.at("subset").get<std::vector<std::size_t>>();
  if (j.contains("witness")) c.witness = j.at("witness").get<std::size_t>();
  if (j.contains("multiple")) c.multiple = nat_from_json(j.at("multiple"));
  return c;
}

json to_json(const PointReport& p) {
  return {
      {"index", p.index},
      {"order", p.singularity.order().str()},
      {"residues", nat_list(p.singularity.residues())},
      {"class", std::string(to_string(p.cls))},
      {"method", std::string(to_string(p.method))},
      {"lower_bound", p.lower_bound},
  };
}

PointReport point_report_from_json(const json& j) {
  PointReport p;
  p.index = j.at("index").get<std::size_t>();
  p.singularity = CyclicQuotientSingularity(nat_from_json(j.at("order")),
                                            nat_list_from_json(j.at("residues")));
  p.cls = singularity_class_from_string(j.at("class").get<std::string>());
  p.method = point_method_from_string(j.at("method").get<std::string>());
  p.lower_bound = j.at("lower_bound").get<bool>();
  return p;
}

json to_json(const WpsReport& r) {
  json j;
  j["name"] = r.weights.name();
  j["weights"] = nat_list(r.weights.entries());
  j["well_formed"] = r.well_formed;
  if (r.details) {
    const auto& d = *r.details;
    j["h"] = d.h.str();
    j["fano_index"] = d.fano_index.str();
    j["gorenstein"] = d.gorenstein;
    j["volume"] = to_json(d.volume);
    json pts = json::array();
    for (const PointReport& p : d.points) pts.push_back(to_json(p));
    j["points"] = std::move(pts);
    j["overall_class"] = std::string(to_string(d.overall));
    j["overall_lower_bound"] = d.overall_lower_bound;
  }
  return j;
}

WpsReport wps_report_from_json(const json& j) {
  WpsReport r;
  r.weights = Weights(nat_list_from_json(j.at("weights")));
  r.well_formed = j.at("well_formed").get<bool>();
  if (j.contains("h")) {
    WpsReport::Details d;
    d.h = nat_from_json(j.at("h"));
    d.fano_index = nat_from_json(j.at("fano_index"));
    d.gorenstein = j.at("gorenstein").get<bool>();
    d.volume = rat_from_json(j.at("volume"));
    for (const json& p : j.at("points")) d.points.push_back(point_report_from_json(p));
    d.overall = singularity_class_from_string(j.at("overall_class").get<std::string>());
    d.overall_lower_bound = j.at("overall_lower_bound").get<bool>();
    r.details = std::move(d);
  }
  return r;
}

json to_json(const FamilyInstance& f) {
  json j;
  j["family"] = std::string(to_string(f.kind));
  j["name"] = f.name;
  j["dim"] = f.dim;
  j["space"] = f.weights.name();
  j["weights"] = nat_list(f.weights.entries());
  if (f.predicted_index) j["predicted_index"] = f.predicted_index->str();
  if (f.predicted_volume) j["predicted_volume"] = to_json(*f.predicted_volume);
  json claim;
  claim["at_least"] = f.claim.at_least ? json(std::string(to_string(*f.claim.at_least))) : json();
  claim["gorenstein"] = f.claim.gorenstein;
  j["claim"] = std::move(claim);
  json certs = json::object();
  for (const auto& [point, c] : f.certificates) certs[std::to_string(point)] = to_json(c);
  j["certificates"] = std::move(certs);
  return j;
}

json to_json(const SearchRecord& r) {
  json j;
  j["dim"] = r.config.dim;
  j["class"] = std::string(to_string(r.config.class_filter));
  j["objective"] = std::string(to_string(r.config.objective));
  j["sum_max"] = std::to_string(r.config.sum_max);
  j["best_value"] = r.best_value ? to_json(*r.best_value) : json();
  json ach = json::array();
  for (const Weights& w : r.achievers) ach.push_back(nat_list(w.entries()));
  j["achievers"] = std::move(ach);
  j["tuples_enumerated"] = std::to_string(r.tuples_enumerated);
  j["tuples_classified"] = std::to_string(r.tuples_classified);
  j["label"] = "evidence within bound";
  return j;
}

}  // namespace fano
