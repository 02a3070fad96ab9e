#include "fano/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "fano/classify.hpp"
#include "fano/errors.hpp"
#include "fano/families.hpp"
#include "fano/golden.hpp"
#include "fano/json_io.hpp"
#include "fano/search.hpp"

namespace fano {

namespace {

// Long integers are abbreviated in text output; JSON always carries them in full.
std::string abbrev(const std::string& digits) {
  constexpr std::size_t kMax = 48;
  if (digits.size() <= kMax) return digits;
  return digits.substr(0, 20) + "..." + digits.substr(digits.size() - 8) + " (" +
         std::to_string(digits.size()) + " digits)";
}

std::string abbrev(const Rat& r) {
  return r.is_integer() ? abbrev(r.num().str())
                        : abbrev(r.num().str()) + " / " + abbrev(r.den().str());
}

std::string abbrev_weights(const Weights& w) {
  const std::string full = w.name();
  if (full.size() <= 120) return full;
  std::string out = "P^" + std::to_string(w.dimension()) + "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i ? "," : "") + abbrev(w[i].str());
  }
  return out + ")";
}

Nat resolve_cost_cap(const std::string& flag) {
  if (!flag.empty()) return Nat::parse(flag);
  if (const char* env = std::getenv(kCostCapEnv); env != nullptr && *env != '\0') {
    return Nat::parse(env);
  }
  return kDefaultCostCap;
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << "\n";
}

std::string class_text(SingularityClass c, bool lower_bound) {
  std::string s(to_string(c));
  return lower_bound ? "at least " + s : s;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string weights;
  std::string cost_cap;
  bool json = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const Weights w = Weights::parse(a.weights);
  const WpsReport rep = analyze(w, resolve_cost_cap(a.cost_cap));

  if (a.json) {
    out << to_json(rep).dump(2) << "\n";
  } else {
    print_row(out, "space", abbrev_weights(rep.weights));
    print_row(out, "well_formed", rep.well_formed ? "true" : "false");
    if (rep.details) {
      const auto& d = *rep.details;
      print_row(out, "h", abbrev(d.h.str()));
      print_row(out, "fano_index", abbrev(d.fano_index.str()));
      print_row(out, "gorenstein", d.gorenstein ? "true" : "false");
      print_row(out, "volume", abbrev(d.volume));
      for (const PointReport& p : d.points) {
        print_row(out, "point[" + std::to_string(p.index) + "]",
                  p.singularity.str() + "  " + class_text(p.cls, p.lower_bound) + "  (" +
                      std::string(to_string(p.method)) + ")");
      }
      print_row(out, "overall", class_text(d.overall, d.overall_lower_bound));
    }
  }
  if (!rep.well_formed) {
    err << "error: " << rep.weights.name() << " is not well-formed\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  std::string name;
  std::size_t dim = 0;
  std::string verify = "auto";
  std::string cost_cap;
  bool json = false;
};

std::string describe(const SubsetCertificate& c) {
  std::ostringstream os;
  os << to_string(c.kind) << " I={";
  for (std::size_t i = 0; i < c.subset.size(); ++i) os << (i ? "," : "") << c.subset[i];
  os << "}";
  if (c.witness) os << " witness=" << *c.witness;
  os << " multiple=" << abbrev(c.multiple.str());
  return os.str();
}

int cmd_family(const FamilyArgs& a, std::ostream& out, std::ostream& err) {
  const FamilyKind kind = family_kind_from_string(a.name);
  const VerifyMode mode = verify_mode_from_string(a.verify);
  const Nat cap = resolve_cost_cap(a.cost_cap);
  const FamilyInstance f = generate(kind, a.dim);

  std::vector<std::string> failures;
  if (!is_well_formed(f.weights)) failures.push_back("weights are not well-formed");
  const Nat index = f.weights.sum();
  const Rat volume = anticanonical_volume(f.weights);
  const bool gorenstein = is_gorenstein(f.weights);
  if (f.predicted_index && *f.predicted_index != index) {
    failures.push_back("Fano index differs from the closed form");
  }
  if (f.predicted_volume && *f.predicted_volume != volume) {
    failures.push_back("volume differs from the closed form");
  }
  if (f.claim.gorenstein && !gorenstein) failures.push_back("space is not Gorenstein");

  const WpsClassification cls = classify_wps(f.weights, f.certificates, cap, mode);
  if (f.claim.at_least && cls.overall < *f.claim.at_least) {
    failures.push_back("overall class " + std::string(to_string(cls.overall)) + " is below " +
                       std::string(to_string(*f.claim.at_least)));
  }

  if (a.json) {
    nlohmann::json j = to_json(f);
    j["fano_index"] = index.str();
    j["volume"] = to_json(volume);
    j["gorenstein"] = gorenstein;
    nlohmann::json pts = nlohmann::json::array();
    for (const PointReport& p : cls.points) pts.push_back(to_json(p));
    j["points"] = std::move(pts);
    j["overall_class"] = std::string(to_string(cls.overall));
    j["overall_lower_bound"] = cls.overall_lower_bound;
    j["verify_mode"] = std::string(to_string(mode));
    j["verdict"] = failures.empty() ? "pass" : "fail";
    j["failures"] = failures;
    out << j.dump(2) << "\n";
  } else {
    print_row(out, "family", std::string(to_string(kind)) + " n=" + std::to_string(f.dim));
    print_row(out, "space", abbrev_weights(f.weights));
    print_row(out, "fano_index", abbrev(index.str()));
    if (f.predicted_index) print_row(out, "predicted_index", abbrev(f.predicted_index->str()));
    print_row(out, "volume", abbrev(volume));
    if (f.predicted_volume) print_row(out, "predicted_volume", abbrev(*f.predicted_volume));
    print_row(out, "gorenstein", gorenstein ? "true" : "false");
    print_row(out, "claim", f.claim.at_least ? "at least " + std::string(to_string(*f.claim.at_least)) +
                                                   (f.claim.gorenstein ? ", Gorenstein" : "")
                                             : "none");
    for (const PointReport& p : cls.points) {
      std::string line = "a=" + abbrev(p.singularity.order().str()) + "  " +
                         class_text(p.cls, p.lower_bound) + "  via " +
                         std::string(to_string(p.method));
      if (p.method == PointMethod::Certificate) {
        line += "  [" + describe(f.certificates.at(p.index)) + "]";
      }
      print_row(out, "point[" + std::to_string(p.index) + "]", line);
    }
    print_row(out, "overall", class_text(cls.overall, cls.overall_lower_bound));
    if (kind == FamilyKind::BknCanonicalMaxVolume) {
      out << "note: the volume 2(s_n - 1)^2 stated for this list is not asserted; "
             "the value above is computed from the weights\n";
    }
    print_row(out, "verdict", failures.empty() ? "PASS" : "FAIL");
  }
  for (const std::string& msg : failures) err << "verification failure: " << msg << "\n";
  return failures.empty() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::size_t dim = 2;
  std::string class_filter;
  std::string objective = "fano-index";
  std::uint64_t sum_max = 0;
  std::size_t workers = 1;
  std::string csv;
  std::string cost_cap;
  bool quiet = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.dim = a.dim;
  cfg.class_filter = class_filter_from_string(a.class_filter);
  cfg.objective = objective_from_string(a.objective);
  cfg.sum_max = a.sum_max;
  cfg.cost_cap = resolve_cost_cap(a.cost_cap);
  cfg.worker_count = a.workers;
  cfg.progress = a.quiet ? nullptr : &err;

  std::ofstream csv;
  if (!a.csv.empty()) {
    csv.open(a.csv);
    if (!csv) {
      err << "error: cannot write CSV file '" << a.csv << "'\n";
      return kExitInvalidInput;
    }
  }

  const SearchRecord rec = find_extremal(cfg, csv.is_open());

  if (csv.is_open()) {
    csv << "weights,h,class,gorenstein,fano_index,volume_num,volume_den\n";
    for (const SearchRow& row : rec.rows) {
      for (std::size_t i = row.weights.size(); i-- > 0;) {
        csv << row.weights[i] << (i ? ";" : "");
      }
      csv << "," << row.h << "," << to_string(row.cls) << "," << (row.gorenstein ? "true" : "false")
          << "," << row.h << "," << row.volume.num() << "," << row.volume.den() << "\n";
    }
    csv.flush();
    if (!csv) {
      err << "error: failed while writing '" << a.csv << "'\n";
      return kExitInvalidInput;
    }
  }

  out << "search dim=" << cfg.dim << " class=" << to_string(cfg.class_filter)
      << " objective=" << to_string(cfg.objective) << " sum_max=" << cfg.sum_max << "\n";
  out << "enumerated=" << rec.tuples_enumerated << " classified=" << rec.tuples_classified << "\n";
  out << "best=" << (rec.best_value ? rec.best_value->str() : "none")
      << " achievers=" << format_achievers(rec.achievers) << "\n";
  out << "(evidence within bound h <= " << cfg.sum_max << ", not a proof)\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify-paper

int cmd_verify_paper(std::size_t max_dim, std::ostream& out) {
  const std::vector<GoldenRow> rows = run_golden_suite(max_dim);
  std::size_t width = 5;
  for (const GoldenRow& r : rows) width = std::max(width, r.claim.size());
  std::size_t passed = 0;
  out << "golden table v" << kGoldenTableVersion << ", max dim " << max_dim << "\n";
  for (const GoldenRow& r : rows) {
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2)
        << r.claim << "expected " << abbrev(r.expected);
    if (!r.pass) out << "  computed " << abbrev(r.computed);
    out << "\n";
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << rows.size() << " rows pass\n";
  return passed == rows.size() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal Fano weighted projective spaces: exact analysis and search", "fano"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one weighted projective space");
  analyze_cmd->add_option("--weights,-w", an.weights, "Comma-separated weights, e.g. 33,22,6,5")
      ->required();
  analyze_cmd->add_option("--cost-cap", an.cost_cap, "Brute-force Reid–Tai order limit");
  analyze_cmd->add_flag("--json", an.json, "Emit JSON");

  FamilyArgs fa;
  auto* family_cmd = app.add_subcommand("family", "Generate and verify a family member");
  family_cmd->add_option("--name", fa.name, "Family id")->required();
  family_cmd->add_option("--dim", fa.dim, "Dimension n")->required();
  family_cmd->add_option("--verify", fa.verify, "auto | brute | certificate");
  family_cmd->add_option("--cost-cap", fa.cost_cap, "Brute-force Reid–Tai order limit");
  family_cmd->add_flag("--json", fa.json, "Emit JSON");

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for extremal spaces");
  search_cmd->add_option("--dim", sa.dim, "Dimension n")->required();
  search_cmd->add_option("--class", sa.class_filter,
                         "canonical | terminal | gorenstein-canonical | gorenstein-terminal")
      ->required();
  search_cmd->add_option("--objective", sa.objective, "fano-index | volume");
  search_cmd->add_option("--sum-max", sa.sum_max, "Bound on h = sum of weights")->required();
  search_cmd->add_option("--workers", sa.workers, "Worker threads");
  search_cmd->add_option("--csv", sa.csv, "Write classified tuples to this CSV file");
  search_cmd->add_option("--cost-cap", sa.cost_cap, "Brute-force Reid–Tai order limit");
  search_cmd->add_flag("--quiet", sa.quiet, "No progress on standard error");

  std::size_t max_dim = 10;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute the golden table");
  verify_cmd->add_option("--max-dim", max_dim, "Largest dimension to check");

  std::vector<std::string> argv_storage{"fano"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(an, out, err);
    if (*family_cmd) return cmd_family(fa, out, err);
    if (*search_cmd) return cmd_search(sa, out, err);
    if (*verify_cmd) return cmd_verify_paper(max_dim, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CostCapExceeded& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const Undecided& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const CertificateRejected& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitInvalidInput;
}

}  // namespace fano
