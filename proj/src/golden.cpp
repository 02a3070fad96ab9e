#include "fano/golden.hpp"

#include <functional>
#include <sstream>

#include "fano/classify.hpp"
#include "fano/errors.hpp"
#include "fano/families.hpp"
#include "fano/search.hpp"
#include "fano/sylvester.hpp"

namespace fano {

namespace {

class Table {
 public:
  explicit Table(std::size_t max_dim) : max_dim_(max_dim) {}

  void add(std::string claim, std::string expected, const std::function<std::string()>& compute) {
    GoldenRow row{std::move(claim), std::move(expected), {}, false};
    try {
      row.computed = compute();
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
    }
    row.pass = row.computed == row.expected;
    rows_.push_back(std::move(row));
  }

  bool fits(std::size_t dim) const { return dim <= max_dim_; }
  std::size_t max_dim() const { return max_dim_; }
  std::vector<GoldenRow> take() { return std::move(rows_); }

 private:
  std::size_t max_dim_;
  std::vector<GoldenRow> rows_;
};

std::string tag(const std::string& weights) { return Weights::parse(weights).name(); }

void index_row(Table& t, const std::string& weights, const std::string& expected) {
  const Weights w = Weights::parse(weights);
  if (!t.fits(w.dimension())) return;
  t.add(tag(weights) + " Fano index", expected, [w] { return fano_index(w).str(); });
}

void volume_row(Table& t, const std::string& weights, const std::string& expected) {
  const Weights w = Weights::parse(weights);
  if (!t.fits(w.dimension())) return;
  t.add(tag(weights) + " volume", expected, [w] { return anticanonical_volume(w).str(); });
}

void class_row(Table& t, const std::string& weights, const std::string& expected) {
  const Weights w = Weights::parse(weights);
  if (!t.fits(w.dimension())) return;
  t.add(tag(weights) + " class (brute force)", expected, [w] {
    const auto c = classify_wps(w, {}, kDefaultCostCap, VerifyMode::Brute);
    return std::string(to_string(c.overall));
  });
}

void gorenstein_row(Table& t, const std::string& weights, bool expected) {
  const Weights w = Weights::parse(weights);
  if (!t.fits(w.dimension())) return;
  t.add(tag(weights) + " Gorenstein", expected ? "true" : "false",
        [w] { return is_gorenstein(w) ? "true" : "false"; });
}

void family_weights_row(Table& t, FamilyKind k, std::size_t n, const std::string& expected) {
  if (!t.fits(n)) return;
  t.add(std::string(to_string(k)) + " n=" + std::to_string(n) + " weights", expected,
        [k, n] { return generate(k, n).weights.str(); });
}

std::string certificate_verdict(const FamilyInstance& f) {
  for (const CoordinatePoint& pt : coordinate_singularities(f.weights)) {
    const auto it = f.certificates.find(pt.index);
    if (it == f.certificates.end()) return "missing at point " + std::to_string(pt.index);
    if (!certified_lower_bound(pt.singularity, it->second)) {
      return "rejected at point " + std::to_string(pt.index);
    }
  }
  return "all pass";
}

}  // namespace

std::vector<GoldenRow> run_golden_suite(std::size_t max_dim) {
  if (max_dim < 4) {
    throw InvalidInput("verify-paper needs --max-dim >= 4, got " + std::to_string(max_dim));
  }
  Table t(max_dim);

  t.add("Sylvester s_0..s_4", "2,3,7,43,1807", [] {
    std::ostringstream os;
    for (std::size_t k = 0; k < 5; ++k) os << (k ? "," : "") << sylvester(k);
    return os.str();
  });

  // Largest canonical index in dimensions 2, 3, 4.
  index_row(t, "3,2,1", "6");
  index_row(t, "33,22,6,5", "66");
  index_row(t, "1743,1162,498,42,41", "3486");
  // Q-Fano threefolds of index 17 and 19; largest terminal index in dimension 4.
  index_row(t, "7,5,3,2", "17");
  index_row(t, "7,5,4,3", "19");
  index_row(t, "430,287,123,21,20", "881");

  family_weights_row(t, FamilyKind::CanonicalMaxIndex, 2, "3,2,1");
  family_weights_row(t, FamilyKind::CanonicalMaxIndex, 3, "33,22,6,5");
  family_weights_row(t, FamilyKind::CanonicalMaxIndex, 4, "1743,1162,498,42,41");
  family_weights_row(t, FamilyKind::TerminalMaxIndex, 3, "7,5,3,2");
  family_weights_row(t, FamilyKind::TerminalMaxIndex, 4, "430,287,123,21,20");
  family_weights_row(t, FamilyKind::GorensteinTerminalMaxVolume, 5, "4,3,2,1,1,1");
  family_weights_row(t, FamilyKind::GorensteinTerminalMaxVolume, 7, "28,21,14,12,6,1,1,1");
  family_weights_row(t, FamilyKind::GorensteinTerminalMaxVolume, 9,
                     "1204,903,602,516,258,84,42,1,1,1");

  // Volumes: P^2, Gorenstein toric threefolds of degree 72, Gorenstein
  // terminal spaces of largest volume.
  volume_row(t, "1,1,1", "9");
  volume_row(t, "3,1,1,1", "72");
  volume_row(t, "6,4,1,1", "72");
  volume_row(t, "2,1,1,1,1", "648");
  volume_row(t, "4,3,2,1,1,1", "10368");
  volume_row(t, "8,6,4,3,1,1,1", "331776");
  volume_row(t, "28,21,14,12,6,1,1,1", "49787136");
  volume_row(t, "140,105,84,60,15,10,4,1,1", "21781872000");
  volume_row(t, "1204,903,602,516,258,84,42,1,1,1", "340424620687872");
  volume_row(t, "16328,12246,8164,6123,3768,1884,312,156,1,1,1", "23029100604532998144");

  class_row(t, "33,22,6,5", "canonical-not-terminal");
  class_row(t, "7,5,3,2", "terminal");
  class_row(t, "7,5,4,3", "terminal");
  class_row(t, "430,287,123,21,20", "terminal");
  class_row(t, "4,3,2,1,1,1", "terminal");
  class_row(t, "28,21,14,12,6,1,1,1", "terminal");
  class_row(t, "3,1,1,1", "canonical-not-terminal");
  class_row(t, "6,4,1,1", "canonical-not-terminal");
  gorenstein_row(t, "3,2,1", true);
  gorenstein_row(t, "7,5,3,2", false);
  gorenstein_row(t, "3,1,1,1", true);
  gorenstein_row(t, "6,4,1,1", true);
  gorenstein_row(t, "4,3,2,1,1,1", true);
  gorenstein_row(t, "28,21,14,12,6,1,1,1", true);
  gorenstein_row(t, "1204,903,602,516,258,84,42,1,1,1", true);

  // Closed forms against Σ weights and h^n / Π a_i, and certificates, for
  // every dimension in range.
  for (FamilyKind k : kGeneratedFamilies) {
    if (k == FamilyKind::BknCanonicalMaxVolume) continue;
    for (std::size_t n = min_dimension(k); n <= max_dim; ++n) {
      if (!in_domain(k, n)) continue;
      const std::string label = std::string(to_string(k)) + " n=" + std::to_string(n);
      if (auto idx = predicted_fano_index(k, n)) {
        t.add(label + " index closed form", idx->str(),
              [k, n] { return fano_index(generate(k, n).weights).str(); });
      }
      if (auto vol = predicted_volume(k, n)) {
        t.add(label + " volume closed form", vol->str(),
              [k, n] { return anticanonical_volume(generate(k, n).weights).str(); });
      }
      t.add(label + " certificates", "all pass",
            [k, n] { return certificate_verdict(generate(k, n)); });
    }
  }
  // Gorenstein canonical index = s_n - 1.
  for (std::size_t n = 1; n <= max_dim; ++n) {
    t.add("gorenstein-canonical-max-index n=" + std::to_string(n) + " index = s_n - 1",
          (sylvester(n) - Nat(1u)).str(), [n] {
            return fano_index(generate(FamilyKind::GorensteinCanonicalMaxIndex, n).weights).str();
          });
  }

  // Index > 2^(2^(n-1)).
  for (FamilyKind k : {FamilyKind::CanonicalMaxIndex, FamilyKind::TerminalMaxIndex}) {
    for (std::size_t n = min_dimension(k); n <= max_dim; ++n) {
      t.add(std::string(to_string(k)) + " n=" + std::to_string(n) + " index > 2^(2^(n-1))",
            "true", [k, n] {
              const Nat bound = Nat::pow(Nat(2u), 1ul << (n - 1));
              return *predicted_fano_index(k, n) > bound ? "true" : "false";
            });
    }
  }

  // Bounded exhaustive searches: evidence within bound.
  auto search_row = [&t](std::string claim, std::size_t dim, ClassFilter f, std::uint64_t sum_max,
                         std::string expected) {
    t.add(std::move(claim) + " [evidence within bound]", std::move(expected), [=] {
      SearchConfig cfg;
      cfg.dim = dim;
      cfg.class_filter = f;
      cfg.objective = Objective::FanoIndex;
      cfg.sum_max = sum_max;
      const SearchRecord rec = find_extremal(cfg);
      return "best=" + rec.best_value->str() + " achievers=" + format_achievers(rec.achievers);
    });
  };
  search_row("dim 2 canonical max index, h <= 60", 2, ClassFilter::Canonical, 60,
             "best=6 achievers=[(1,2,3)]");
  search_row("dim 2 terminal max index, h <= 60", 2, ClassFilter::Terminal, 60,
             "best=3 achievers=[(1,1,1)]");
  search_row("dim 3 terminal max index, h <= 20", 3, ClassFilter::Terminal, 20,
             "best=19 achievers=[(3,4,5,7)]");

  return t.take();
}

}  // namespace fano
