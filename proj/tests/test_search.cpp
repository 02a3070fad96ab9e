#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/classify.hpp"
#include "fano/errors.hpp"
#include "fano/search.hpp"
#include "oracles.hpp"

using fano::ClassFilter;
using fano::FamilyKind;
using fano::Nat;
using fano::Objective;
using fano::Rat;
using fano::SearchConfig;

namespace {

std::vector<std::string> tuples(std::size_t dim, std::uint64_t sum_max) {
  std::vector<std::string> out;
  fano::for_each_weight_tuple(dim, sum_max, [&out](std::span<const std::uint64_t> t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    out.push_back(s + ")");
    return true;
  });
  return out;
}

SearchConfig config(std::size_t dim, ClassFilter f, std::uint64_t sum_max,
                    Objective o = Objective::FanoIndex, std::size_t workers = 1) {
  SearchConfig c;
  c.dim = dim;
  c.class_filter = f;
  c.objective = o;
  c.sum_max = sum_max;
  c.worker_count = workers;
  return c;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("enumeration") {
  CHECK(tuples(2, 3) == std::vector<std::string>{"(1,1,1)"});
  CHECK(tuples(2, 4) == std::vector<std::string>{"(1,1,1)", "(1,1,2)"});
  const auto six = tuples(2, 6);
  CHECK(contains(six, "(1,2,3)"));
  CHECK_FALSE(contains(six, "(2,2,2)"));
  CHECK_FALSE(contains(six, "(1,2,2)"));
  CHECK(static_cast<std::int64_t>(tuples(2, 20).size()) == oracle::count_planes(20));
  CHECK(fano::enumerate_weight_tuples(2, 20).size() == tuples(2, 20).size());
}

TEST_CASE("enumeration order and early stop") {
  const auto t = fano::enumerate_weight_tuples(3, 12);
  for (std::size_t i = 1; i < t.size(); ++i) {
    CHECK(t[i - 1].sum() <= t[i].sum());
  }
  int seen = 0;
  fano::for_each_weight_tuple(3, 30, [&seen](auto) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("find_extremal: dimension 2") {
  auto rec = find_extremal(config(2, ClassFilter::Canonical, 60));
  CHECK(rec.best_value == Rat(Nat(6u)));
  CHECK(fano::format_achievers(rec.achievers) == "[(1,2,3)]");

  rec = find_extremal(config(2, ClassFilter::Terminal, 60));
  CHECK(rec.best_value == Rat(Nat(3u)));
  CHECK(fano::format_achievers(rec.achievers) == "[(1,1,1)]");

  rec = find_extremal(config(2, ClassFilter::Terminal, 10));
  CHECK(fano::format_achievers(rec.achievers) == "[(1,1,1)]");
}

TEST_CASE("find_extremal: dimension 3") {
  auto rec = find_extremal(config(3, ClassFilter::Terminal, 20, Objective::FanoIndex, 2), true);
  CHECK(rec.best_value == Rat(Nat(19u)));
  CHECK(fano::format_achievers(rec.achievers) == "[(3,4,5,7)]");
  bool has17 = false;
  for (const auto& row : rec.rows) {
    if (row.weights == std::vector<std::uint64_t>{2, 3, 5, 7}) {
      has17 = row.h == 17 && fano::is_terminal(row.cls);
    }
  }
  CHECK(has17);

  rec = find_extremal(config(3, ClassFilter::Canonical, 66, Objective::FanoIndex, 4));
  CHECK(rec.best_value == Rat(Nat(66u)));
  bool found = false;
  for (const auto& w : rec.achievers) found = found || w.str() == "33,22,6,5";
  CHECK(found);
}

TEST_CASE("rows match the naive classifier") {
  const auto rec = find_extremal(config(3, ClassFilter::Canonical, 18), true);
  CHECK(rec.rows.size() == rec.tuples_classified);
  CHECK(rec.tuples_enumerated == rec.tuples_classified);
  for (const auto& row : rec.rows) {
    std::vector<std::int64_t> a(row.weights.begin(), row.weights.end());
    CHECK(static_cast<int>(row.cls) == oracle::wps_class(a));
  }
}

TEST_CASE("volume objective") {
  const auto rec = find_extremal(config(3, ClassFilter::GorensteinCanonical, 12, Objective::Volume));
  CHECK(rec.best_value == Rat(Nat(72u)));
  CHECK(fano::format_achievers(rec.achievers) == "[(1,1,1,3),(1,1,4,6)]");
}

TEST_CASE("determinism across worker counts") {
  for (auto f : {ClassFilter::Canonical, ClassFilter::Terminal, ClassFilter::GorensteinTerminal}) {
    const auto a = find_extremal(config(3, f, 30, Objective::FanoIndex, 1), true);
    const auto b = find_extremal(config(3, f, 30, Objective::FanoIndex, 4), true);
    CHECK(a.best_value == b.best_value);
    CHECK(fano::format_achievers(a.achievers) == fano::format_achievers(b.achievers));
    CHECK(a.tuples_enumerated == b.tuples_enumerated);
    CHECK(a.tuples_classified == b.tuples_classified);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].weights == b.rows[i].weights);
  }
}

TEST_CASE("monotone in the bound") {
  std::optional<Rat> prev;
  for (std::uint64_t m = 4; m <= 40; m += 3) {
    const auto rec = find_extremal(config(3, ClassFilter::Terminal, m));
    REQUIRE(rec.best_value);
    if (prev) CHECK(*prev <= *rec.best_value);
    prev = rec.best_value;
  }
}

TEST_CASE("gorenstein terminal achievers are terminal") {
  const auto gt = find_extremal(config(3, ClassFilter::GorensteinTerminal, 30));
  const auto all = find_extremal(config(3, ClassFilter::Terminal, 30), true);
  for (const auto& w : gt.achievers) {
    CHECK(is_terminal(classify_wps(w).overall));
    CHECK(is_gorenstein(w));
    bool pooled = false;
    for (const auto& row : all.rows) {
      std::vector<Nat> asc(row.weights.begin(), row.weights.end());
      pooled = pooled || fano::Weights(asc) == w;
    }
    CHECK(pooled);
  }
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(find_extremal(config(2, ClassFilter::Canonical, 2)), fano::InvalidInput);
  CHECK_THROWS_AS(find_extremal(config(0, ClassFilter::Canonical, 5)), fano::InvalidInput);
  CHECK_THROWS_AS(find_extremal(config(2, ClassFilter::Canonical, 10, Objective::FanoIndex, 0)),
                  fano::InvalidInput);
  auto c = config(2, ClassFilter::Canonical, 100);
  c.cost_cap = Nat(50u);
  CHECK_THROWS_AS(find_extremal(c), fano::InvalidInput);
}

TEST_CASE("verify_conjecture") {
  auto ev = fano::verify_conjecture(FamilyKind::CanonicalMaxIndex, 2, 60);
  CHECK(ev.family_value == Rat(Nat(6u)));
  CHECK(ev.search_best == Rat(Nat(6u)));
  CHECK(ev.unbeaten);

  ev = fano::verify_conjecture(FamilyKind::TerminalMaxIndex, 3, 17);
  CHECK(ev.family_value == Rat(Nat(17u)));
  CHECK(ev.search_best == Rat(Nat(17u)));
  CHECK(ev.unbeaten);

  ev = fano::verify_conjecture(FamilyKind::TerminalMaxIndex, 3, 20);
  CHECK(ev.search_best == Rat(Nat(19u)));
  CHECK_FALSE(ev.unbeaten);

  ev = fano::verify_conjecture(FamilyKind::GorensteinCanonicalMaxIndex, 2, 60, fano::kDefaultCostCap, 3);
  CHECK(ev.unbeaten);

  CHECK_THROWS_AS(fano::verify_conjecture(FamilyKind::CanonicalMaxIndex, 3, 60), fano::InvalidInput);
}
