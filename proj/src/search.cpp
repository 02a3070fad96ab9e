#include "fano/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "fano/errors.hpp"

namespace fano {

namespace {

using Tuple = std::vector<std::uint64_t>;

bool well_formed_native(std::span<const std::uint64_t> x) {
  const std::size_t n = x.size();
  std::vector<std::uint64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = std::gcd(suffix[i + 1], x[i]);
  std::uint64_t prefix = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::gcd(prefix, suffix[i + 1]) != 1) return false;
    prefix = std::gcd(prefix, x[i]);
  }
  return true;
}

// Non-decreasing tuples with x[0] == first and Σ x == h, in lexicographic order.
template <typename Visit>
bool tuples_with_sum(std::size_t len, std::uint64_t first, std::uint64_t h, Tuple& x,
                     Visit&& visit) {
  x.assign(len, 0);
  x[0] = first;
  if (first * len > h) return true;
  // Iterative depth-first fill of positions 1..len-1.
  auto fill = [&](auto&& self, std::size_t pos, std::uint64_t remaining) -> bool {
    const std::size_t left = len - pos;
    if (left == 1) {
      if (remaining < x[pos - 1]) return true;
      x[pos] = remaining;
      return visit(std::span<const std::uint64_t>(x));
    }
    for (std::uint64_t v = x[pos - 1]; v * left <= remaining; ++v) {
      x[pos] = v;
      if (!self(self, pos + 1, remaining - v)) return false;
    }
    return true;
  };
  if (len == 1) {
    return first == h ? visit(std::span<const std::uint64_t>(x)) : true;
  }
  return fill(fill, 1, h - first);
}

SingularityClass classify_native(std::span<const std::uint64_t> x) {
  SingularityClass overall = SingularityClass::Smooth;
  std::vector<std::uint64_t> residues(x.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint64_t r = x[i];
    if (r == 1) continue;
    std::size_t k = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) residues[k++] = x[j] % r;
    }
    overall = std::min(overall, classify_brute_u64(r, residues));
    if (overall == SingularityClass::NonCanonical) break;
  }
  return overall;
}

Rat native_volume(std::span<const std::uint64_t> x, std::uint64_t h) {
  Nat prod(1u);
  for (std::uint64_t a : x) prod *= Nat(a);
  return Rat(Nat::pow(Nat(h), x.size() - 1), prod);
}

bool gorenstein_native(std::span<const std::uint64_t> x, std::uint64_t h) {
  return std::all_of(x.begin(), x.end(), [h](std::uint64_t a) { return h % a == 0; });
}

bool needs_gorenstein(ClassFilter f) {
  return f == ClassFilter::GorensteinCanonical || f == ClassFilter::GorensteinTerminal;
}

struct ShardResult {
  std::optional<Rat> best;
  std::vector<Tuple> achievers;
  std::uint64_t enumerated = 0;
  std::uint64_t classified = 0;
  std::vector<SearchRow> rows;
};

ShardResult run_shard(const SearchConfig& cfg, std::uint64_t first, bool collect_rows) {
  ShardResult out;
  const std::size_t len = cfg.dim + 1;
  Tuple x;
  for (std::uint64_t h = first * len; h <= cfg.sum_max; ++h) {
    tuples_with_sum(len, first, h, x, [&](std::span<const std::uint64_t> t) {
      if (!well_formed_native(t)) return true;
      ++out.enumerated;
      const bool gor = gorenstein_native(t, h);
      if (needs_gorenstein(cfg.class_filter) && !gor) return true;
      ++out.classified;
      const SingularityClass cls = classify_native(t);
      std::optional<Rat> volume;
      if (collect_rows || cfg.objective == Objective::Volume) volume = native_volume(t, h);
      if (collect_rows) out.rows.push_back({Tuple(t.begin(), t.end()), h, cls, gor, *volume});
      if (!passes_filter(cfg.class_filter, cls, gor)) return true;

      Rat value = cfg.objective == Objective::FanoIndex ? Rat(Nat(h)) : *volume;
      if (!out.best || value > *out.best) {
        out.best = std::move(value);
        out.achievers.clear();
        out.achievers.emplace_back(t.begin(), t.end());
      } else if (value == *out.best) {
        out.achievers.emplace_back(t.begin(), t.end());
      }
      return true;
    });
  }
  return out;
}

Weights to_weights(const Tuple& t) {
  std::vector<Nat> e;
  e.reserve(t.size());
  for (std::uint64_t a : t) e.emplace_back(a);
  return Weights(std::move(e)).canonical_form();
}

void validate(const SearchConfig& cfg) {
  if (cfg.dim < 1) throw InvalidInput("search dimension must be >= 1");
  if (cfg.worker_count == 0) throw InvalidInput("worker count must be positive");
  if (cfg.sum_max < cfg.dim + 1) {
    throw InvalidInput("sum_max " + std::to_string(cfg.sum_max) + " is below dim + 1 = " +
                       std::to_string(cfg.dim + 1));
  }
  if (Nat(cfg.sum_max) > cfg.cost_cap) {
    throw InvalidInput("sum_max " + std::to_string(cfg.sum_max) + " exceeds the cost cap " +
                       cfg.cost_cap.str() + "; brute-force classification would be refused");
  }
}

}  // namespace

std::string_view to_string(ClassFilter f) {
  switch (f) {
    case ClassFilter::Canonical: return "canonical";
    case ClassFilter::Terminal: return "terminal";
    case ClassFilter::GorensteinCanonical: return "gorenstein-canonical";
    case ClassFilter::GorensteinTerminal: return "gorenstein-terminal";
  }
  return "?";
}

ClassFilter class_filter_from_string(std::string_view s) {
  for (auto f : {ClassFilter::Canonical, ClassFilter::Terminal, ClassFilter::GorensteinCanonical,
                 ClassFilter::GorensteinTerminal}) {
    if (to_string(f) == s) return f;
  }
  throw InvalidInput("unknown class filter '" + std::string(s) + "'");
}

std::string_view to_string(Objective o) {
  return o == Objective::FanoIndex ? "fano-index" : "volume";
}

Objective objective_from_string(std::string_view s) {
  if (s == "fano-index" || s == "index") return Objective::FanoIndex;
  if (s == "volume") return Objective::Volume;
  throw InvalidInput("unknown objective '" + std::string(s) + "'");
}

bool passes_filter(ClassFilter f, SingularityClass overall, bool gorenstein) {
  switch (f) {
    case ClassFilter::Canonical: return is_canonical(overall);
    case ClassFilter::Terminal: return is_terminal(overall);
    case ClassFilter::GorensteinCanonical: return gorenstein && is_canonical(overall);
    case ClassFilter::GorensteinTerminal: return gorenstein && is_terminal(overall);
  }
  return false;
}

void for_each_weight_tuple(std::size_t dim, std::uint64_t sum_max,
                           const std::function<bool(std::span<const std::uint64_t>)>& visit) {
  const std::size_t len = dim + 1;
  Tuple x;
  for (std::uint64_t h = len; h <= sum_max; ++h) {
    for (std::uint64_t first = 1; first * len <= h; ++first) {
      const bool go_on = tuples_with_sum(len, first, h, x, [&](std::span<const std::uint64_t> t) {
        return !well_formed_native(t) || visit(t);
      });
      if (!go_on) return;
    }
  }
}

std::vector<Weights> enumerate_weight_tuples(std::size_t dim, std::uint64_t sum_max) {
  std::vector<Weights> out;
  for_each_weight_tuple(dim, sum_max, [&](std::span<const std::uint64_t> t) {
    std::vector<Nat> e(t.begin(), t.end());
    out.emplace_back(std::move(e));
    return true;
  });
  return out;
}

SearchRecord find_extremal(const SearchConfig& config, bool collect_rows) {
  validate(config);
  const std::uint64_t shard_count = config.sum_max / (config.dim + 1);
  std::vector<ShardResult> shards(shard_count);

  std::atomic<std::uint64_t> next{0};
  std::mutex progress_mu;
  std::uint64_t done = 0;
  auto worker = [&] {
    for (std::uint64_t i = next++; i < shard_count; i = next++) {
      shards[i] = run_shard(config, i + 1, collect_rows);
      if (config.progress) {
        std::lock_guard lock(progress_mu);
        *config.progress << "[search] smallest weight " << (i + 1) << " done (" << ++done << "/"
                         << shard_count << ")\n";
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(config.worker_count, shard_count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  SearchRecord rec;
  rec.config = config;
  rec.config.progress = nullptr;
  std::vector<Tuple> achievers;
  for (ShardResult& s : shards) {
    rec.tuples_enumerated += s.enumerated;
    rec.tuples_classified += s.classified;
    if (!s.best) continue;
    if (!rec.best_value || *s.best > *rec.best_value) {
      rec.best_value = s.best;
      achievers = std::move(s.achievers);
    } else if (*s.best == *rec.best_value) {
      achievers.insert(achievers.end(), s.achievers.begin(), s.achievers.end());
    }
  }
  std::sort(achievers.begin(), achievers.end());
  for (const Tuple& t : achievers) rec.achievers.push_back(to_weights(t));

  if (collect_rows) {
    for (ShardResult& s : shards) {
      std::move(s.rows.begin(), s.rows.end(), std::back_inserter(rec.rows));
    }
    std::sort(rec.rows.begin(), rec.rows.end(), [](const SearchRow& a, const SearchRow& b) {
      return a.h != b.h ? a.h < b.h : a.weights < b.weights;
    });
  }
  return rec;
}

std::string format_achievers(const std::vector<Weights>& achievers) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < achievers.size(); ++i) {
    if (i) os << ",";
    std::vector<Nat> asc(achievers[i].entries().begin(), achievers[i].entries().end());
    std::sort(asc.begin(), asc.end());
    os << "(";
    for (std::size_t j = 0; j < asc.size(); ++j) os << (j ? "," : "") << asc[j];
    os << ")";
  }
  os << "]";
  return os.str();
}

ClassFilter family_filter(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::TerminalMaxIndex:
    case FamilyKind::KasprzykTerminalMaxVolume: return ClassFilter::Terminal;
    case FamilyKind::GorensteinCanonicalMaxIndex:
    case FamilyKind::NillGorensteinMaxVolume: return ClassFilter::GorensteinCanonical;
    case FamilyKind::GorensteinTerminalMaxVolume: return ClassFilter::GorensteinTerminal;
    default: return ClassFilter::Canonical;
  }
}

Objective family_objective(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CanonicalMaxIndex:
    case FamilyKind::TerminalMaxIndex:
    case FamilyKind::GorensteinCanonicalMaxIndex: return Objective::FanoIndex;
    default: return Objective::Volume;
  }
}

ConjectureEvidence verify_conjecture(FamilyKind kind, std::size_t n, std::uint64_t sum_max,
                                     const Nat& cost_cap, std::size_t worker_count) {
  const FamilyInstance f = generate(kind, n);
  const Nat h = f.weights.sum();
  if (h > Nat(sum_max)) {
    throw InvalidInput("family member " + f.weights.name() + " has h = " + h.str() +
                       " above the search bound " + std::to_string(sum_max));
  }
  SearchConfig cfg;
  cfg.dim = n;
  cfg.class_filter = family_filter(kind);
  cfg.objective = family_objective(kind);
  cfg.sum_max = sum_max;
  cfg.cost_cap = cost_cap;
  cfg.worker_count = worker_count;
  const SearchRecord rec = find_extremal(cfg);

  ConjectureEvidence ev;
  ev.family_value = cfg.objective == Objective::FanoIndex ? Rat(h) : anticanonical_volume(f.weights);
  ev.search_best = rec.best_value.value_or(Rat());
  ev.unbeaten = rec.best_value && *rec.best_value == ev.family_value;
  return ev;
}

}  // namespace fano
