#include "grr/census.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "grr/coset_comb.hpp"
#include "grr/perm_algorithms.hpp"

namespace grr {

namespace {

constexpr std::uint64_t kChunk = 4096;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/// Runs body(chunk) for chunk in [0, chunks) on `jobs` threads and returns
/// the per-chunk results in chunk order.
template <typename F>
std::vector<CensusCounts> run_chunks(std::uint64_t chunks, int jobs, F&& body) {
  std::vector<CensusCounts> out(chunks);
  if (jobs <= 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) out[c] = body(c);
    return out;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) out[c] = body(c);
    });
  for (auto& t : pool) t.join();
  return out;
}

CensusCounts tally(const GroupTable& g, Mask s) {
  const SetClass k = classify_set(g, s);
  return {k.regular, k.normal, !k.regular};
}

std::vector<Mask> mode_atoms(const GroupTable& g, Mode mode) {
  if (mode == Mode::graph) return inverse_closed_atoms(g, g.all());
  std::vector<Mask> atoms;
  for (int x = 0; x < g.order(); ++x) atoms.push_back(bit(x));
  return atoms;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::graph ? "graph" : "digraph"; }

Mode parse_mode(const std::string& s) {
  if (s == "graph") return Mode::graph;
  if (s == "digraph") return Mode::digraph;
  throw Error("unknown mode '" + s + "'");
}

CensusCounts& CensusCounts::operator+=(const CensusCounts& o) {
  regular += o.regular;
  normal += o.normal;
  non_regular += o.non_regular;
  return *this;
}

double CensusRecord::estimate() const {
  return total == 0 ? 0.0 : static_cast<double>(counts.regular) / total.convert_to<double>();
}

double CensusRecord::half_width() const {
  if (method != "sample" || total == 0) return 0;
  const double p = estimate();
  return 1.96 * std::sqrt(p * (1 - p) / total.convert_to<double>());
}

SetClass classify_set(const GroupTable& g, Mask s) {
  const CayleyDigraph c = build_cayley(g, s);
  if (stabilizer_trivially_discrete(c.graph)) return {true, true};
  const PermGroup aut = automorphism_group(c.graph).group;
  return {aut.order() == g.order(), regular_is_normal_in(g, aut)};
}

CensusRecord exhaustive_census(const GroupTable& g, Mode mode, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Mask> atoms = mode_atoms(g, mode);
  const int k = static_cast<int>(atoms.size());
  if (mode == Mode::graph && k > 20) throw Error("graph census needs c(R) <= 20, got " + std::to_string(k));
  if (mode == Mode::digraph && k > 16) throw Error("digraph census needs r <= 16, got " + std::to_string(k));
  const std::uint64_t n = std::uint64_t{1} << k;
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  const auto parts = run_chunks(chunks, jobs, [&](std::uint64_t c) {
    CensusCounts t;
    for_each_atom_subset(atoms, c * kChunk, std::min(n, (c + 1) * kChunk), [&](Mask s) { t += tally(g, s); });
    return t;
  });
  CensusRecord rec;
  rec.group = g.name();
  rec.order = g.order();
  rec.mode = mode;
  rec.method = "exhaustive";
  rec.total = n;
  for (const auto& p : parts) rec.counts += p;
  rec.elapsed_ms = ms_since(t0);
  return rec;
}

std::uint64_t sample_word(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

CensusRecord monte_carlo_census(const GroupTable& g, Mode mode, std::uint64_t samples, std::uint64_t seed, int jobs,
                                std::uint64_t offset) {
  if (samples < 1) throw Error("monte_carlo_census needs at least one sample");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Mask> atoms = mode_atoms(g, mode);
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  const auto parts = run_chunks(chunks, jobs, [&](std::uint64_t c) {
    CensusCounts t;
    for (std::uint64_t i = c * kChunk; i < std::min(samples, (c + 1) * kChunk); ++i) {
      const std::uint64_t w = sample_word(seed, offset + i);
      Mask s = 0;
      for (std::size_t a = 0; a < atoms.size(); ++a)
        if ((w >> a) & 1) s |= atoms[a];
      t += tally(g, s);
    }
    return t;
  });
  CensusRecord rec;
  rec.group = g.name();
  rec.order = g.order();
  rec.mode = mode;
  rec.method = "sample";
  rec.total = samples;
  rec.seed = seed;
  rec.sample_offset = offset;
  for (const auto& p : parts) rec.counts += p;
  rec.elapsed_ms = ms_since(t0);
  return rec;
}

CensusRecord merge_samples(const CensusRecord& a, const CensusRecord& b) {
  if (a.method != "sample" || b.method != "sample" || a.seed != b.seed || a.group != b.group || a.mode != b.mode)
    throw Error("merge_samples: records are not from one sampled run");
  const CensusRecord& lo = a.sample_offset <= b.sample_offset ? a : b;
  const CensusRecord& hi = a.sample_offset <= b.sample_offset ? b : a;
  if (BigInt(lo.sample_offset) + lo.total != hi.sample_offset)
    throw Error("merge_samples: index ranges are not adjacent");
  CensusRecord m = lo;
  m.total = lo.total + hi.total;
  m.counts += hi.counts;
  m.elapsed_ms = lo.elapsed_ms + hi.elapsed_ms;
  return m;
}

UnlabeledCensus unlabeled_census(const GroupTable& g) {
  if (g.order() > 10) throw Error("unlabeled census needs r <= 10");
  UnlabeledCensus u;
  std::map<std::vector<Mask>, bool> classes;
  for_each_inverse_closed(g, g.all(), [&](Mask s) {
    const CayleyDigraph c = build_cayley(g, s);
    const bool grr = classify_set(g, s).regular;
    ++u.labeled_total;
    u.labeled_grr += grr;
    auto [it, fresh] = classes.emplace(canonical_form(c.graph), grr);
    if (!fresh && it->second != grr) throw ProofViolation("isomorphic Cayley graphs disagree on being GRRs");
  });
  u.iso_classes = static_cast<long long>(classes.size());
  for (const auto& kv : classes) u.grr_classes += kv.second;
  u.group_automorphisms = static_cast<long long>(table_automorphisms(g).size());
  u.ratio = static_cast<double>(u.grr_classes) / static_cast<double>(u.iso_classes);
  if (u.iso_classes - u.grr_classes > u.labeled_total - u.labeled_grr)
    throw ProofViolation("more non-GRR classes than labeled non-GRRs");
  if (u.grr_classes * u.group_automorphisms < u.labeled_grr)
    throw ProofViolation("GRR classes below labeled GRRs over |Aut(R)|");
  return u;
}

Strategy parse_strategy(const std::string& s) {
  if (s == "full") return Strategy::full;
  if (s == "aut") return Strategy::aut;
  if (s == "graph-aut") return Strategy::graph_aut;
  throw Error("unknown strategy '" + s + "'");
}

std::vector<OvergroupScenario> build_scenarios(const GroupTable& g, Strategy strategy) {
  const int r = g.order();
  if (r > 24) throw Error("build_scenarios needs r <= 24");
  const PermGroup reg = regular_rep(g);
  std::vector<std::pair<PermGroup, std::string>> groups;
  std::map<std::tuple<std::string, Partition>, std::vector<std::size_t>> buckets;
  auto add = [&](PermGroup p, std::string label) {
    if (p.order() == reg.order()) return;
    auto& bucket = buckets[{to_string(p.order()), orbits(p.point_stabilizer(0))}];
    for (std::size_t i : bucket)
      if (groups[i].first.same_group(p)) return;
    bucket.push_back(groups.size());
    groups.emplace_back(std::move(p), std::move(label));
  };

  switch (strategy) {
    case Strategy::full:
      if (r >= 3) add(PermGroup::symmetric(r), "full");
      break;
    case Strategy::aut: {
      const auto autos = table_automorphisms(g);
      std::vector<Permutation> all = reg.generators();
      for (std::size_t i = 1; i < autos.size(); ++i) {
        const Permutation a(autos[i]);
        std::vector<Permutation> gens = reg.generators();
        gens.push_back(a);
        all.push_back(a);
        add(PermGroup(r, std::move(gens)), "aut:" + a.to_cycles());
      }
      if (autos.size() > 1) add(PermGroup(r, std::move(all)), "holomorph");
      break;
    }
    case Strategy::graph_aut: {
      if (ElementSet::full(g).c_value().twice > 40) throw Error("graph-aut scenarios need c(R) <= 20");
      for_each_inverse_closed(g, g.all(), [&](Mask s) {
        const CayleyDigraph c = build_cayley(g, s);
        if (stabilizer_trivially_discrete(c.graph)) return;
        PermGroup a = automorphism_group(c.graph).group;
        if (a.order() != reg.order()) add(std::move(a), "graph-aut:" + format_elements(s));
      });
      break;
    }
  }
  std::vector<OvergroupScenario> out;
  for (auto& [p, label] : groups) out.push_back(make_scenario(g, p, label));
  return out;
}

}  // namespace grr
