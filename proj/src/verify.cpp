#include "grr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "grr/autgraph.hpp"
#include "grr/bounds.hpp"
#include "grr/census.hpp"
#include "grr/classify.hpp"
#include "grr/coset_comb.hpp"

namespace grr {

namespace {

using Groups = std::vector<std::unique_ptr<GroupTable>>;

Groups load_groups(const std::vector<std::string>& corpus, int max_order) {
  Groups out;
  for (const auto& src : corpus) {
    auto g = std::make_unique<GroupTable>(load_group(src));
    if (g->order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

SuiteRecord record(const std::string& group, std::string subgroup, std::string check, bool ok,
                   const BigInt& count = 0, std::string detail = {}) {
  SuiteRecord r;
  r.group = group;
  r.subgroup = std::move(subgroup);
  r.lemma = std::move(check);
  r.count = count;
  r.holds = ok;
  r.status = ok ? "pass" : "fail";
  r.detail = std::move(detail);
  return r;
}

SuiteRecord from_verdict(const std::string& group, std::string subgroup, const Verdict& v) {
  SuiteRecord r = record(group, std::move(subgroup), v.name, v.holds, v.count);
  r.bound_num = v.bound_num;
  r.bound_den_exp = v.bound_den;
  return r;
}

SuiteRecord status_only(const std::string& group, std::string subgroup, std::string check, std::string status,
                        std::string detail) {
  SuiteRecord r = record(group, std::move(subgroup), std::move(check), true, 0, std::move(detail));
  r.status = std::move(status);
  return r;
}

/// Scenarios of every strategy for one group, built once per process.
struct ScenarioSet {
  std::unique_ptr<GroupTable> group;
  std::vector<OvergroupScenario> list;
};

const ScenarioSet& scenarios_for(const GroupTable& g) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<ScenarioSet>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[g.name()];
  if (slot) return *slot;
  slot = std::make_unique<ScenarioSet>();
  slot->group = std::make_unique<GroupTable>(g);
  for (Strategy st : {Strategy::full, Strategy::aut, Strategy::graph_aut})
    for (auto& s : build_scenarios(*slot->group, st)) {
      const bool dup = std::any_of(slot->list.begin(), slot->list.end(),
                                   [&](const OvergroupScenario& t) { return t.overgroup.same_group(s.overgroup); });
      if (!dup) slot->list.push_back(std::move(s));
    }
  return *slot;
}

bool scenario_capable(const GroupTable& g) { return g.order() >= 2 && g.order() <= 24; }

std::string sub_label(Mask m) { return "Q=" + format_elements(m); }

std::string class_label(const Subgroup& q, const DoubleCosetClass& c) {
  return sub_label(q.mask()) + " class=" + format_elements(c.elements);
}

/// Every inverse-closed subset X of R, enumerated once.
std::vector<Mask> all_inverse_closed(const GroupTable& g) { return enumerate_inverse_closed(g, g.all()); }

// ---------------------------------------------------------------------------

void suite_c_count(const GroupTable& g, std::vector<SuiteRecord>& out) {
  long long checked = 0;
  std::string bad;
  for (Mask x : all_inverse_closed(g)) {
    // Only subsets of X closed under inversion are counted.
    long long n = 0;
    for_each_inverse_closed(g, x, [&](Mask s) { n += (s & ~x) == 0 && inverse_mask(g, s) == s; });
    const HalfInt c = ElementSet(g, x).c_value();
    ++checked;
    if (c.twice % 2 != 0 || BigInt(n) != pow2(c.twice / 2)) {
      if (bad.empty()) bad = "X=" + format_elements(x) + " count=" + std::to_string(n) + " c=" + to_string(c);
    }
  }
  out.push_back(record(g.name(), "all inverse-closed X", "subset-count-equals-2^c", bad.empty(), checked, bad));
}

void suite_involutions(const GroupTable& g, std::vector<SuiteRecord>& out) {
  const InvolutionFraction f = involution_fraction_check(g);
  out.push_back(record(g.name(), "R", "involution-fraction", !f.must_be_ea2 || f.is_ea2, f.involutions,
                       std::to_string(f.involutions) + "/" + std::to_string(f.order) +
                           (f.must_be_ea2 ? " > 3/4" : " <= 3/4")));
}

void suite_fixed_size(const GroupTable& g, std::vector<SuiteRecord>& out) {
  long long pairs = 0;
  std::string bad, asym;
  for (Mask x : all_inverse_closed(g)) {
    if (!x) continue;
    const std::vector<long long> n = inverse_closed_size_counts(g, x);
    const HalfInt c = ElementSet(g, x).c_value();
    for (std::size_t k = 0; k < n.size(); ++k) {
      ++pairs;
      if (!within_power_of_two(n[k], c.twice - 2, 2) && bad.empty())
        bad = "X=" + format_elements(x) + " k=" + std::to_string(k) + " n_k=" + std::to_string(n[k]);
      if (n[k] != n[n.size() - 1 - k] && asym.empty()) asym = "X=" + format_elements(x) + " k=" + std::to_string(k);
    }
  }
  out.push_back(record(g.name(), "all nonempty inverse-closed X", "fixed-size", bad.empty(), pairs, bad));
  out.push_back(record(g.name(), "all nonempty inverse-closed X", "complement-symmetry", asym.empty(), pairs, asym));
}

void suite_joint_orbits(const GroupTable& g, std::vector<SuiteRecord>& out) {
  if (!scenario_capable(g)) return;
  const HalfInt cr = ElementSet::full(g).c_value();
  for (const auto& s : scenarios_for(g).list) {
    if (!s.group_grr_eligible) {
      out.push_back(status_only(g.name(), s.label, "joint-orbit-count", "skipped", "R lies in an excluded family"));
      continue;
    }
    // joint <= c(R) - r/96, scaled by 96.
    const bool ok = 96LL * s.joint_orbits <= 48 * cr.twice - g.order();
    SuiteRecord r = record(g.name(), s.label, "joint-orbit-count", ok, s.joint_orbits);
    r.bound_num = 48 * cr.twice - g.order();
    r.bound_den_exp = 96;
    r.detail = "linear bound: count <= bound_num/bound_den_exp";
    out.push_back(std::move(r));
  }
}

void suite_stabilized_orbits(const GroupTable& g, std::vector<SuiteRecord>& out) {
  if (g.order() > 10 || g.order() < 2) return;
  if (classify(g).grr_family_excluded) {
    out.push_back(status_only(g.name(), "R", "stabilized-orbit-count", "skipped", "R lies in an excluded family"));
    return;
  }
  const HalfInt cr = ElementSet::full(g).c_value();
  const std::vector<Mask> sets = all_inverse_closed(g);
  for (const Subgroup& n : subgroups(g)) {
    if (n.order() == 1 || n.order() == g.order() || !n.is_normal()) continue;
    long long count = 0;
    for (Mask s : sets) count += stabilized_orbit_predicate(g, s, n);
    const long double e = stabilized_orbit_exponent(g.order(), cr.value(), n.order());
    const bool ok = count == 0 || std::log2(static_cast<long double>(count)) <= e;
    SuiteRecord r = record(g.name(), "N=" + format_elements(n.mask()), "stabilized-orbit-count", ok, count);
    r.advisory_exponent = static_cast<double>(e);
    r.detail = "advisory floating-point bound";
    out.push_back(std::move(r));
  }
}

void suite_orbit_equitable(const GroupTable& g, std::vector<SuiteRecord>& out) {
  if (g.order() > 10) return;
  long long checked = 0;
  std::string bad;
  for (Mask s : all_inverse_closed(g)) {
    const CayleyDigraph c = build_cayley(g, s);
    const PermGroup aut = automorphism_group(c).group;
    std::mt19937_64 rng(s * 0x9E3779B97F4A7C15ull + static_cast<unsigned>(g.order()));
    for (int t = 0; t < 100; ++t) {
      std::vector<Permutation> gens;
      if (t == 1) gens = aut.generators();
      for (int k = 0; t > 1 && k < 1 + t % 3; ++k) gens.push_back(aut.random_element(rng));
      ++checked;
      const Partition parts = orbits_of(g.order(), gens);
      if (!is_equitable(c.graph, parts).equitable && bad.empty())
        bad = "S=" + format_elements(s) + " sample=" + std::to_string(t);
    }
  }
  out.push_back(record(g.name(), "all inverse-closed S, 100 subgroups each", "orbit-partition-equitable", bad.empty(),
                       checked, bad));
}

void suite_dichotomy(const GroupTable& g, std::vector<SuiteRecord>& out) {
  if (!scenario_capable(g)) return;
  for (const auto& s : scenarios_for(g).list) {
    if (!s.r_maximal.has_value()) {
      out.push_back(status_only(g.name(), s.label, "normal-orbit-dichotomy", "skipped", "overgroup too large"));
      continue;
    }
    if (!*s.r_maximal) {
      out.push_back(status_only(g.name(), s.label, "normal-orbit-dichotomy", "skipped", "R not maximal"));
      continue;
    }
    const PermGroup& G = s.overgroup;
    std::vector<std::pair<std::string, PermGroup>> ls{{"L=G", G}, {"L=core", s.core}};
    const PermGroup g1 = G.point_stabilizer(0);
    for (const auto& x : g1.generators()) ls.emplace_back("L=ncl(" + x.to_cycles() + ")", normal_closure(G, PermGroup(G.degree(), {x})));
    for (const auto& x : G.generators()) ls.emplace_back("L=ncl(" + x.to_cycles() + ")", normal_closure(G, PermGroup(G.degree(), {x})));
    for (const auto& [name, l] : ls) {
      const DichotomyReport d = normal_orbit_dichotomy_check(G, g, l, Maximality{true, false});
      out.push_back(record(g.name(), s.label + " " + name, "normal-orbit-dichotomy", d.holds && d.l_normal,
                           l.order(), d.branch));
    }
  }
}

/// Calls f(q, decomposition) for each subgroup, optionally non-normal only.
template <typename F>
void for_each_subgroup(const GroupTable& g, bool nonnormal_only, F&& f) {
  for (const Subgroup& q : subgroups(g)) {
    if (nonnormal_only && q.is_normal()) continue;
    f(q, double_cosets(g, q));
  }
}

void suite_orderings_all(const GroupTable& g, std::vector<SuiteRecord>& out) {
  for_each_subgroup(g, true, [&](const Subgroup& q, const DoubleCosetDecomposition& d) {
    for (const auto& cls : d.classes) {
      if (cls.b() < 2 || !cls.inverse_closed(g)) continue;
      if (cls.b() > 4) {
        std::vector<int> id(cls.b());
        for (int i = 0; i < cls.b(); ++i) id[i] = i;
        const auto v = check_2k_property(g, cls, id);
        const bool ok = std::all_of(v.begin(), v.end(), [](bool b) { return b; });
        out.push_back(record(g.name(), class_label(q, cls), "2k-property-stored-order", ok, 1,
                             "b=" + std::to_string(cls.b())));
        continue;
      }
      std::vector<int> order(cls.b());
      for (int i = 0; i < cls.b(); ++i) order[i] = i;
      long long n = 0;
      bool ok = true;
      do {
        ++n;
        for (bool b : check_2k_property(g, cls, order)) ok = ok && b;
      } while (std::next_permutation(order.begin(), order.end()));
      out.push_back(record(g.name(), class_label(q, cls), "2k-property-all-orderings", ok, n,
                           "b=" + std::to_string(cls.b())));
    }
  });
}

void suite_orderings_constructed(const GroupTable& g, std::vector<SuiteRecord>& out) {
  for_each_subgroup(g, true, [&](const Subgroup& q, const DoubleCosetDecomposition& d) {
    for (const auto& cls : d.classes) {
      if (cls.b() < 2 || !cls.inverse_closed(g)) continue;
      const OrderingResult o = construct_ordering(g, cls);
      const bool ok = verify_ordering(g, cls, o.order);
      std::string detail = "order=";
      for (int i : o.order) detail += std::to_string(i) + " ";
      detail += "witnesses=" + std::to_string(o.witnesses.size());
      out.push_back(record(g.name(), class_label(q, cls), "constructed-ordering", ok, cls.b(), detail));
    }
  });
}

void suite_class_even(const GroupTable& g, std::vector<SuiteRecord>& out) {
  for_each_subgroup(g, false, [&](const Subgroup& q, const DoubleCosetDecomposition& d) {
    for (const auto& cls : d.classes)
      if (cls.inverse_closed(g)) out.push_back(from_verdict(g.name(), class_label(q, cls), count_M(g, cls)));
  });
}

void suite_class_all(const GroupTable& g, std::vector<SuiteRecord>& out) {
  for_each_subgroup(g, false, [&](const Subgroup& q, const DoubleCosetDecomposition& d) {
    for (const auto& cls : d.classes) {
      const NCount n = count_N(g, cls);
      SuiteRecord r = from_verdict(g.name(), class_label(q, cls), n.verdict);
      r.detail = "closed form " + to_string(n.closed_form);
      out.push_back(std::move(r));
    }
  });
}

void suite_double_coset_even(const GroupTable& g, std::vector<SuiteRecord>& out) {
  for (const Subgroup& q : subgroups(g)) {
    const LSubgroupCount l = count_L_subgroup(g, q);
    SuiteRecord r = from_verdict(g.name(), sub_label(q.mask()), l.general);
    r.detail = "product " + to_string(l.product);
    out.push_back(std::move(r));
    if (l.nonnormal) out.push_back(from_verdict(g.name(), sub_label(q.mask()), *l.nonnormal));
  }
}

void suite_quotient_even(const GroupTable& g, std::vector<SuiteRecord>& out) {
  if (!scenario_capable(g)) return;
  for (const auto& s : scenarios_for(g).list) {
    const LQuotientCount l = count_L_quotient(s);
    out.push_back(from_verdict(g.name(), s.label, l.general));
    for (const auto& o : l.per_orbit) {
      const std::string lab = s.label + " orbit=" + format_elements(s.h_orbits[o.orbit].points);
      if (o.inverse_closed) out.push_back(from_verdict(g.name(), lab, *o.inverse_closed));
      out.push_back(from_verdict(g.name(), lab, o.all));
    }
    if (l.eligible)
      out.push_back(from_verdict(g.name(), s.label, *l.eligible));
    else if (s.degenerate)
      out.push_back(status_only(g.name(), s.label, "quotient-even-eligible", "degenerate", "H acts trivially on R/K"));
    else
      out.push_back(status_only(g.name(), s.label, "quotient-even-eligible", "skipped", "R/K lies in an excluded family"));
  }
}

/// Order plus mutual generator membership.
bool same_aut(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& x : a.generators())
    if (!b.contains(x)) return false;
  for (const auto& x : b.generators())
    if (!a.contains(x)) return false;
  return true;
}

void suite_aut_differential(const GroupTable& g, std::vector<SuiteRecord>& out) {
  if (g.order() > 8) return;
  long long checked = 0;
  std::string bad;
  for (Mask s : all_inverse_closed(g)) {
    const Digraph d = build_cayley(g, s).graph;
    ++checked;
    if (!same_aut(automorphism_group(d).group, brute_force_automorphisms(d).group) && bad.empty())
      bad = "S=" + format_elements(s);
  }
  out.push_back(record(g.name(), "all inverse-closed S", "refinement-vs-brute-force", bad.empty(), checked, bad));
}

void random_digraph_differential(std::vector<SuiteRecord>& out) {
  std::mt19937_64 rng(20240611);
  long long checked = 0;
  std::string bad;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const unsigned density = static_cast<unsigned>(rng() % 4);
    std::vector<Mask> rows(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && (rng() & 3) <= density) rows[u] |= bit(v);
    if (t % 3 == 0)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if ((rows[u] >> v) & 1) rows[v] |= bit(u);
    const Digraph d(rows);
    std::vector<int> colors(n);
    for (int u = 0; u < n; ++u) colors[u] = static_cast<int>(rng() % 2);
    const bool coloured = t % 5 == 0;
    ++checked;
    const PermGroup a = automorphism_group(d, coloured ? &colors : nullptr).group;
    const PermGroup b = brute_force_automorphisms(d, coloured ? &colors : nullptr).group;
    if (!same_aut(a, b) && bad.empty()) bad = "digraph " + std::to_string(t);
  }
  out.push_back(record("random", "1000 seeded digraphs, n <= 8", "refinement-vs-brute-force", bad.empty(), checked, bad));
}

void suite_census_consistency(const GroupTable& g, std::vector<SuiteRecord>& out) {
  if (ElementSet::full(g).c_value().twice > 32) return;
  const CensusRecord a = exhaustive_census(g, Mode::graph, 1);
  const CensusRecord b = exhaustive_census(g, Mode::graph, 2);
  const BigInt total = a.total;
  const bool partition = BigInt(a.counts.regular + a.counts.non_regular) == total;
  out.push_back(record(g.name(), "graph census", "regular-plus-nonregular-equals-total", partition, total,
                       std::to_string(a.counts.regular) + " + " + std::to_string(a.counts.non_regular)));
  out.push_back(record(g.name(), "graph census", "regular-at-most-normal", a.counts.regular <= a.counts.normal,
                       a.counts.normal));
  out.push_back(record(g.name(), "graph census", "serial-equals-parallel", a.counts == b.counts, total));
}

using SuiteFn = void (*)(const GroupTable&, std::vector<SuiteRecord>&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> t = {
      {"c-count", suite_c_count},
      {"lemma2.1", suite_involutions},
      {"lemma2.3", suite_fixed_size},
      {"lemma2.4", suite_joint_orbits},
      {"lemma2.5", suite_stabilized_orbits},
      {"lemma2.7", suite_orbit_equitable},
      {"lemma2.9", suite_dichotomy},
      {"lemma3.1", suite_orderings_all},
      {"lemma3.2", suite_orderings_constructed},
      {"lemma3.3", suite_class_even},
      {"lemma3.4", suite_class_all},
      {"lemma3.5+prop3.1", suite_double_coset_even},
      {"lemma3.7-3.9+prop3.6", suite_quotient_even},
      {"aut-differential", suite_aut_differential},
      {"census-consistency", suite_census_consistency},
  };
  return t;
}

}  // namespace

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const SuiteRecord& r) { return r.status == "fail"; }));
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "c-count",  "lemma2.1", "lemma2.3", "lemma2.4",         "lemma2.5",
      "lemma2.7", "lemma2.9", "lemma3.1", "lemma3.2",         "lemma3.3",
      "lemma3.4", "lemma3.5+prop3.1",     "lemma3.7-3.9+prop3.6", "aut-differential",
      "census-consistency"};
  return ids;
}

VerificationReport verify_suite(const std::string& suite, int max_order, const std::vector<std::string>& corpus) {
  const auto& table = suite_table();
  const auto it = table.find(suite);
  if (it == table.end()) throw Error("unknown suite id '" + suite + "'");
  VerificationReport rep{suite, max_order, {}};
  for (const auto& g : load_groups(corpus, max_order)) it->second(*g, rep.records);
  if (suite == "aut-differential") random_digraph_differential(rep.records);
  return rep;
}

}  // namespace grr
