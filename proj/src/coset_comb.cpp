#include "grr/coset_comb.hpp"

#include <algorithm>
#include <numeric>

namespace grr {

namespace {

void require_inverse_closed(const GroupTable& g, Mask x, const char* what) {
  if (inverse_mask(g, x) != x) throw Error(std::string(what) + ": set is not inverse-closed");
}

template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask sub = 0;
  do {
    f(sub);
    sub = (sub - m) & m;
  } while (sub != 0);
}

BigInt closed_form_even(int cell_size, int cells) {
  BigInt total = 0;
  for (int k = 0; k <= cell_size; ++k) total += boost::multiprecision::pow(binomial(cell_size, k), cells);
  return total;
}

// Positions are 1-based as in the construction; order holds coset indices.
Mask coset_at(const DoubleCosetClass& cls, const std::vector<int>& order, int pos) {
  return cls.right_cosets[order[pos - 1]];
}

Mask inverse_tail(const GroupTable& g, const DoubleCosetClass& cls, const std::vector<int>& order, int from) {
  Mask u = 0;
  for (int j = from; j <= cls.b(); ++j) u |= coset_at(cls, order, j);
  return inverse_mask(g, u);
}

void require_class(const GroupTable& g, const DoubleCosetClass& cls, const char* what) {
  require_inverse_closed(g, cls.elements, what);
  if (cls.b() < 2) throw Error(std::string(what) + ": needs at least two cosets");
}

}  // namespace

std::vector<Mask> enumerate_inverse_closed(const GroupTable& g, Mask x) {
  std::vector<Mask> out;
  for_each_inverse_closed(g, x, [&](Mask m) { out.push_back(m); });
  return out;
}

std::vector<long long> inverse_closed_size_counts(const GroupTable& g, Mask x) {
  std::vector<long long> n(popcount(x) + 1, 0);
  for_each_inverse_closed(g, x, [&](Mask m) { ++n[popcount(m)]; });
  return n;
}

SizeCount count_inverse_closed_of_size(const GroupTable& g, Mask x, int k) {
  if (x == 0) throw Error("count_inverse_closed_of_size: empty set");
  require_inverse_closed(g, x, "count_inverse_closed_of_size");
  const std::vector<long long> n = inverse_closed_size_counts(g, x);
  SizeCount out;
  out.count = (k >= 0 && k < static_cast<int>(n.size())) ? n[k] : 0;
  out.c = ElementSet(g, x).c_value();
  out.verdict = make_verdict("fixed-size", out.count, out.c.twice - 2, 2);
  return out;
}

void EvenFamilySpec::validate(const GroupTable& g) const {
  Mask seen = 0;
  for (const auto& b : blocks) {
    if (b.cells.empty()) throw Error("block " + b.label + " has no cells");
    const int size = popcount(b.cells.front());
    for (Mask c : b.cells) {
      if (popcount(c) != size) throw Error("block " + b.label + " has unequal cells");
      if (seen & c) throw Error("block " + b.label + " overlaps another cell");
      seen |= c;
    }
  }
  if (seen != g.all()) throw Error("blocks do not cover the group");
}

EvenFamilySpec double_coset_family(const GroupTable& g, const Subgroup& q) {
  EvenFamilySpec spec;
  for (const auto& cls : double_cosets(g, q).classes)
    spec.blocks.push_back({format_elements(cls.elements), cls.right_cosets});
  return spec;
}

bool intersects_evenly(Mask s, const std::vector<Mask>& cells) {
  if (cells.empty()) return true;
  const int k = popcount(s & cells.front());
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (popcount(s & cells[i]) != k) return false;
  return true;
}

bool even_intersect_check(Mask s, const EvenFamilySpec& spec) {
  for (const auto& b : spec.blocks)
    if (!intersects_evenly(s, b.cells)) return false;
  return true;
}

bool verify_ordering(const GroupTable& g, const DoubleCosetClass& cls, const std::vector<int>& order) {
  for (int i = 2; i <= cls.b() / 2 + 1; ++i)
    if (!(coset_at(cls, order, i) & inverse_tail(g, cls, order, i))) return false;
  return true;
}

OrderingResult construct_ordering(const GroupTable& g, const DoubleCosetClass& cls) {
  require_class(g, cls, "construct_ordering");
  const int b = cls.b();
  std::vector<int> order(b);
  std::iota(order.begin(), order.end(), 0);
  for (int l = 2; l <= b / 2; ++l) {
    const Mask tail = inverse_tail(g, cls, order, l + 1);
    int s = 0;
    for (int c = l + 1; c <= 2 * l && !s; ++c)
      if (coset_at(cls, order, c) & tail) s = c;
    if (!s) throw ProofViolation("construct_ordering: no swap position at l = " + std::to_string(l));
    std::swap(order[l], order[s - 1]);
  }
  OrderingResult res{order, {}};
  for (int i = 2; i <= b / 2 + 1; ++i) {
    const Mask hit = coset_at(cls, order, i) & inverse_tail(g, cls, order, i);
    if (!hit) throw ProofViolation("construct_ordering: position " + std::to_string(i) + " has no witness");
    res.witnesses.push_back(lowest(hit));
  }
  if (!verify_ordering(g, cls, order)) throw ProofViolation("construct_ordering: result fails verification");
  return res;
}

std::vector<bool> check_2k_property(const GroupTable& g, const DoubleCosetClass& cls,
                                    const std::vector<int>& order) {
  require_inverse_closed(g, cls.elements, "check_2k_property");
  if (static_cast<int>(order.size()) != cls.b()) throw Error("check_2k_property: ordering length mismatch");
  std::vector<bool> out;
  for (int k = 1; k <= cls.b() / 2; ++k) {
    Mask head = 0;
    for (int i = k + 1; i <= 2 * k; ++i) head |= coset_at(cls, order, i);
    out.push_back((head & inverse_tail(g, cls, order, k + 1)) != 0);
  }
  return out;
}

Verdict count_M(const GroupTable& g, const DoubleCosetClass& cls) {
  require_inverse_closed(g, cls.elements, "count_M");
  long long count = 0;
  for_each_inverse_closed(g, cls.elements, [&](Mask s) { count += intersects_evenly(s, cls.right_cosets); });
  const HalfInt c = ElementSet(g, cls.elements).c_value();
  return make_verdict("class-even-inverse-closed", count, c.twice - cls.b() + 1, 2);
}

NCount count_N(const GroupTable& g, const DoubleCosetClass& cls) {
  (void)g;
  const int size = popcount(cls.elements);
  if (size > kMaxEnumerationAtoms) throw Error("count_N: class of size " + std::to_string(size) + " too large");
  long long count = 0;
  for_each_submask(cls.elements, [&](Mask s) { count += intersects_evenly(s, cls.right_cosets); });
  NCount out;
  out.closed_form = closed_form_even(popcount(cls.right_cosets.front()), cls.b());
  if (out.closed_form != count) throw ProofViolation("count_N: enumeration disagrees with the closed form");
  out.verdict = make_verdict("class-even-all", count, size - cls.b() + 1, 1);
  return out;
}

LSubgroupCount count_L_subgroup(const GroupTable& g, const Subgroup& q) {
  const DoubleCosetDecomposition d = double_cosets(g, q);
  std::vector<std::vector<Mask>> blocks;
  for (const auto& cls : d.classes)
    if (cls.b() > 1) blocks.push_back(cls.right_cosets);
  long long count = 0;
  for_each_inverse_closed(g, g.all(), [&](Mask s) {
    for (const auto& cells : blocks)
      if (!intersects_evenly(s, cells)) return;
    ++count;
  });

  LSubgroupCount out;
  out.count = count;
  out.product = 1;
  for (int i : d.self_paired) out.product *= count_M(g, d.classes[i]).count;
  // A paired class B fixes S on B^-1; both sides must still be even.
  for (auto [i, j] : d.paired) {
    const DoubleCosetClass& b = d.classes[i];
    const DoubleCosetClass& binv = d.classes[j];
    if (popcount(b.elements) > kMaxEnumerationAtoms) throw Error("count_L_subgroup: class too large");
    long long pairs = 0;
    for_each_submask(b.elements, [&](Mask t) {
      pairs += intersects_evenly(t, b.right_cosets) && intersects_evenly(inverse_mask(g, t), binv.right_cosets);
    });
    out.product *= pairs;
  }
  if (out.product != out.count) throw ProofViolation("count_L_subgroup: per-class product disagrees");

  const HalfInt c = ElementSet::full(g).c_value();
  out.general = make_verdict("double-coset-even", count, c.twice - q.index() + d.ell(), 2);
  if (!q.is_normal()) out.nonnormal = make_verdict("double-coset-even-nonnormal", count, 4 * c.twice - q.index(), 8);
  return out;
}

LQuotientCount count_L_quotient(const OvergroupScenario& s) {
  const GroupTable& g = *s.group;
  Mask covered = 0;
  for (const auto& o : s.h_orbits) {
    for (Mask c : o.cells) {
      if (covered & c) throw Error("scenario: K-cosets overlap");
      covered |= c;
    }
    if (covered & ~g.all()) throw Error("scenario: cells outside the group");
  }
  if (covered != g.all()) throw Error("scenario: K-cosets do not cover the group");

  LQuotientCount out;
  long long count = 0;
  for_each_inverse_closed(g, g.all(), [&](Mask x) {
    for (const auto& o : s.h_orbits)
      if (!intersects_evenly(x, o.cells)) return;
    ++count;
  });
  out.count = count;

  const GroupTable& qt = s.quotient.table;
  const HalfInt cr = ElementSet::full(g).c_value();
  const HalfInt cq = ElementSet::full(qt).c_value();
  out.general = make_verdict("quotient-even", count, cr.twice - cq.twice + 2LL * s.kappa, 2);
  if (s.quotient_grr_eligible && !s.degenerate)
    out.eligible = make_verdict("quotient-even-eligible", count, 48 * cr.twice - qt.order(), 96);

  for (std::size_t i = 0; i < s.h_orbits.size(); ++i) {
    const HOrbit& o = s.h_orbits[i];
    OrbitCount oc;
    oc.orbit = static_cast<int>(i);
    oc.inverse_fixed = o.inverse_fixed;
    const int pre = popcount(o.preimage);
    const int npts = popcount(o.points);
    const BigInt closed = closed_form_even(popcount(o.cells.front()), npts);
    if (pre <= 20) {
      long long all = 0;
      for_each_submask(o.preimage, [&](Mask x) { all += intersects_evenly(x, o.cells); });
      if (all != closed) throw ProofViolation("orbit even-subset count disagrees with the closed form");
    }
    oc.all = make_verdict("orbit-even-all", closed, pre - npts + 1, 1);
    if (o.inverse_fixed) {
      long long ic = 0;
      for_each_inverse_closed(g, o.preimage, [&](Mask x) { ic += intersects_evenly(x, o.cells); });
      const HalfInt cpre = ElementSet(g, o.preimage).c_value();
      const HalfInt cpts = ElementSet(qt, o.points).c_value();
      oc.inverse_closed = make_verdict("orbit-even-inverse-closed", ic, cpre.twice - cpts.twice + 2, 2);
    }
    out.per_orbit.push_back(std::move(oc));
  }
  return out;
}

BigInt parity_subset_count(int m, bool odd) {
  if (m < 0) throw Error("parity_subset_count: negative size");
  const BigInt v = m == 0 ? BigInt(odd ? 0 : 1) : pow2(m - 1);
  if (m <= 30) {
    BigInt sum = 0;
    for (int k = odd ? 1 : 0; k <= m; k += 2) sum += binomial(m, k);
    if (sum != v) throw ProofViolation("parity_subset_count: binomial sum disagrees");
  }
  return v;
}

}  // namespace grr
