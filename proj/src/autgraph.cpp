#include "grr/autgraph.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <utility>

#include "grr/perm_algorithms.hpp"

namespace grr {

namespace {

using Trace = std::vector<std::uint32_t>;
using Cells = std::vector<Mask>;

class Refiner {
 public:
  explicit Refiner(const Digraph& d) : d_(d), directed_(!d.symmetric()) {}

  /// Equitable refinement driven by the queued splitter cells. When `ref` is
  /// given, stops and returns false as soon as the trace departs from it.
  bool run(Cells& cells, std::vector<int> queue, Trace& trace, const Trace* ref) const {
    std::vector<char> queued(kMaxOrder + 1, 0);
    for (int q : queue) queued[q] = 1;
    std::vector<std::pair<std::uint32_t, int>> keyed;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int w = queue[head];
      queued[w] = 0;
      const Mask W = cells[w];
      const std::size_t m = cells.size();
      for (std::size_t c = 0; c < m; ++c) {
        const Mask C = cells[c];
        if (!(C & (C - 1))) continue;
        keyed.clear();
        for_each_bit(C, [&](int v) {
          std::uint32_t key = popcount(d_.out[v] & W);
          if (directed_) key = key << 7 | popcount(d_.in[v] & W);
          keyed.emplace_back(key, v);
        });
        bool uniform = true;
        for (const auto& kv : keyed) uniform = uniform && kv.first == keyed.front().first;
        if (uniform) continue;
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::pair<std::uint32_t, Mask>> frags;
        for (const auto& [key, v] : keyed) {
          if (frags.empty() || frags.back().first != key) frags.emplace_back(key, 0);
          frags.back().second |= bit(v);
        }
        if (!emit(trace, ref, static_cast<std::uint32_t>(w << 16 | c << 8 | frags.size()))) return false;
        for (std::size_t f = 0; f < frags.size(); ++f) {
          if (!emit(trace, ref, frags[f].first << 8 | popcount(frags[f].second))) return false;
          int idx = static_cast<int>(c);
          if (f == 0) {
            cells[c] = frags[f].second;
          } else {
            idx = static_cast<int>(cells.size());
            cells.push_back(frags[f].second);
          }
          if (!queued[idx]) {
            queued[idx] = 1;
            queue.push_back(idx);
          }
        }
      }
    }
    if (!emit(trace, ref, 0xFF000000u | static_cast<std::uint32_t>(cells.size()))) return false;
    return !ref || trace.size() == ref->size();
  }

 private:
  static bool emit(Trace& t, const Trace* ref, std::uint32_t token) {
    t.push_back(token);
    return !ref || (t.size() <= ref->size() && (*ref)[t.size() - 1] == token);
  }

  const Digraph& d_;
  bool directed_;
};

bool discrete(const Cells& cells, int n) { return static_cast<int>(cells.size()) == n; }

int target_cell(const Cells& cells) {
  int best = -1, size = kMaxOrder + 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int s = popcount(cells[i]);
    if (s > 1 && s < size) {
      best = static_cast<int>(i);
      size = s;
    }
  }
  return best;
}

Cells individualize(const Cells& cells, int t, int v) {
  Cells out = cells;
  out[t] = bit(v);
  out.push_back(cells[t] & ~bit(v));
  return out;
}

Cells initial_cells(int n, const std::vector<int>* colors) {
  if (!colors) return {low_bits(n)};
  if (static_cast<int>(colors->size()) != n) throw Error("colouring size differs from the vertex count");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return (*colors)[a] < (*colors)[b]; });
  Cells cells;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || (*colors)[order[i]] != (*colors)[order[i - 1]]) cells.push_back(0);
    cells.back() |= bit(order[i]);
  }
  return cells;
}

std::vector<int> all_cells(const Cells& cells) {
  std::vector<int> q(cells.size());
  std::iota(q.begin(), q.end(), 0);
  return q;
}

bool preserves(const Digraph& d, const std::vector<int>* colors, const std::vector<int>& img) {
  for (int v = 0; v < d.n; ++v) {
    if (colors && (*colors)[v] != (*colors)[img[v]]) return false;
    Mask mapped = 0;
    for_each_bit(d.out[v], [&](int w) { mapped |= bit(img[w]); });
    if (mapped != d.out[img[v]]) return false;
  }
  return true;
}

struct Node {
  Cells cells;
  Trace trace;
  int target = -1;
  int chosen = -1;
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

class AutSearch {
 public:
  AutSearch(const Digraph& d, const std::vector<int>* colors) : d_(d), colors_(colors), refiner_(d) {}

  PermGroup run() {
    const int n = d_.n;
    Node root;
    root.cells = initial_cells(n, colors_);
    refiner_.run(root.cells, all_cells(root.cells), root.trace, nullptr);
    path_.push_back(std::move(root));
    while (!discrete(path_.back().cells, n)) {
      Node& cur = path_.back();
      cur.target = target_cell(cur.cells);
      cur.chosen = lowest(cur.cells[cur.target]);
      Node next;
      next.cells = individualize(cur.cells, cur.target, cur.chosen);
      refiner_.run(next.cells, {cur.target}, next.trace, nullptr);
      path_.push_back(std::move(next));
    }
    lab0_.resize(n);
    for (int i = 0; i < n; ++i) lab0_[i] = lowest(path_.back().cells[i]);

    UnionFind uf(n);
    BigInt order = 1;
    for (int depth = static_cast<int>(path_.size()) - 2; depth >= 0; --depth) {
      const Node& node = path_[depth];
      std::vector<int> failed;
      for_each_bit(node.cells[node.target], [&](int v) {
        if (uf.find(v) == uf.find(node.chosen)) return;
        for (int f : failed)
          if (uf.find(f) == uf.find(v)) return;
        Cells child = individualize(node.cells, node.target, v);
        Trace tr;
        std::vector<int> img;
        if (refiner_.run(child, {node.target}, tr, &path_[depth + 1].trace) && search(depth + 1, child, img)) {
          gens_.emplace_back(img);
          for (int x = 0; x < n; ++x) uf.unite(x, img[x]);
        } else {
          failed.push_back(v);
        }
      });
      int orbit = 0;
      for (int x = 0; x < n; ++x) orbit += uf.find(x) == uf.find(node.chosen);
      order *= orbit;
    }
    PermGroup g(n, gens_);
    if (g.order() != order) throw ProofViolation("automorphism search: orbit product disagrees with the group order");
    return g;
  }

 private:
  bool search(std::size_t depth, const Cells& cells, std::vector<int>& img) {
    if (depth + 1 == path_.size()) {
      img.assign(d_.n, 0);
      for (int i = 0; i < d_.n; ++i) img[lab0_[i]] = lowest(cells[i]);
      return preserves(d_, colors_, img);
    }
    const int t = path_[depth].target;
    Mask cand = cells[t];
    while (cand) {
      const int u = lowest(cand);
      cand &= cand - 1;
      Cells child = individualize(cells, t, u);
      Trace tr;
      if (refiner_.run(child, {t}, tr, &path_[depth + 1].trace) && search(depth + 1, child, img)) return true;
    }
    return false;
  }

  const Digraph& d_;
  const std::vector<int>* colors_;
  Refiner refiner_;
  std::vector<Node> path_;
  std::vector<int> lab0_;
  std::vector<Permutation> gens_;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void verify_generators(const Digraph& d, const std::vector<int>* colors, const PermGroup& g) {
  for (const auto& p : g.generators())
    if (!preserves(d, colors, p.images())) throw ProofViolation("automorphism generator does not preserve arcs");
}

}  // namespace

AutResult automorphism_group(const Digraph& d, const std::vector<int>* colors) {
  if (d.n < 1 || d.n > kMaxOrder) throw Error("automorphism_group: vertex count out of range");
  const auto t0 = std::chrono::steady_clock::now();
  PermGroup g = AutSearch(d, colors).run();
  verify_generators(d, colors, g);
  return {std::move(g), "refined-backtracking", ms_since(t0)};
}

AutResult automorphism_group(const CayleyDigraph& d) { return automorphism_group(d.graph); }

AutResult brute_force_automorphisms(const Digraph& d, const std::vector<int>* colors) {
  if (d.n < 1 || d.n > 8) throw Error("brute_force_automorphisms: needs 1..8 vertices");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<int> img(d.n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> gens;
  PermGroup g = PermGroup::trivial(d.n);
  do {
    if (!preserves(d, colors, img)) continue;
    Permutation p(img);
    if (g.contains(p)) continue;
    gens.push_back(std::move(p));
    g = PermGroup(d.n, gens);
  } while (std::next_permutation(img.begin(), img.end()));
  return {std::move(g), "brute-force", ms_since(t0)};
}

bool stabilizer_trivially_discrete(const Digraph& d) {
  Refiner ref(d);
  Cells cells{low_bits(d.n)};
  Trace tr;
  ref.run(cells, {0}, tr, nullptr);
  int t = 0;
  while (!(cells[t] & 1)) ++t;
  if (cells[t] != 1) {
    cells = individualize(cells, t, 0);
    ref.run(cells, {t}, tr, nullptr);
  }
  return discrete(cells, d.n);
}

bool is_drr(const GroupTable& g, Mask s) {
  const CayleyDigraph c = build_cayley(g, s);
  if (stabilizer_trivially_discrete(c.graph)) return true;
  return automorphism_group(c.graph).group.order() == g.order();
}

bool is_grr(const GroupTable& g, Mask s) { return inverse_mask(g, s) == s && is_drr(g, s); }

bool regular_is_normal_in(const GroupTable& g, const PermGroup& aut) {
  for (const auto& a : aut.generators()) {
    const Permutation ai = a.inverse();
    for (int t : g.generators()) {
      const Permutation p = ai * translation(g, t) * a;
      const int shift = p(0);
      for (int x = 0; x < g.order(); ++x)
        if (p(x) != g.mul(x, shift)) return false;
    }
  }
  return true;
}

bool is_normal_cayley(const GroupTable& g, Mask s) {
  const CayleyDigraph c = build_cayley(g, s);
  if (stabilizer_trivially_discrete(c.graph)) return true;
  return regular_is_normal_in(g, automorphism_group(c.graph).group);
}

bool stabilized_orbit_predicate(const GroupTable& g, Mask s, const Subgroup& n) {
  if (!n.is_normal() || n.order() == 1 || n.order() == g.order())
    throw Error("stabilized_orbit_predicate needs a nontrivial proper normal subgroup");
  const std::vector<Mask> cosets = n.right_cosets();
  std::vector<int> colors(g.order());
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for_each_bit(cosets[i], [&](int x) { colors[x] = 2 * static_cast<int>(i) + (x != 0); });
  const PermGroup a = automorphism_group(build_cayley(g, s).graph, &colors).group;
  if (a.is_trivial()) return false;

  std::vector<Permutation> nreg;
  for_each_bit(n.mask() & ~Mask{1}, [&](int x) { nreg.push_back(translation(g, x)); });
  auto normalizes = [&](const Permutation& phi) {
    const Permutation inv = phi.inverse();
    for (const auto& t : nreg) {
      const Permutation c = inv * t * phi;
      if (!n.contains(c(0))) return false;
      for (int x = 0; x < g.order(); ++x)
        if (c(x) != g.mul(x, c(0))) return false;
    }
    return true;
  };
  for (const auto& p : a.generators())
    if (normalizes(p)) return true;
  for (const auto& p : a.elements(1000000))
    if (!p.is_identity() && normalizes(p)) return true;
  return false;
}

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Digraph& d) : d_(d), refiner_(d) {}

  std::vector<Mask> run() {
    Cells cells{low_bits(d_.n)};
    Trace tr;
    refiner_.run(cells, {0}, tr, nullptr);
    visit(cells, automorphism_group(d_).group);
    return best_;
  }

 private:
  void visit(const Cells& cells, const PermGroup& stab) {
    if (discrete(cells, d_.n)) {
      std::vector<int> pos(d_.n);
      for (int i = 0; i < d_.n; ++i) pos[lowest(cells[i])] = i;
      std::vector<Mask> m(d_.n, 0);
      for (int i = 0; i < d_.n; ++i)
        for_each_bit(d_.out[lowest(cells[i])], [&](int w) { m[i] |= bit(pos[w]); });
      if (best_.empty() || m < best_) best_ = std::move(m);
      return;
    }
    const int t = target_cell(cells);
    const Partition orbs = orbits(stab);
    Mask done = 0;
    for_each_bit(cells[t], [&](int v) {
      if (done & bit(v)) return;
      for (Mask o : orbs)
        if (o & bit(v)) done |= o;
      Cells child = individualize(cells, t, v);
      Trace tr;
      refiner_.run(child, {t}, tr, nullptr);
      visit(child, stab.point_stabilizer(v));
    });
  }

  const Digraph& d_;
  Refiner refiner_;
  std::vector<Mask> best_;
};

}  // namespace

std::vector<Mask> canonical_form(const Digraph& d) {
  if (d.n < 1 || d.n > 10) throw Error("canonical_form: needs 1..10 vertices");
  return Canonizer(d).run();
}

}  // namespace grr
