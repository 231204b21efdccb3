#include "grr/cayley.hpp"

#include <sstream>

namespace grr {

Digraph::Digraph(std::vector<Mask> out_rows) : n(static_cast<int>(out_rows.size())), out(std::move(out_rows)) {
  if (n > kMaxOrder) throw Error("digraph exceeds " + std::to_string(kMaxOrder) + " vertices");
  in.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    if (out[u] & ~low_bits(n)) throw Error("arc to a missing vertex");
    for_each_bit(out[u], [&](int v) { in[v] |= bit(u); });
  }
}

CayleyDigraph build_cayley(const GroupTable& g, Mask s) {
  if (s & ~g.all()) throw Error("connection set has elements outside the group");
  const int r = g.order();
  std::vector<Mask> rows(r, 0);
  for (int u = 0; u < r; ++u) {
    for_each_bit(s, [&](int x) { rows[u] |= bit(g.mul(x, u)); });
    if (popcount(rows[u]) != popcount(s)) throw ProofViolation("Cayley out-degree differs from |S|");
  }
  CayleyDigraph d;
  d.group = &g;
  d.connection = s;
  d.graph = Digraph(std::move(rows));
  d.is_graph = d.graph.symmetric();
  d.loops_present = s & 1;
  return d;
}

EquitableResult is_equitable(const Digraph& d, const Partition& parts) {
  Mask seen = 0;
  for (Mask p : parts) {
    if (!p || (seen & p)) throw Error("parts do not form a partition");
    seen |= p;
  }
  if (seen != low_bits(d.n)) throw Error("parts do not cover the vertices");
  EquitableResult res;
  const int t = static_cast<int>(parts.size());
  res.matrix.assign(t, std::vector<int>(t, 0));
  for (int i = 0; i < t; ++i) {
    const int first = lowest(parts[i]);
    for (int j = 0; j < t; ++j) {
      const int k = popcount(d.out[first] & parts[j]);
      res.matrix[i][j] = k;
      Mask rest = parts[i] & ~bit(first);
      while (rest) {
        const int v = lowest(rest);
        rest &= rest - 1;
        if (popcount(d.out[v] & parts[j]) != k) {
          res = EquitableResult{false, {}, i, j, first, v};
          return res;
        }
      }
    }
  }
  res.equitable = true;
  return res;
}

OddQuotientGraph odd_quotient(const CayleyDigraph& d, const Partition& parts) {
  if (!d.is_graph) throw Error("odd quotient needs an undirected graph");
  for (Mask p : parts)
    if (popcount(p) != popcount(parts.front())) throw Error("odd quotient needs equal-size parts");
  EquitableResult eq = is_equitable(d.graph, parts);
  if (!eq.equitable) throw Error("odd quotient needs an equitable partition");
  OddQuotientGraph q;
  q.parts = parts;
  q.e = std::move(eq.matrix);
  const std::size_t t = parts.size();
  q.edges.assign(t, std::vector<bool>(t, false));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (q.e[i][j] != q.e[j][i]) throw ProofViolation("equitable equal-size partition with asymmetric e");
      if (i != j) q.edges[i][j] = q.e[i][j] % 2 == 1;
    }
  return q;
}

std::vector<int> parity_profile(const GroupTable& g, Mask s, const Subgroup& k) {
  if (!k.is_normal()) throw Error("parity_profile needs a normal subgroup");
  std::vector<int> out;
  for (Mask c : k.right_cosets()) out.push_back(popcount(s & c) % 2);
  (void)g;
  return out;
}

std::string export_adjacency(const Digraph& d) {
  std::ostringstream os;
  for (int u = 0; u < d.n; ++u) {
    os << u << ':';
    for_each_bit(d.out[u], [&](int v) { os << ' ' << v; });
    os << '\n';
  }
  return os.str();
}

}  // namespace grr
