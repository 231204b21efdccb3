#include "grr/subgroup.hpp"

#include <algorithm>
#include <set>

namespace grr {

Subgroup::Subgroup(const GroupTable& owner, Mask members) : owner_(&owner), members_(members) {
  if (!(members & 1)) throw Error("subgroup must contain the identity");
  if (members & ~owner.all()) throw Error("subgroup mask has elements outside the group");
  for_each_bit(members, [&](int a) {
    if (!contains(owner.inv(a))) throw Error("set " + format_elements(members) + " not closed under inverses");
    for_each_bit(members, [&](int b) {
      if (!contains(owner.mul(a, b)))
        throw Error("set " + format_elements(members) + " not closed under multiplication");
    });
  });
  if (owner.order() % order() != 0) throw Error("subgroup order does not divide group order");
}

bool Subgroup::is_normal() const {
  const GroupTable& g = *owner_;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for_each_bit(members_, [&](int q) {
      if (!contains(g.mul(g.mul(g.inv(x), q), x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Mask Subgroup::right_coset(int y) const {
  Mask m = 0;
  for_each_bit(members_, [&](int q) { m |= bit(owner_->mul(q, y)); });
  return m;
}

Mask Subgroup::left_coset(int y) const {
  Mask m = 0;
  for_each_bit(members_, [&](int q) { m |= bit(owner_->mul(y, q)); });
  return m;
}

std::vector<Mask> Subgroup::right_cosets() const {
  std::vector<Mask> out;
  Mask left = owner_->all();
  while (left) {
    const Mask c = right_coset(lowest(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

std::vector<Subgroup> subgroups(const GroupTable& g, std::optional<int> max_index) {
  std::vector<Mask> cyclics;
  {
    std::set<Mask> seen;
    for (int x = 0; x < g.order(); ++x) {
      const Mask c = subgroup_closure(g, bit(x));
      if (seen.insert(c).second) cyclics.push_back(c);
    }
  }
  std::set<Mask> found(cyclics.begin(), cyclics.end());
  std::vector<Mask> frontier(cyclics.begin(), cyclics.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask h : frontier) {
      for (Mask c : cyclics) {
        if ((c & ~h) == 0) continue;
        const Mask joined = subgroup_closure(g, h | c);
        if (found.insert(joined).second) next.push_back(joined);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> masks(found.begin(), found.end());
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  std::vector<Subgroup> out;
  for (Mask m : masks) {
    if (max_index && g.order() / popcount(m) > *max_index) continue;
    out.emplace_back(g, m);
  }
  return out;
}

std::vector<Subgroup> index_two_subgroups(const GroupTable& g) {
  const auto& gens = g.generators();
  std::vector<Subgroup> out;
  if (g.order() % 2 != 0) return out;
  const std::size_t k = gens.size();
  for (std::size_t choice = 1; choice < (std::size_t{1} << k); ++choice) {
    // Sign of each element under the candidate character, filled by BFS.
    std::vector<int> sign(g.order(), -1);
    sign[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const int x = queue[q];
      for (std::size_t i = 0; i < k; ++i) {
        const int y = g.mul(x, gens[i]);
        const int s = sign[x] ^ static_cast<int>((choice >> i) & 1);
        if (sign[y] < 0) {
          sign[y] = s;
          queue.push_back(y);
        } else if (sign[y] != s) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    Mask kernel = 0;
    for (int x = 0; x < g.order() && ok; ++x) {
      for (int y = 0; y < g.order() && ok; ++y)
        ok = sign[g.mul(x, y)] == (sign[x] ^ sign[y]);
      if (sign[x] == 0) kernel |= bit(x);
    }
    if (ok) out.emplace_back(g, kernel);
  }
  return out;
}

Quotient quotient(const GroupTable& g, const Subgroup& k) {
  if (!k.is_normal()) throw Error("subgroup " + format_elements(k.mask()) + " is not normal in " + g.name());
  std::vector<Mask> cosets = k.right_cosets();
  const int m = static_cast<int>(cosets.size());
  std::vector<int> proj(g.order());
  for (int i = 0; i < m; ++i) for_each_bit(cosets[i], [&](int x) { proj[x] = i; });
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = proj[g.mul(lowest(cosets[i]), lowest(cosets[j]))];
  GroupTable q(g.name() + "/" + format_elements(k.mask()), m, table);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (proj[g.mul(x, y)] != q.mul(proj[x], proj[y]))
        throw ProofViolation("quotient projection is not a homomorphism");
  return {std::move(q), std::move(proj), std::move(cosets)};
}

}  // namespace grr
