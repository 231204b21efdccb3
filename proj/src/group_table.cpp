#include "grr/group_table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace grr {

std::string to_string(const BigInt& v) { return v.str(); }

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "a=" << a << ", b=" << b << ", c=" << c;
  return os.str();
}

}  // namespace

GroupTable::GroupTable(std::string name, int order, const std::vector<int>& table)
    : name_(std::move(name)), order_(order) {
  if (order < 1) throw Error("group order must be positive, got " + std::to_string(order));
  if (order > kMaxOrder)
    throw Error("group order " + std::to_string(order) + " exceeds the cap of " +
                std::to_string(kMaxOrder));
  const auto r = static_cast<std::size_t>(order);
  if (table.size() != r * r)
    throw Error("expected " + std::to_string(r * r) + " table entries, got " +
                std::to_string(table.size()));
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] < 0 || table[k] >= order)
      throw Error("entry " + std::to_string(table[k]) + " at row " + std::to_string(k / r) +
                  ", column " + std::to_string(k % r) + " out of range");
  }
  auto at = [&](int a, int b) { return table[a * r + b]; };

  for (int i = 0; i < order; ++i) {
    Mask seen = 0;
    for (int j = 0; j < order; ++j) seen |= bit(at(i, j));
    if (seen != all()) throw Error("row " + std::to_string(i) + " not a permutation");
  }
  for (int j = 0; j < order; ++j) {
    Mask seen = 0;
    for (int i = 0; i < order; ++i) seen |= bit(at(i, j));
    if (seen != all()) throw Error("column " + std::to_string(j) + " not a permutation");
  }

  int e = -1;
  for (int x = 0; x < order && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < order && ok; ++y) ok = at(x, y) == y && at(y, x) == y;
    if (ok) e = x;
  }
  if (e < 0) throw Error("no identity element");

  // Swap labels 0 and e so the identity is element 0.
  auto relabel = [e](int x) { return x == 0 ? e : (x == e ? 0 : x); };
  mul_.assign(r * r, 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      mul_[relabel(a) * r + relabel(b)] = static_cast<std::uint8_t>(relabel(at(a, b)));

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < order; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw Error("table not associative at " + triple(relabel(a), relabel(b), relabel(c)));
      }
    }

  inv_.assign(r, 0);
  for (int a = 0; a < order; ++a) {
    int found = -1;
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == 0) found = b;
    if (found < 0 || mul(found, a) != 0)
      throw Error("element " + std::to_string(relabel(a)) + " has no two-sided inverse");
    inv_[a] = static_cast<std::uint8_t>(found);
  }

  Mask span = 1;
  for (int x = 0; x < order; ++x) {
    if (span & bit(x)) continue;
    generators_.push_back(x);
    span = subgroup_closure(*this, span | bit(x));
  }
}

int GroupTable::element_order(int x) const {
  int k = 1;
  for (int p = x; p != 0; p = mul(p, x)) ++k;
  return k;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
  return e;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> GroupTable::right_translation(int g) const {
  std::vector<int> img(order_);
  for (int x = 0; x < order_; ++x) img[x] = mul(x, g);
  return img;
}

Mask subgroup_closure(const GroupTable& g, Mask seed) {
  std::vector<int> gens;
  for_each_bit(seed & ~Mask{1}, [&](int x) { gens.push_back(x); });
  Mask members = 1;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int s : gens) {
      const int y = g.mul(queue[k], s);
      if (!(members & bit(y))) {
        members |= bit(y);
        queue.push_back(y);
      }
    }
  }
  return members;
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error("bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

GroupTable cyclic(int n) {
  if (n < 1) throw Error("cyclic:n needs n >= 1");
  if (n > kMaxOrder) throw Error("cyclic:" + std::to_string(n) + " exceeds the order cap");
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return GroupTable("cyclic:" + std::to_string(n), n, t);
}

// r^i s^e has index i + n*e; s r s = r^-1.
GroupTable dihedral(int n) {
  if (n < 1) throw Error("dihedral:n needs n >= 1");
  const int r = 2 * n;
  if (r > kMaxOrder) throw Error("dihedral:" + std::to_string(n) + " exceeds the order cap");
  std::vector<int> t(r * r);
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      const int a = x % n, e = x / n, b = y % n, f = y / n;
      const int rot = ((a + (e ? -b : b)) % n + n) % n;
      t[x * r + y] = rot + n * ((e + f) % 2);
    }
  return GroupTable("dihedral:" + std::to_string(n), r, t);
}

// a^i x^e has index i + 2n*e; a^{2n} = 1, x^2 = a^n, x^-1 a x = a^-1.
GroupTable dicyclic(int n) {
  if (n < 1) throw Error("dicyclic:n needs n >= 1");
  const int m = 2 * n, r = 4 * n;
  if (r > kMaxOrder) throw Error("dicyclic:" + std::to_string(n) + " exceeds the order cap");
  std::vector<int> t(r * r);
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      const int i = x % m, e = x / m, j = y % m, f = y / m;
      int rot = i + (e ? -j : j);
      if (e + f == 2) rot += n;
      rot = ((rot % m) + m) % m;
      t[x * r + y] = rot + m * ((e + f) % 2);
    }
  std::string name = n == 2 ? "quaternion" : "dicyclic:" + std::to_string(n);
  return GroupTable(name, r, t);
}

GroupTable elem2(int k) {
  if (k < 0 || k > 6) throw Error("elem2:k needs 0 <= k <= 6");
  const int r = 1 << k;
  std::vector<int> t(r * r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) t[a * r + b] = a ^ b;
  return GroupTable("elem2:" + std::to_string(k), r, t);
}

bool is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

// Permutations in lexicographic order; the product applies the left factor first.
GroupTable permutation_group(int n, bool even_only, std::string name) {
  if (n < 1) throw Error(name + " needs n >= 1");
  std::vector<std::vector<int>> elems;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) elems.push_back(p);
    if (elems.size() > static_cast<std::size_t>(kMaxOrder))
      throw Error(name + " exceeds the order cap");
  } while (std::next_permutation(p.begin(), p.end()));
  const int r = static_cast<int>(elems.size());
  std::vector<int> t(r * r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = elems[b][elems[a][x]];
      t[a * r + b] = static_cast<int>(std::lower_bound(elems.begin(), elems.end(), c) - elems.begin());
    }
  return GroupTable(std::move(name), r, t);
}

}  // namespace

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string name) {
  const int ra = a.order(), rb = b.order(), r = ra * rb;
  if (r > kMaxOrder) throw Error(name + " exceeds the order cap");
  std::vector<int> t(r * r);
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      t[x * r + y] = a.mul(x % ra, y % ra) + ra * b.mul(x / ra, y / ra);
  return GroupTable(std::move(name), r, t);
}

GroupTable builtin_group(std::string_view desc) {
  if (desc == "quaternion") return dicyclic(2);
  const auto colon = desc.find(':');
  if (colon == std::string_view::npos) throw Error("unknown group descriptor '" + std::string(desc) + "'");
  const std::string_view family = desc.substr(0, colon);
  const std::string_view arg = desc.substr(colon + 1);
  if (family == "product") {
    const auto comma = arg.rfind(',');
    if (comma == std::string_view::npos) throw Error("product needs two descriptors: '" + std::string(desc) + "'");
    GroupTable left = builtin_group(arg.substr(0, comma));
    GroupTable right = builtin_group(arg.substr(comma + 1));
    return direct_product(left, right, std::string(desc));
  }
  const int n = parse_int(arg, desc);
  if (family == "cyclic") return cyclic(n);
  if (family == "dihedral") return dihedral(n);
  if (family == "dicyclic") return dicyclic(n);
  if (family == "elem2") return elem2(n);
  if (family == "sym") return permutation_group(n, false, "sym:" + std::to_string(n));
  if (family == "alt") return permutation_group(n, true, "alt:" + std::to_string(n));
  throw Error("unknown group family '" + std::string(family) + "'");
}

GroupTable parse_gtab(std::string_view text, std::string name) {
  std::vector<int> values;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) values.push_back(parse_int(tok, name));
  }
  if (values.empty()) throw Error(name + ": empty group table");
  const int r = values.front();
  values.erase(values.begin());
  return GroupTable(std::move(name), r, values);
}

std::string to_gtab(const GroupTable& g) {
  std::ostringstream os;
  os << "# " << g.name() << "\n" << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << "\n";
  }
  return os.str();
}

GroupTable load_group(std::string_view source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) return builtin_group(source.substr(prefix.size()));
  std::ifstream f{std::string(source)};
  if (f) {
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_gtab(buf.str(), std::string(source));
  }
  return builtin_group(source);
}

std::vector<std::vector<int>> table_automorphisms(const GroupTable& g) {
  const int r = g.order();
  const auto& gens = g.generators();
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> c;
    for (int x = 0; x < r; ++x)
      if (g.element_order(x) == g.element_order(s)) c.push_back(x);
    candidates.push_back(std::move(c));
  }

  std::vector<std::vector<int>> result;
  std::vector<int> images(gens.size());

  // Extends the generator images to an element map along a BFS of the
  // Cayley graph; returns false on inconsistency or non-bijectivity.
  auto extend = [&](std::vector<int>& map) {
    map.assign(r, -1);
    map[0] = 0;
    std::vector<int> queue{0};
    Mask hit = 1;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int x = queue[k];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int y = g.mul(x, gens[i]);
        const int fy = g.mul(map[x], images[i]);
        if (map[y] < 0) {
          if (hit & bit(fy)) return false;
          hit |= bit(fy);
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        if (map[g.mul(a, b)] != g.mul(map[a], map[b])) return false;
    return true;
  };

  std::vector<int> map;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (extend(map)) result.push_back(map);
      return;
    }
    for (int c : candidates[depth]) {
      images[depth] = c;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  // Identity first, remaining in lexicographic order of the map.
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace grr
