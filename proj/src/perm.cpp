#include "grr/perm.hpp"

#include <numeric>
#include <sstream>

namespace grr {

Permutation::Permutation(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxOrder) throw Error("permutation degree " + std::to_string(n) + " exceeds the cap");
  Mask seen = 0;
  for (int x : images) {
    if (x < 0 || x >= n || (seen & bit(x))) throw Error("image array is not a permutation");
    seen |= bit(x);
  }
  img_.assign(images.begin(), images.end());
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(v);
}

Permutation Permutation::parse(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> v;
  int x;
  while (in >> x) v.push_back(x);
  if (!in.eof()) throw Error("bad permutation line '" + line + "'");
  return Permutation(v);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q = *this;
  for (std::size_t i = 0; i < img_.size(); ++i) q.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return q;
}

Mask Permutation::apply(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](int x) { out |= bit(img_[x]); });
  return out;
}

Permutation Permutation::operator*(const Permutation& q) const {
  Permutation r = *this;
  for (auto& x : r.img_) x = q.img_[x];
  return r;
}

std::string Permutation::to_line() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < img_.size(); ++i) os << (i ? " " : "") << int(img_[i]);
  return os.str();
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  Mask seen = 0;
  for (int i = 0; i < degree(); ++i) {
    if ((seen & bit(i)) || img_[i] == i) continue;
    os << '(';
    for (int j = i; !(seen & bit(j)); j = img_[j]) {
      seen |= bit(j);
      os << (j == i ? "" : " ") << j;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
  if (degree < 1 || degree > kMaxOrder) throw Error("permutation group degree out of range");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error("generator degree mismatch");
    add_generator(g);
  }
}

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<int> t(degree), c(degree);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
    gens.emplace_back(t);
    if (degree > 2) gens.emplace_back(c);
  }
  return PermGroup(degree, std::move(gens));
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (const auto& l : levels_) n *= static_cast<unsigned>(l.orbit.size());
  return n;
}

long long PermGroup::order_if_at_most(long long cap) const {
  long long n = 1;
  for (const auto& l : levels_) {
    n *= static_cast<long long>(l.orbit.size());
    if (n > cap) return -1;
  }
  return n;
}

PermGroup::Sift PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const ChainLevel& L = levels_[l];
    const int k = L.slot[g(L.base)];
    if (k < 0) return {l, std::move(g)};
    g = g * L.transversal_inv[k];
  }
  return {levels_.size(), std::move(g)};
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Sift s = sift(p, 0);
  return s.level == levels_.size() && s.residue.is_identity();
}

void PermGroup::rebuild_level(std::size_t i) {
  ChainLevel& L = levels_[i];
  L.orbit.assign(1, L.base);
  L.slot.assign(degree_, -1);
  L.slot[L.base] = 0;
  L.transversal.assign(1, Permutation::identity(degree_));
  L.transversal_inv.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (const auto& s : L.gens) {
      const int y = s(L.orbit[k]);
      if (L.slot[y] >= 0) continue;
      L.slot[y] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(y);
      L.transversal.push_back(L.transversal[k] * s);
      L.transversal_inv.push_back(L.transversal.back().inverse());
    }
  }
}

namespace {
int least_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return -1;
}
}  // namespace

void PermGroup::add_generator(const Permutation& g) {
  if (g.is_identity() || contains(g)) return;
  gens_.push_back(g);
  std::size_t j = 0;
  while (j < levels_.size() && g(levels_[j].base) == levels_[j].base) ++j;
  if (j == levels_.size()) {
    levels_.push_back({});
    levels_.back().base = least_moved_point(g);
  }
  for (std::size_t l = 0; l <= j; ++l) {
    levels_[l].gens.push_back(g);
    rebuild_level(l);
  }
  complete();
}

void PermGroup::complete() {
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    // Copies: rebuilding deeper levels may reallocate levels_.
    const std::vector<int> orbit = levels_[i].orbit;
    const std::vector<Permutation> gens = levels_[i].gens;
    for (std::size_t k = 0; k < orbit.size() && !restart; ++k) {
      for (const auto& s : gens) {
        const ChainLevel& L = levels_[i];
        const Permutation h = L.transversal[k] * s * L.transversal_inv[L.slot[s(orbit[k])]];
        if (h.is_identity()) continue;
        Sift r = sift(h, static_cast<std::size_t>(i) + 1);
        if (r.level == levels_.size() && r.residue.is_identity()) continue;
        if (r.level == levels_.size()) {
          levels_.push_back({});
          levels_.back().base = least_moved_point(r.residue);
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= r.level; ++l) {
          levels_[l].gens.push_back(r.residue);
          rebuild_level(l);
        }
        i = static_cast<long>(r.level);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
}

std::vector<Permutation> PermGroup::elements(long long cap) const {
  const long long n = order_if_at_most(cap);
  if (n < 0) throw Error("group of order " + to_string(order()) + " too large to enumerate (cap " + std::to_string(cap) + ")");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) out.push_back(unrank(k));
  return out;
}

long long PermGroup::rank(const Permutation& p) const {
  Permutation g = p;
  long long r = 0;
  for (const auto& L : levels_) {
    const int k = L.slot[g(L.base)];
    if (k < 0) throw Error("rank of a non-member");
    r = r * static_cast<long long>(L.orbit.size()) + k;
    g = g * L.transversal_inv[k];
  }
  if (!g.is_identity()) throw Error("rank of a non-member");
  return r;
}

Permutation PermGroup::unrank(long long k) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto m = static_cast<long long>(levels_[l].orbit.size());
    g = g * levels_[l].transversal[k % m];
    k /= m;
  }
  return g;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[l].orbit.size() - 1);
    g = g * levels_[l].transversal[pick(rng)];
  }
  return g;
}

std::vector<int> PermGroup::orbit(int p) const {
  std::vector<int> out{p};
  Mask seen = bit(p);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : gens_) {
      const int y = s(out[k]);
      if (!(seen & bit(y))) {
        seen |= bit(y);
        out.push_back(y);
      }
    }
  return out;
}

bool PermGroup::is_transitive() const { return static_cast<int>(orbit(0).size()) == degree_; }

PermGroup PermGroup::point_stabilizer(int p) const {
  if (!levels_.empty() && levels_[0].base == p) {
    std::vector<Permutation> gens = levels_.size() > 1 ? levels_[1].gens : std::vector<Permutation>{};
    return PermGroup(degree_, std::move(gens));
  }
  // Schreier generators u_b * s * u_{b^s}^-1 over the orbit of p.
  std::vector<int> orb{p};
  std::vector<int> slot(degree_, -1);
  slot[p] = 0;
  std::vector<Permutation> trans{Permutation::identity(degree_)};
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& s : gens_) {
      const int y = s(orb[k]);
      if (slot[y] >= 0) continue;
      slot[y] = static_cast<int>(orb.size());
      orb.push_back(y);
      trans.push_back(trans[k] * s);
    }
  std::vector<Permutation> schreier;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& s : gens_) {
      Permutation h = trans[k] * s * trans[slot[s(orb[k])]].inverse();
      if (!h.is_identity()) schreier.push_back(std::move(h));
    }
  PermGroup stab(degree_, std::move(schreier));
  if (stab.order() * orb.size() != order())
    throw ProofViolation("orbit-stabilizer identity failed");
  return stab;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree_ != degree_) return false;
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other) && other.is_subgroup_of(*this);
}

std::string serialize(const PermGroup& g) {
  std::string out;
  for (const auto& p : g.generators()) out += p.to_line() + "\n";
  return out;
}

PermGroup parse_perm_group(int degree, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(Permutation::parse(line));
  }
  return PermGroup(degree, std::move(gens));
}

}  // namespace grr
