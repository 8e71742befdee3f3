#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "fschur/errors.hpp"
#include "fschur/perm.hpp"
#include "fschur/rational.hpp"

namespace fschur {

// Finite permutation group with a base and strong generating set.
//
// The construction is a deterministic Schreier-Sims: strong generators are
// accumulated until every Schreier generator of every level sifts to the
// identity (a full clean verification pass), which certifies the BSGS.  All
// iteration orders are fixed, so identical generator lists always produce
// identical chains.  Immutable after construction.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("PermGroup: degree must be >= 1");
    for (const auto& g : generators) {
      if (g.degree() != degree)
        throw std::invalid_argument("PermGroup: generator degree mismatch");
      if (!g.is_identity() &&
          std::find(generators_.begin(), generators_.end(), g) == generators_.end())
        generators_.push_back(g);
    }
    strong_ = generators_;
    for (const auto& g : strong_) ensure_base_point(g);
    build_chain();
    order_ = 1;
    for (const auto& lvl : levels_) order_ *= static_cast<long>(lvl.orbit.size());
  }

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const mpz_class& order() const { return order_; }

  // Order as a machine integer; callers check caps first.
  std::uint64_t small_order() const {
    if (!order_.fits_ulong_p())
      throw CapExceededError("group order does not fit in a machine word", 0);
    return order_.get_ui();
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return strip(g, 0).first.is_identity();
  }

  bool is_subgroup_of(const PermGroup& big) const {
    for (const auto& g : generators_)
      if (!big.contains(g)) return false;
    return true;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    return true;
  }

  // All elements, sorted by image vectors.  This is the canonical element
  // order used project-wide (witness searches, class representatives).
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultEnumerationCap) const {
    if (order_ > cap)
      throw CapExceededError("group order " + order_.get_str() + " exceeds enumeration cap " +
                                 std::to_string(cap),
                             cap);
    std::vector<Permutation> out;
    out.reserve(order_.get_ui());
    collect(static_cast<int>(levels_.size()), Permutation::identity(degree_), out);
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  struct Level {
    int base_point = 0;
    std::vector<int> gens;                 // indices into strong_ fixing earlier base points
    std::vector<int> orbit;                // BFS discovery order
    std::vector<int> where;                // point -> index into orbit, -1 outside
    std::vector<Permutation> transversal;  // transversal[i] maps base_point to orbit[i]
  };

  // Guarantee that no strong generator fixes the whole base.
  void ensure_base_point(const Permutation& g) {
    for (int b : base_)
      if (g[static_cast<std::uint16_t>(b)] != b) return;
    for (int p = 0; p < degree_; ++p)
      if (g[static_cast<std::uint16_t>(p)] != p) {
        base_.push_back(p);
        return;
      }
  }

  void refresh_level(std::size_t j) {
    if (j >= levels_.size()) levels_.resize(j + 1);
    Level& lvl = levels_[j];
    lvl.base_point = base_[j];
    lvl.gens.clear();
    for (std::size_t i = 0; i < strong_.size(); ++i) {
      bool fixes_prefix = true;
      for (std::size_t k = 0; k < j; ++k)
        if (strong_[i][static_cast<std::uint16_t>(base_[k])] != base_[k]) {
          fixes_prefix = false;
          break;
        }
      if (fixes_prefix) lvl.gens.push_back(static_cast<int>(i));
    }
    lvl.orbit.assign(1, lvl.base_point);
    lvl.where.assign(degree_, -1);
    lvl.where[lvl.base_point] = 0;
    lvl.transversal.assign(1, Permutation::identity(degree_));
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i)
      for (int gi : lvl.gens) {
        int img = strong_[gi][static_cast<std::uint16_t>(lvl.orbit[i])];
        if (lvl.where[img] < 0) {
          lvl.where[img] = static_cast<int>(lvl.orbit.size());
          lvl.orbit.push_back(img);
          lvl.transversal.push_back(lvl.transversal[i] * strong_[gi]);
        }
      }
  }

  // Strip g through levels [start, end); returns (residue, level reached).
  std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t start) const {
    Permutation r = g;
    std::size_t j = start;
    for (; j < levels_.size(); ++j) {
      if (r.is_identity()) break;
      const Level& lvl = levels_[j];
      int img = r[static_cast<std::uint16_t>(lvl.base_point)];
      if (lvl.where[img] < 0) break;
      r = r * lvl.transversal[lvl.where[img]].inverse();
    }
    return {std::move(r), j};
  }

  // Accumulate strong generators until a full verification pass finds every
  // Schreier generator sifting to the identity.  Each failing residue, once
  // recorded, strictly grows some orbit (or opens a new base point), so the
  // loop terminates.
  void build_chain() {
    if (strong_.empty()) return;
    while (true) {
      for (std::size_t j = 0; j < base_.size(); ++j) refresh_level(j);
      std::optional<Permutation> failure;
      for (std::size_t j = 0; j < base_.size() && !failure; ++j) {
        const Level& lvl = levels_[j];
        for (std::size_t oi = 0; oi < lvl.orbit.size() && !failure; ++oi)
          for (int gi : lvl.gens) {
            int img = strong_[gi][static_cast<std::uint16_t>(lvl.orbit[oi])];
            Permutation schreier =
                lvl.transversal[oi] * strong_[gi] * lvl.transversal[lvl.where[img]].inverse();
            if (schreier.is_identity()) continue;
            Permutation r = strip(schreier, j + 1).first;
            if (r.is_identity()) continue;
            failure = std::move(r);
            break;
          }
      }
      if (!failure) break;
      ensure_base_point(*failure);
      strong_.push_back(std::move(*failure));
    }
  }

  // Every element factors uniquely as u_{k-1} * ... * u_1 * u_0 with u_j in
  // the level-j transversal (strip peels u_0 first).
  void collect(int level, const Permutation& prefix, std::vector<Permutation>& out) const {
    if (level == 0) {
      out.push_back(prefix);
      return;
    }
    const Level& lvl = levels_[level - 1];
    for (const auto& u : lvl.transversal) collect(level - 1, prefix * u, out);
  }

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  mpz_class order_;
};

// Complete conjugacy class decomposition, in canonical order: identity class
// first, then ascending (class size, element order of the representative,
// lexicographic images of the representative).  The representative of a
// class is its lexicographically minimal element.
class ClassData {
public:
  explicit ClassData(const PermGroup& group, std::uint64_t cap = kDefaultEnumerationCap)
      : degree_(group.degree()) {
    std::vector<Permutation> elems = group.elements(cap);
    order_ = elems.size();

    std::unordered_map<Permutation, int, PermHash> index;
    index.reserve(elems.size() * 2);
    for (const auto& e : elems) index.emplace(e, -1);

    const auto& gens = group.generators();
    for (const auto& e : elems) {
      if (index.find(e)->second >= 0) continue;
      // conjugation orbit closure; e is the minimal member since elems is sorted
      int cls = static_cast<int>(reps_.size());
      std::vector<Permutation> frontier{e};
      index.find(e)->second = cls;
      std::uint64_t size = 1;
      while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& h : frontier)
          for (const auto& s : gens) {
            Permutation c = h.conjugated_by(s);
            auto it = index.find(c);
            if (it == index.end())
              throw std::logic_error("ClassData: conjugate escaped the element set");
            if (it->second < 0) {
              it->second = cls;
              ++size;
              next.push_back(std::move(c));
            }
          }
        frontier = std::move(next);
      }
      reps_.push_back(e);
      sizes_.push_back(size);
    }

    // canonical class order
    std::vector<int> by(reps_.size());
    std::iota(by.begin(), by.end(), 0);
    std::sort(by.begin(), by.end(), [&](int a, int b) {
      if (sizes_[a] != sizes_[b]) return sizes_[a] < sizes_[b];
      std::int64_t oa = reps_[a].order(), ob = reps_[b].order();
      if (oa != ob) return oa < ob;
      return reps_[a] < reps_[b];
    });
    std::vector<int> newpos(by.size());
    for (std::size_t i = 0; i < by.size(); ++i) newpos[by[i]] = static_cast<int>(i);
    {
      std::vector<Permutation> reps2(reps_.size());
      std::vector<std::uint64_t> sizes2(sizes_.size());
      for (std::size_t i = 0; i < by.size(); ++i) {
        reps2[i] = reps_[by[i]];
        sizes2[i] = sizes_[by[i]];
      }
      reps_ = std::move(reps2);
      sizes_ = std::move(sizes2);
    }
    class_of_ = std::move(index);
    for (auto& kv : class_of_) kv.second = newpos[kv.second];

    rep_orders_.resize(reps_.size());
    exponent_ = 1;
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      rep_orders_[c] = reps_[c].order();
      exponent_ = std::lcm(exponent_, rep_orders_[c]);
    }
    inverse_map_.resize(reps_.size());
    square_map_.resize(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      inverse_map_[c] = class_index(reps_[c].inverse());
      square_map_[c] = class_index(reps_[c] * reps_[c]);
    }
    power_cache_.resize(reps_.size());
  }

  std::uint64_t group_order() const { return order_; }
  int degree() const { return degree_; }
  int num_classes() const { return static_cast<int>(reps_.size()); }
  const std::vector<Permutation>& reps() const { return reps_; }
  const std::vector<std::uint64_t>& sizes() const { return sizes_; }
  const std::vector<std::int64_t>& rep_orders() const { return rep_orders_; }
  std::int64_t exponent() const { return exponent_; }
  const std::vector<int>& inverse_map() const { return inverse_map_; }
  const std::vector<int>& square_map() const { return square_map_; }

  int class_index(const Permutation& g) const {
    auto it = class_of_.find(g);
    if (it == class_of_.end()) throw std::invalid_argument("class_index: element not in group");
    return it->second;
  }

  // Every element with its class index.  Unordered; callers must only fold
  // with order-independent operations.
  const std::unordered_map<Permutation, int, PermHash>& element_classes() const {
    return class_of_;
  }

  bool is_real_class(int c) const { return inverse_map_[c] == c; }

  // Class of rep(c)^k.  Power tables fill lazily one class at a time; the
  // walk over rep powers is cheap and most classes are never queried.
  int power_class(int c, std::int64_t k) const {
    std::lock_guard<std::mutex> lock(power_mutex_);
    auto& cache = power_cache_[c];
    std::int64_t m = rep_orders_[c];
    if (cache.empty()) {
      cache.resize(m);
      Permutation p = Permutation::identity(degree_);
      for (std::int64_t i = 0; i < m; ++i) {
        cache[i] = class_index(p);
        p = p * reps_[c];
      }
    }
    k %= m;
    if (k < 0) k += m;
    return cache[k];
  }

  // Number of elements whose square is trivial, identity included.
  std::uint64_t involution_count() const {
    std::uint64_t t = 0;
    for (std::size_t c = 0; c < reps_.size(); ++c)
      if (square_map_[c] == 0) t += sizes_[c];
    return t;
  }

private:
  int degree_;
  std::uint64_t order_ = 0;
  std::vector<Permutation> reps_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::int64_t> rep_orders_;
  std::int64_t exponent_ = 1;
  std::vector<int> inverse_map_;
  std::vector<int> square_map_;
  std::unordered_map<Permutation, int, PermHash> class_of_;
  mutable std::mutex power_mutex_;
  mutable std::vector<std::vector<int>> power_cache_;
};

namespace detail {

// Conjugation orbit of g under the group generated by gens, with a
// transversal: for every orbit member h, witness[h] satisfies g^witness = h.
struct ConjOrbit {
  std::vector<Permutation> members;  // BFS discovery order
  std::unordered_map<Permutation, Permutation, PermHash> witness;
};

inline ConjOrbit conjugation_orbit(const Permutation& g, const std::vector<Permutation>& gens) {
  ConjOrbit orb;
  orb.members.push_back(g);
  orb.witness.emplace(g, Permutation::identity(g.degree()));
  for (std::size_t i = 0; i < orb.members.size(); ++i) {
    Permutation h = orb.members[i];
    Permutation uh = orb.witness.at(h);
    for (const auto& s : gens) {
      Permutation c = h.conjugated_by(s);
      if (!orb.witness.count(c)) {
        orb.witness.emplace(c, uh * s);
        orb.members.push_back(std::move(c));
      }
    }
  }
  return orb;
}

}  // namespace detail

// Centralizer C_g = {x in G : xg = gx}, by orbit-stabilizer on the
// conjugation action: the Schreier generators of the point stabilizer of g
// generate C_g.  Checked against |G| = |C_g| * |class of g|.
inline PermGroup centralizer(const PermGroup& G, const Permutation& g) {
  if (!G.contains(g)) throw std::invalid_argument("centralizer: g not in G");
  auto orb = detail::conjugation_orbit(g, G.generators());
  std::set<Permutation> gens;
  for (const auto& h : orb.members) {
    const Permutation& uh = orb.witness.at(h);
    for (const auto& s : G.generators()) {
      Permutation schreier = uh * s * orb.witness.at(h.conjugated_by(s)).inverse();
      if (!schreier.is_identity()) gens.insert(std::move(schreier));
    }
  }
  PermGroup C(G.degree(), std::vector<Permutation>(gens.begin(), gens.end()));
  if (C.order() * static_cast<long>(orb.members.size()) != G.order())
    throw std::logic_error("centralizer: orbit-stabilizer identity violated");
  return C;
}

// Some x in G with x^-1 g x = g^-1 if one exists, read off the Schreier tree
// of the conjugation orbit.
inline std::optional<Permutation> inverting_witness(const PermGroup& G, const Permutation& g) {
  if (!G.contains(g)) throw std::invalid_argument("inverting_witness: g not in G");
  auto orb = detail::conjugation_orbit(g, G.generators());
  auto it = orb.witness.find(g.inverse());
  if (it == orb.witness.end()) return std::nullopt;
  return it->second;
}

// N_g, the normalizer of the set {g, g^-1}: equal to C_g when g^2 = 1 or g is
// not real, otherwise <C_g, x> with [N_g : C_g] = 2.
inline PermGroup normalizer_pair(const PermGroup& G, const Permutation& g) {
  PermGroup C = centralizer(G, g);
  if ((g * g).is_identity()) return C;
  auto x = inverting_witness(G, g);
  if (!x) return C;
  std::vector<Permutation> gens = C.generators();
  gens.push_back(*x);
  PermGroup N(G.degree(), std::move(gens));
  if (N.order() != 2 * C.order())
    throw std::logic_error("normalizer_pair: index over the centralizer is not 2");
  return N;
}

// Centralizer of a whole subgroup: elements commuting with every generator
// of H, grown incrementally so the BSGS always sees few generators.
inline PermGroup centralizer_of_subgroup(const PermGroup& G, const PermGroup& H,
                                         std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Permutation> gens;
  PermGroup C = PermGroup::trivial(G.degree());
  for (const auto& x : G.elements(cap)) {
    bool commutes = true;
    for (const auto& h : H.generators())
      if (x * h != h * x) {
        commutes = false;
        break;
      }
    if (commutes && !C.contains(x)) {
      gens.push_back(x);
      C = PermGroup(G.degree(), gens);
    }
  }
  return C;
}

namespace detail {

// Sorted element set of <base, extra> where extra commutes with the subgroup
// base elementwise.
inline std::vector<Permutation> abelian_closure(const std::vector<Permutation>& base,
                                                const Permutation& extra) {
  std::set<Permutation> all(base.begin(), base.end());
  Permutation p = extra;
  while (!p.is_identity()) {
    for (const auto& b : base) all.insert(b * p);
    p = p * extra;
  }
  return {all.begin(), all.end()};
}

// Lexicographically least G-conjugate of a subgroup element set; the
// fingerprint used to deduplicate subgroups up to conjugacy.
inline std::vector<Permutation> least_conjugate(const std::vector<Permutation>& sub,
                                                const std::vector<Permutation>& group_elems) {
  std::vector<Permutation> best = sub;
  std::vector<Permutation> tmp(sub.size());
  for (const auto& x : group_elems) {
    for (std::size_t i = 0; i < sub.size(); ++i) tmp[i] = sub[i].conjugated_by(x);
    std::sort(tmp.begin(), tmp.end());
    if (tmp < best) best = tmp;
  }
  return best;
}

inline bool commutes_with_all(const std::vector<Permutation>& sub, const Permutation& b) {
  for (const auto& s : sub)
    if (s * b != b * s) return false;
  return true;
}

}  // namespace detail

// All abelian subgroups generated by at most max_gens elements, one
// representative per G-conjugacy class, sorted by (order, element set).
// Includes the trivial subgroup.
inline std::vector<PermGroup> abelian_subgroups(const PermGroup& G, int max_gens,
                                                std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Permutation> elems = G.elements(cap);
  const Permutation id = Permutation::identity(G.degree());

  std::set<std::vector<Permutation>> found;
  found.insert({id});
  std::vector<std::vector<Permutation>> frontier{{id}};
  for (int level = 0; level < max_gens; ++level) {
    std::vector<std::vector<Permutation>> next;
    for (const auto& sub : frontier)
      for (const auto& b : elems) {
        if (b.is_identity() || std::binary_search(sub.begin(), sub.end(), b)) continue;
        if (!detail::commutes_with_all(sub, b)) continue;
        auto bigger = detail::abelian_closure(sub, b);
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    frontier = std::move(next);
  }

  std::set<std::vector<Permutation>> canonical;
  for (const auto& sub : found) canonical.insert(detail::least_conjugate(sub, elems));
  std::vector<PermGroup> out;
  out.reserve(canonical.size());
  for (const auto& fp : canonical) out.emplace_back(G.degree(), fp);
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return out;
}

// All elementary abelian 2-subgroups (every non-identity element an
// involution), one per conjugacy class, trivial subgroup included.  No
// generator bound: the rank is capped by log2 |G|.
inline std::vector<PermGroup> elementary_abelian_2_subgroups(
    const PermGroup& G, std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Permutation> elems = G.elements(cap);
  std::vector<Permutation> involutions;
  for (const auto& e : elems)
    if (!e.is_identity() && (e * e).is_identity()) involutions.push_back(e);

  const Permutation id = Permutation::identity(G.degree());
  std::set<std::vector<Permutation>> found;
  found.insert({id});
  std::vector<std::vector<Permutation>> frontier{{id}};
  while (!frontier.empty()) {
    std::vector<std::vector<Permutation>> next;
    for (const auto& sub : frontier)
      for (const auto& b : involutions) {
        if (std::binary_search(sub.begin(), sub.end(), b)) continue;
        if (!detail::commutes_with_all(sub, b)) continue;
        std::vector<Permutation> bigger = sub;  // closure = sub + sub*b
        for (const auto& s : sub) bigger.push_back(s * b);
        std::sort(bigger.begin(), bigger.end());
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    frontier = std::move(next);
  }

  std::set<std::vector<Permutation>> canonical;
  for (const auto& sub : found) canonical.insert(detail::least_conjugate(sub, elems));
  std::vector<PermGroup> out;
  out.reserve(canonical.size());
  for (const auto& fp : canonical) out.emplace_back(G.degree(), fp);
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return out;
}

// Invariant factors (largest first) of an abelian group, derived from element
// order counts.  Used by reports and tests only.
inline std::vector<std::int64_t> abelian_invariants(const PermGroup& G,
                                                    std::uint64_t cap = kDefaultEnumerationCap) {
  if (!G.is_abelian()) throw std::invalid_argument("abelian_invariants: group is not abelian");
  std::vector<Permutation> elems = G.elements(cap);
  std::uint64_t n = elems.size();
  if (n == 1) return {};

  std::vector<std::int64_t> primes;
  {
    std::uint64_t m = n;
    for (std::int64_t p = 2; static_cast<std::uint64_t>(p) * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(static_cast<std::int64_t>(m));
  }

  // per prime p: #(x : x^{p^j} = 1) = p^{c_j}; the number of cyclic factors
  // of order >= p^j is c_j - c_{j-1}
  std::map<std::int64_t, std::vector<int>> parts;  // p -> factor exponents, descending
  for (std::int64_t p : primes) {
    std::vector<int> c{0};
    std::int64_t pj = 1;
    while (true) {
      pj *= p;
      std::uint64_t cnt = 0;
      for (const auto& e : elems)
        if (e.power(pj).is_identity()) ++cnt;
      int lg = 0;
      for (std::uint64_t v = cnt; v > 1; v /= p) {
        if (v % p != 0) throw std::logic_error("abelian_invariants: count is not a power of p");
        ++lg;
      }
      if (lg == c.back()) break;
      c.push_back(lg);
    }
    auto& part = parts[p];
    for (std::size_t j = 1; j < c.size(); ++j) {
      int k = c[j] - c[j - 1];
      for (int i = 0; i < k; ++i) {
        if (static_cast<std::size_t>(i) >= part.size()) part.push_back(0);
        part[i] += 1;
      }
    }
  }

  std::size_t rank = 0;
  for (const auto& [p, part] : parts) rank = std::max(rank, part.size());
  std::vector<std::int64_t> factors(rank, 1);
  for (const auto& [p, part] : parts)
    for (std::size_t i = 0; i < part.size(); ++i)
      for (int j = 0; j < part[i]; ++j) factors[i] *= p;
  return factors;  // descending divisibility: factors[i+1] | factors[i]
}

}  // namespace fschur
