#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "fschur/cyclo.hpp"
#include "fschur/errors.hpp"
#include "fschur/group.hpp"
#include "fschur/modp.hpp"

namespace fschur {

// A group together with its class data; the common owner object for
// characters and tables.
struct ClassedGroup {
  PermGroup group;
  ClassData classes;
  explicit ClassedGroup(PermGroup g, std::uint64_t cap = kDefaultEnumerationCap)
      : group(std::move(g)), classes(group, cap) {}
};

using ClassedGroupPtr = std::shared_ptr<const ClassedGroup>;

inline ClassedGroupPtr make_classed(PermGroup g, std::uint64_t cap = kDefaultEnumerationCap) {
  return std::make_shared<const ClassedGroup>(std::move(g), cap);
}

// A class function with exact cyclotomic values, indexed by class.
class Character {
public:
  Character(ClassedGroupPtr owner, std::vector<Cyclotomic> values)
      : owner_(std::move(owner)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != owner_->classes.num_classes())
      throw std::invalid_argument("Character: one value per class required");
  }

  const ClassedGroupPtr& owner() const { return owner_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& value(int c) const { return values_[c]; }

  long degree() const {
    auto d = values_[0].as_integer();
    if (!d) throw std::logic_error("Character: degree is not a rational integer");
    return *d;
  }

  friend bool operator==(const Character& a, const Character& b) {
    return a.owner_ == b.owner_ && a.values_ == b.values_;
  }

  Character operator+(const Character& o) const {
    if (owner_ != o.owner_) throw std::invalid_argument("Character: owner mismatch");
    std::vector<Cyclotomic> v(values_.size());
    for (std::size_t c = 0; c < values_.size(); ++c) v[c] = values_[c] + o.values_[c];
    return Character(owner_, std::move(v));
  }

private:
  ClassedGroupPtr owner_;
  std::vector<Cyclotomic> values_;
};

// (a, b) = (1/|G|) sum_K |K| a(K) conj(b(K)); a non-negative integer when
// both arguments are characters.  Exact; throws if the result is irrational.
inline Rational inner_product(const Character& a, const Character& b) {
  if (a.owner() != b.owner()) throw std::invalid_argument("inner_product: owner mismatch");
  const ClassData& cd = a.owner()->classes;
  Cyclotomic acc(0);
  for (int c = 0; c < cd.num_classes(); ++c)
    acc += Rational(static_cast<long>(cd.sizes()[c])) *
           (a.value(c) * b.value(cd.inverse_map()[c]));
  auto r = acc.as_rational();
  if (!r) throw std::logic_error("inner_product: value is not rational");
  return *r / Rational(static_cast<long>(cd.group_order()));
}

namespace detail {

// Stable serialization of a value, used only for ordering irreducibles.
inline std::string cyclo_sort_key(const Cyclotomic& v) {
  std::string s = std::to_string(v.conductor()) + ":";
  for (const auto& c : v.coeffs()) s += c.str() + ",";
  return s;
}

// Image of a value under zeta_e -> z_e in GF(p); the value's conductor must
// divide e and its denominators must be prime to p.
inline modp::i64 value_mod_p(const Cyclotomic& v, modp::i64 p, modp::i64 z_e, std::int64_t e) {
  if (e % v.conductor() != 0) throw std::logic_error("value_mod_p: conductor does not divide e");
  modp::i64 zm = modp::pow(z_e, e / v.conductor(), p);
  modp::i64 acc = 0, zt = 1;
  for (const auto& coeff : v.coeffs()) {
    if (!coeff.is_zero()) {
      modp::i64 num = mpz_class(coeff.numerator() % p).get_si();
      modp::i64 den = mpz_class(coeff.denominator() % p).get_si();
      if (num < 0) num += p;
      acc = (acc + modp::mul(modp::mul(num, modp::inv(den, p), p), zt, p)) % p;
    }
    zt = modp::mul(zt, zm, p);
  }
  return acc;
}

}  // namespace detail

// Exact complex character table, computed with the Burnside-Dixon-Schneider
// algorithm: simultaneous diagonalization of the class-multiplication
// matrices over GF(p) for the smallest prime p = 1 (mod exponent) above
// 2*sqrt|G|, followed by the discrete-Fourier lift of eigenvalue
// multiplicities to Q(zeta).  Both orthogonality relations are asserted
// before the constructor returns.
class CharacterTable {
public:
  explicit CharacterTable(ClassedGroupPtr owner) : owner_(std::move(owner)) {
    build();
    verify();
  }

  const ClassedGroupPtr& owner() const { return owner_; }
  const ClassData& classes() const { return owner_->classes; }
  const std::vector<Character>& irreducibles() const { return irreducibles_; }
  std::int64_t prime_used() const { return prime_; }

  int index_of(const Character& chi) const {
    for (std::size_t i = 0; i < irreducibles_.size(); ++i)
      if (irreducibles_[i] == chi) return static_cast<int>(i);
    return -1;
  }

private:
  void build() {
    const ClassData& cd = owner_->classes;
    const int k = cd.num_classes();
    if (k > 512)
      throw CapExceededError("class count " + std::to_string(k) + " exceeds the table cap", 512);
    const std::uint64_t n = cd.group_order();
    const std::int64_t e = cd.exponent();

    modp::i64 lower = 1;
    while (static_cast<std::uint64_t>(lower) * lower <= 4 * n) ++lower;  // lower > 2 sqrt n
    prime_ = modp::dixon_prime(e, lower);
    const modp::i64 p = prime_;

    // elements grouped by class, for the class-multiplication coefficients
    std::vector<std::vector<Permutation>> by_class(k);
    {
      std::vector<Permutation> elems = owner_->group.elements();
      for (auto& g : elems) {
        int c = cd.class_index(g);
        by_class[c].push_back(std::move(g));
      }
    }

    // class matrix A_i with (A_i)[j][l] = #{(x,y) in K_i x K_j : xy = rep_l}
    auto class_matrix = [&](int i) {
      modp::Mat m(k, modp::Vec(k, 0));
      for (int l = 0; l < k; ++l) {
        const Permutation& t = cd.reps()[l];
        for (const auto& x : by_class[i]) {
          int j = cd.class_index(x.inverse() * t);
          m[j][l] = (m[j][l] + 1) % p;
        }
      }
      return m;
    };

    // iterative splitting of GF(p)^k into joint eigenlines
    std::vector<modp::Mat> spaces;
    {
      modp::Mat full(k, modp::Vec(k, 0));
      for (int i = 0; i < k; ++i) full[i][i] = 1;
      spaces.push_back(std::move(full));
    }
    for (int i = 1; i < k; ++i) {
      bool all_lines = true;
      for (const auto& w : spaces)
        if (w.size() > 1) all_lines = false;
      if (all_lines) break;

      modp::Mat a = class_matrix(i);
      std::vector<modp::Mat> next;
      for (auto& w : spaces) {
        const std::size_t dim = w.size();
        if (dim == 1) {
          next.push_back(std::move(w));
          continue;
        }
        std::vector<int> pivots;
        {  // w is kept in rref; recover its pivot columns
          modp::Mat copy = w;
          pivots = modp::rref(copy, p);
        }
        // restriction of A to the invariant subspace, in basis coordinates
        modp::Mat r(dim, modp::Vec(dim, 0));
        for (std::size_t j = 0; j < dim; ++j) {
          modp::Vec img = modp::mat_vec(a, w[j], p);
          modp::Vec coords(dim);
          for (std::size_t t = 0; t < dim; ++t) coords[t] = img[pivots[t]];
          for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c) {
            modp::i64 acc = 0;
            for (std::size_t t = 0; t < dim; ++t) acc = (acc + coords[t] * w[t][c]) % p;
            if (acc != img[c] % p)
              throw std::logic_error("character_table: subspace is not invariant");
          }
          for (std::size_t t = 0; t < dim; ++t) r[t][j] = coords[t];
        }
        modp::Vec roots = modp::poly_roots(modp::charpoly(r, p), p);
        std::size_t total = 0;
        for (modp::i64 lambda : roots) {
          modp::Mat shifted = r;
          for (std::size_t t = 0; t < dim; ++t) shifted[t][t] = (shifted[t][t] - lambda % p + p) % p;
          modp::Mat ker = modp::kernel(std::move(shifted), p);
          if (ker.empty()) continue;
          modp::Mat sub;
          for (const auto& coords : ker) {
            modp::Vec vec(k, 0);
            for (std::size_t t = 0; t < dim; ++t)
              for (int c = 0; c < k; ++c) vec[c] = (vec[c] + coords[t] * w[t][c]) % p;
            sub.push_back(std::move(vec));
          }
          modp::rref(sub, p);
          total += sub.size();
          next.push_back(std::move(sub));
        }
        if (total != dim)
          throw std::logic_error("character_table: eigenspace splitting lost dimension");
      }
      spaces = std::move(next);
    }
    for (const auto& w : spaces)
      if (w.size() != 1)
        throw std::logic_error("character_table: class algebra did not split to lines");
    if (static_cast<int>(spaces.size()) != k)
      throw std::logic_error("character_table: wrong number of eigenlines");

    // lift each eigenline to an exact irreducible character
    const modp::i64 z_e = modp::pow(modp::smallest_primitive_root(p), (p - 1) / e, p);
    const modp::i64 n_mod = static_cast<modp::i64>(n % static_cast<std::uint64_t>(p));
    for (const auto& w : spaces) {
      modp::Vec v = w[0];
      if (v[0] == 0) throw std::logic_error("character_table: eigenvector vanishes at the identity");
      modp::i64 scale = modp::inv(v[0], p);
      for (auto& x : v) x = modp::mul(x, scale, p);

      modp::i64 s = 0;
      for (int j = 0; j < k; ++j) {
        modp::i64 kj = static_cast<modp::i64>(cd.sizes()[j] % static_cast<std::uint64_t>(p));
        s = (s + modp::mul(modp::mul(v[j], v[cd.inverse_map()[j]], p), modp::inv(kj, p), p)) % p;
      }
      modp::i64 d2 = modp::mul(n_mod, modp::inv(s, p), p);
      modp::i64 d = modp::sqrt_in_half_range(d2, p);

      modp::Vec chibar(k);
      for (int j = 0; j < k; ++j) {
        modp::i64 kj = static_cast<modp::i64>(cd.sizes()[j] % static_cast<std::uint64_t>(p));
        chibar[j] = modp::mul(modp::mul(d, v[j], p), modp::inv(kj, p), p);
      }

      std::vector<Cyclotomic> values(k);
      for (int j = 0; j < k; ++j) {
        const std::int64_t m = cd.rep_orders()[j];
        const modp::i64 zm = modp::pow(z_e, e / m, p);
        const modp::i64 inv_m = modp::inv(m % p, p);
        Cyclotomic val(0);
        std::int64_t mu_sum = 0;
        for (std::int64_t t = 0; t < m; ++t) {
          modp::i64 acc = 0;
          for (std::int64_t st = 0; st < m; ++st) {
            modp::i64 zpow = modp::pow(zm, ((m - (t * st) % m) % m), p);
            acc = (acc + modp::mul(chibar[cd.power_class(j, st)], zpow, p)) % p;
          }
          modp::i64 mu = modp::mul(acc, inv_m, p);
          if (mu > d) throw std::logic_error("character_table: eigenvalue multiplicity out of range");
          mu_sum += mu;
          if (mu > 0) val += Rational(mu) * Cyclotomic::zeta(static_cast<int>(m), t);
        }
        if (mu_sum != d)
          throw std::logic_error("character_table: multiplicities do not sum to the degree");
        if (detail::value_mod_p(val, p, z_e, e) != chibar[j])
          throw std::logic_error("character_table: lifted value does not reduce to the modular value");
        values[j] = std::move(val);
      }
      irreducibles_.emplace_back(owner_, std::move(values));
    }

    // canonical order: ascending degree, then lexicographic value vectors
    std::sort(irreducibles_.begin(), irreducibles_.end(), [](const Character& a, const Character& b) {
      long da = a.degree(), db = b.degree();
      if (da != db) return da < db;
      for (std::size_t c = 0; c < a.values().size(); ++c) {
        int cmp = cyclo_compare(a.value(c), b.value(c));
        if (cmp != 0) return cmp < 0;
      }
      return false;
    });
  }

  void verify() const {
    const ClassData& cd = owner_->classes;
    const int k = cd.num_classes();
    const Rational order(static_cast<long>(cd.group_order()));

    mpz_class degree_sq_sum = 0;
    for (const auto& chi : irreducibles_) degree_sq_sum += mpz_class(chi.degree()) * chi.degree();
    if (degree_sq_sum != mpz_class(static_cast<unsigned long>(cd.group_order())))
      throw std::logic_error("character_table: sum of squared degrees is not |G|");

    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        Rational ip = inner_product(irreducibles_[i], irreducibles_[j]);
        if (ip != (i == j ? Rational(1) : Rational(0)))
          throw std::logic_error("character_table: row orthogonality failed");
      }
    for (int c1 = 0; c1 < k; ++c1)
      for (int c2 = c1; c2 < k; ++c2) {
        Cyclotomic acc(0);
        for (const auto& chi : irreducibles_)
          acc += chi.value(c1) * chi.value(cd.inverse_map()[c2]);
        Cyclotomic expected(0);
        if (c1 == c2)
          expected = Cyclotomic(Rational(static_cast<long>(cd.group_order() / cd.sizes()[c1])));
        if (acc != expected)
          throw std::logic_error("character_table: column orthogonality failed");
      }
  }

  ClassedGroupPtr owner_;
  std::vector<Character> irreducibles_;
  std::int64_t prime_ = 0;
};

using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

// Induced character from a subgroup: ind(g) = |G| / (|K_g| |H|) *
// sum of chi over (class of g in G) intersect H.
inline Character induce(const Character& chi, const ClassedGroupPtr& big) {
  const ClassedGroup& H = *chi.owner();
  const ClassedGroup& G = *big;
  if (!H.group.is_subgroup_of(G.group)) throw std::invalid_argument("induce: H is not a subgroup");
  const int k = G.classes.num_classes();
  std::vector<Cyclotomic> sums(k, Cyclotomic(0));
  for (const auto& [h, hc] : H.classes.element_classes())
    sums[G.classes.class_index(h)] += chi.value(hc);
  std::vector<Cyclotomic> values(k);
  const Rational scale_num(static_cast<long>(G.classes.group_order()));
  const Rational order_h(static_cast<long>(H.classes.group_order()));
  for (int c = 0; c < k; ++c) {
    Rational scale = scale_num / (Rational(static_cast<long>(G.classes.sizes()[c])) * order_h);
    values[c] = scale * sums[c];
  }
  return Character(big, std::move(values));
}

// Restriction along the class embedding.
inline Character restrict_character(const Character& chi, const ClassedGroupPtr& sub) {
  const ClassedGroup& H = *sub;
  const ClassedGroup& G = *chi.owner();
  if (!H.group.is_subgroup_of(G.group))
    throw std::invalid_argument("restrict_character: H is not a subgroup");
  std::vector<Cyclotomic> values(H.classes.num_classes());
  for (int c = 0; c < H.classes.num_classes(); ++c)
    values[c] = chi.value(G.classes.class_index(H.classes.reps()[c]));
  return Character(sub, std::move(values));
}

// chi^x(h) = chi(x h x^-1), for x normalizing the owner group.
inline Character conjugate_character(const Character& chi, const Permutation& x) {
  const ClassedGroup& H = *chi.owner();
  for (const auto& s : H.group.generators())
    if (!H.group.contains(s.conjugated_by(x)))
      throw std::invalid_argument("conjugate_character: x does not normalize the group");
  Permutation xinv = x.inverse();
  std::vector<Cyclotomic> values(H.classes.num_classes());
  for (int c = 0; c < H.classes.num_classes(); ++c)
    values[c] = chi.value(H.classes.class_index(H.classes.reps()[c].conjugated_by(xinv)));
  return Character(chi.owner(), std::move(values));
}

// Dual character: values composed with the class-inverse map.
inline Character dual_character(const Character& chi) {
  const ClassData& cd = chi.owner()->classes;
  std::vector<Cyclotomic> values(cd.num_classes());
  for (int c = 0; c < cd.num_classes(); ++c) values[c] = chi.value(cd.inverse_map()[c]);
  return Character(chi.owner(), std::move(values));
}

inline bool is_rational_character(const Character& chi) {
  for (const auto& v : chi.values())
    if (!v.is_rational()) return false;
  return true;
}

// Group-level rationality: every class is closed under g -> g^r for all r
// prime to the element order.  Agrees with value-level rationality of the
// whole table (tested both ways).
inline bool is_rational_group(const ClassData& cd) {
  for (int c = 0; c < cd.num_classes(); ++c) {
    std::int64_t m = cd.rep_orders()[c];
    for (std::int64_t r = 2; r < m; ++r)
      if (std::gcd(r, m) == 1 && cd.power_class(c, r) != c) return false;
  }
  return true;
}

// Memoized class data and character tables, keyed by the element set, so a
// subgroup reached twice (e.g. C_g = N_g for several classes) is computed
// once.  Thread-safe; concurrent misses may build twice, deterministically.
class TableCache {
public:
  explicit TableCache(std::uint64_t cap = kDefaultEnumerationCap) : cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

  ClassedGroupPtr classed(const PermGroup& H) {
    auto key = H.elements(cap_);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = entries_.find(key);
      if (it != entries_.end() && it->second.cg) return it->second.cg;
    }
    auto cg = make_classed(H, cap_);
    std::lock_guard<std::mutex> lock(mu_);
    auto& entry = entries_[std::move(key)];
    if (!entry.cg) entry.cg = std::move(cg);
    return entry.cg;
  }

  CharacterTablePtr table(const PermGroup& H) {
    auto key = H.elements(cap_);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = entries_.find(key);
      if (it != entries_.end() && it->second.tab) return it->second.tab;
    }
    auto cg = classed(H);
    auto tab = std::make_shared<const CharacterTable>(cg);
    std::lock_guard<std::mutex> lock(mu_);
    auto& entry = entries_[std::move(key)];
    if (!entry.tab) entry.tab = std::move(tab);
    return entry.tab;
  }

private:
  struct Entry {
    ClassedGroupPtr cg;
    CharacterTablePtr tab;
  };
  std::uint64_t cap_;
  std::mutex mu_;
  std::map<std::vector<Permutation>, Entry> entries_;
};

}  // namespace fschur
