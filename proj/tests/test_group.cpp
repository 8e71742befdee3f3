#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fschur/builtins.hpp"
#include "fschur/group.hpp"

using namespace fschur;

namespace {

// Brute-force conjugacy classes, independent of the BFS-closure code path.
std::vector<std::set<Permutation>> brute_classes(const std::vector<Permutation>& elems) {
  std::vector<std::set<Permutation>> classes;
  std::set<Permutation> done;
  for (const auto& g : elems) {
    if (done.count(g)) continue;
    std::set<Permutation> cls;
    for (const auto& x : elems) cls.insert(g.conjugated_by(x));
    for (const auto& h : cls) done.insert(h);
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Permutation> brute_centralizer(const std::vector<Permutation>& elems,
                                           const Permutation& g) {
  std::vector<Permutation> out;
  for (const auto& x : elems)
    if (x * g == g * x) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("build and order") {
  PermGroup s3(3, {Permutation::parse_cycles("(1,2)", 3), Permutation::parse_cycles("(1,2,3)", 3)});
  CHECK(s3.order() == 6);
  CHECK(PermGroup::trivial(3).order() == 1);
  CHECK(PermGroup::trivial(3).elements() == std::vector<Permutation>{Permutation::identity(3)});
  CHECK_THROWS_AS(PermGroup(3, {Permutation::parse_cycles("(1,2)", 4)}), std::invalid_argument);
}

TEST_CASE("membership matches enumeration") {
  for (auto G : {builtins::sym(4), builtins::q8(), builtins::dihedral(6)}) {
    auto elems = G.elements();
    CHECK(elems.size() == G.small_order());
    std::set<Permutation> in(elems.begin(), elems.end());
    // every element of the symmetric group is classified correctly
    std::mt19937 rng(13);
    std::vector<std::uint16_t> v(G.degree());
    std::iota(v.begin(), v.end(), 0);
    for (int i = 0; i < 200; ++i) {
      std::shuffle(v.begin(), v.end(), rng);
      Permutation p{std::vector<std::uint16_t>(v)};
      CHECK(G.contains(p) == (in.count(p) > 0));
    }
  }
}

TEST_CASE("conjugacy classes of sym3") {
  ClassData cd(builtins::sym(3));
  REQUIRE(cd.num_classes() == 3);
  CHECK(cd.sizes() == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(cd.reps()[0].is_identity());
  CHECK(cd.rep_orders() == std::vector<std::int64_t>{1, 3, 2});
  CHECK(cd.exponent() == 6);
}

TEST_CASE("conjugacy classes of cyclic 4") {
  ClassData cd(builtins::cyclic(4));
  REQUIRE(cd.num_classes() == 4);
  for (auto s : cd.sizes()) CHECK(s == 1);
  // the two generator classes are swapped by inversion
  int gen_classes = 0;
  for (int c = 0; c < 4; ++c)
    if (cd.rep_orders()[c] == 4) {
      ++gen_classes;
      CHECK(cd.inverse_map()[c] != c);
      CHECK(cd.rep_orders()[cd.inverse_map()[c]] == 4);
    }
  CHECK(gen_classes == 2);
}

TEST_CASE("conjugacy classes against brute force") {
  for (auto G : {builtins::q8(), builtins::sym(4), builtins::dihedral(5)}) {
    ClassData cd(G);
    auto oracle = brute_classes(G.elements());
    REQUIRE(cd.num_classes() == static_cast<int>(oracle.size()));
    std::multiset<std::uint64_t> sizes_a(cd.sizes().begin(), cd.sizes().end());
    std::multiset<std::uint64_t> sizes_b;
    for (const auto& cls : oracle) sizes_b.insert(cls.size());
    CHECK(sizes_a == sizes_b);
    // representatives really lie in distinct oracle classes
    std::set<int> seen;
    for (const auto& r : cd.reps())
      for (std::size_t i = 0; i < oracle.size(); ++i)
        if (oracle[i].count(r)) {
          CHECK(!seen.count(static_cast<int>(i)));
          seen.insert(static_cast<int>(i));
        }
  }
}

TEST_CASE("q8 class sizes") {
  ClassData cd(builtins::q8());
  CHECK(cd.sizes() == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
}

TEST_CASE("orbit stabilizer identity and centralizer oracle") {
  for (auto G : {builtins::sym(4), builtins::q8(), builtins::dihedral(7), builtins::weyl_b(3)}) {
    ClassData cd(G);
    auto elems = G.elements();
    for (int c = 0; c < cd.num_classes(); ++c) {
      const auto& g = cd.reps()[c];
      PermGroup C = centralizer(G, g);
      CHECK(C.order() * static_cast<long>(cd.sizes()[c]) == G.order());
      if (G.order() <= 400) {
        auto oracle = brute_centralizer(elems, g);
        CHECK(C.order() == static_cast<long>(oracle.size()));
        for (const auto& x : oracle) CHECK(C.contains(x));
      }
    }
  }
}

TEST_CASE("centralizer basics") {
  auto s3 = builtins::sym(3);
  CHECK(centralizer(s3, Permutation::parse_cycles("(1,2)", 3)).order() == 2);
  CHECK(centralizer(s3, Permutation::identity(3)).order() == 6);
  CHECK_THROWS_AS(centralizer(s3, Permutation::parse_cycles("(1,2)", 4)), std::invalid_argument);
}

TEST_CASE("inverting witness") {
  auto s3 = builtins::sym(3);
  auto g = Permutation::parse_cycles("(1,2,3)", 3);
  auto w = inverting_witness(s3, g);
  REQUIRE(w.has_value());
  CHECK(g.conjugated_by(*w) == g.inverse());

  auto c4 = builtins::cyclic(4);
  auto gen = Permutation::parse_cycles("(1,2,3,4)", 4);
  CHECK_FALSE(inverting_witness(c4, gen).has_value());

  auto t = Permutation::parse_cycles("(1,2)", 3);
  auto wt = inverting_witness(s3, t);
  REQUIRE(wt.has_value());
  CHECK(t.conjugated_by(*wt) == t.inverse());
}

TEST_CASE("witness exists iff class is real") {
  for (auto G : {builtins::sym(5), builtins::q8(), builtins::cyclic(9), builtins::weyl_d(3)}) {
    ClassData cd(G);
    for (int c = 0; c < cd.num_classes(); ++c) {
      auto w = inverting_witness(G, cd.reps()[c]);
      CHECK(w.has_value() == cd.is_real_class(c));
      CHECK(cd.is_real_class(c) == (cd.inverse_map()[c] == c));
    }
  }
}

TEST_CASE("normalizer of the pair") {
  auto s3 = builtins::sym(3);
  auto g = Permutation::parse_cycles("(1,2,3)", 3);
  PermGroup N = normalizer_pair(s3, g);
  CHECK(N.order() == 6);
  CHECK(centralizer(s3, g).order() == 3);

  auto t = Permutation::parse_cycles("(1,2)", 3);
  CHECK(normalizer_pair(s3, t).order() == centralizer(s3, t).order());

  auto c4 = builtins::cyclic(4);
  auto gen = Permutation::parse_cycles("(1,2,3,4)", 4);
  CHECK(normalizer_pair(c4, gen).order() == 4);
}

TEST_CASE("index two when real and not an involution") {
  for (auto G : {builtins::sym(5), builtins::weyl_b(3), builtins::dihedral(8)}) {
    ClassData cd(G);
    for (int c = 0; c < cd.num_classes(); ++c) {
      const auto& g = cd.reps()[c];
      if (!cd.is_real_class(c) || (g * g).is_identity()) continue;
      PermGroup C = centralizer(G, g);
      PermGroup N = normalizer_pair(G, g);
      CHECK(N.order() == 2 * C.order());
    }
  }
}

TEST_CASE("power map consistency fuzz") {
  auto G = builtins::weyl_b(3);
  ClassData cd(G);
  std::mt19937 rng(37);
  auto elems = G.elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const auto& g = elems[pick(rng)];
    int c = cd.class_index(g);
    std::int64_t k = static_cast<std::int64_t>(pick(rng)) % cd.exponent();
    CHECK(cd.class_index(g.power(k)) == cd.power_class(c, k));
  }
  // power_maps[1] is the identity map; the inverse map is an involution
  for (int c = 0; c < cd.num_classes(); ++c) {
    CHECK(cd.power_class(c, 1) == c);
    CHECK(cd.inverse_map()[cd.inverse_map()[c]] == c);
  }
}

TEST_CASE("class sizes sum and divide") {
  for (auto G : {builtins::sym(5), builtins::weyl_d(3), builtins::q8()}) {
    ClassData cd(G);
    std::uint64_t total = 0;
    for (auto s : cd.sizes()) {
      total += s;
      CHECK(G.small_order() % s == 0);
    }
    CHECK(total == G.small_order());
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(builtins::sym(8).elements(1000), CapExceededError);
}

TEST_CASE("abelian subgroups of cyclic 4") {
  auto subs = abelian_subgroups(builtins::cyclic(4), 1);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].order() == 1);
  CHECK(subs[1].order() == 2);
  CHECK(subs[2].order() == 4);
}

TEST_CASE("abelian subgroups of sym3") {
  auto subs = abelian_subgroups(builtins::sym(3), 2);
  std::multiset<long> orders;
  for (const auto& H : subs) orders.insert(H.order().get_si());
  CHECK(orders == std::multiset<long>{1, 2, 3});
}

TEST_CASE("abelian subgroups of q8") {
  auto subs = abelian_subgroups(builtins::q8(), 2);
  std::multiset<long> orders;
  for (const auto& H : subs) {
    CHECK(H.is_abelian());
    orders.insert(H.order().get_si());
  }
  // trivial, center, and the three cyclic C4's (normal, so none are conjugate)
  CHECK(orders == std::multiset<long>{1, 2, 4, 4, 4});
}

TEST_CASE("elementary abelian two subgroups") {
  auto c4 = elementary_abelian_2_subgroups(builtins::cyclic(4));
  std::multiset<long> c4_orders;
  for (const auto& H : c4) c4_orders.insert(H.order().get_si());
  CHECK(c4_orders == std::multiset<long>{1, 2});

  auto q8 = elementary_abelian_2_subgroups(builtins::q8());
  std::multiset<long> q8_orders;
  for (const auto& H : q8) q8_orders.insert(H.order().get_si());
  CHECK(q8_orders == std::multiset<long>{1, 2});

  auto s4 = elementary_abelian_2_subgroups(builtins::sym(4));
  bool has_klein_of_double_transpositions = false;
  for (const auto& H : s4) {
    if (H.order() != 4) continue;
    bool all_double = true;
    for (const auto& e : H.elements()) {
      if (e.is_identity()) continue;
      int moved = 0;
      for (int p = 0; p < 4; ++p)
        if (e[static_cast<std::uint16_t>(p)] != p) ++moved;
      if (moved != 4) all_double = false;
    }
    if (all_double) has_klein_of_double_transpositions = true;
  }
  CHECK(has_klein_of_double_transpositions);
}

TEST_CASE("centralizer of subgroup") {
  auto s4 = builtins::sym(4);
  PermGroup E(4, {Permutation::parse_cycles("(1,2)(3,4)", 4)});
  PermGroup C = centralizer_of_subgroup(s4, E);
  CHECK(C.order() == 8);  // dihedral of order 8
  for (const auto& x : C.elements())
    for (const auto& h : E.generators()) CHECK(x * h == h * x);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(builtins::cyclic(12)) == std::vector<std::int64_t>{12});
  CHECK(abelian_invariants(builtins::dihedral(2)) == std::vector<std::int64_t>{2, 2});
  auto c6xc2 = builtins::direct_product(builtins::cyclic(6), builtins::cyclic(2));
  CHECK(abelian_invariants(c6xc2) == std::vector<std::int64_t>{6, 2});
  CHECK(abelian_invariants(PermGroup::trivial(3)).empty());
  CHECK_THROWS_AS(abelian_invariants(builtins::sym(3)), std::invalid_argument);
}
