#include <catch2/catch_amalgamated.hpp>

#include "fschur/builtins.hpp"
#include "fschur/group.hpp"

using namespace fschur;
using namespace fschur::builtins;

TEST_CASE("orders match closed formulas") {
  CHECK(sym(3).order() == 6);
  CHECK(sym(5).order() == 120);
  CHECK(alt(4).order() == 12);
  CHECK(alt(5).order() == 60);
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(7).order() == 7);
  CHECK(dihedral(4).order() == 8);
  CHECK(dihedral(8).order() == 16);
  CHECK(q8().order() == 8);
  CHECK(weyl_b(2).order() == 8);
  CHECK(weyl_b(3).order() == 48);
  CHECK(weyl_b(4).order() == 384);
  CHECK(weyl_d(2).order() == 4);
  CHECK(weyl_d(3).order() == 24);
  CHECK(weyl_d(4).order() == 192);
  CHECK(h3().order() == 120);
  CHECK(holomorph_c8().order() == 32);
  CHECK_THROWS_AS(sym(10), std::invalid_argument);
  CHECK_THROWS_AS(weyl_b(5), std::invalid_argument);
}

TEST_CASE("sym5 has 7 classes") {
  CHECK(ClassData(sym(5)).num_classes() == 7);  // partitions of 5
}

TEST_CASE("dihedral 4 has 5 classes") {
  CHECK(ClassData(dihedral(4)).num_classes() == 5);
}

TEST_CASE("q8 has exactly one involution") {
  int involutions = 0;
  for (const auto& e : q8().elements())
    if (!e.is_identity() && (e * e).is_identity()) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("weyl_d sits in weyl_b with index 2, as the even part") {
  for (int n = 2; n <= 4; ++n) {
    PermGroup B = weyl_b(n);
    PermGroup D = weyl_d(n);
    CHECK(2 * D.order() == B.order());
    CHECK(D.is_subgroup_of(B));
    // D = B intersect Alt_2n: every element of D is even, half of B is
    auto is_even = [](const Permutation& p) {
      int transpositions = 0;
      std::vector<bool> seen(p.degree(), false);
      for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[static_cast<std::uint16_t>(j)]) {
          seen[j] = true;
          ++len;
        }
        transpositions += len - 1;
      }
      return transpositions % 2 == 0;
    };
    std::uint64_t even_in_b = 0;
    for (const auto& e : B.elements()) {
      if (is_even(e)) {
        ++even_in_b;
        CHECK(D.contains(e));
      } else {
        CHECK_FALSE(D.contains(e));
      }
    }
    CHECK(even_in_b == D.small_order());
  }
}

TEST_CASE("weyl_b centralizes the fixed point free involution") {
  for (int n = 2; n <= 4; ++n) {
    PermGroup B = weyl_b(n);
    Permutation z = weyl_b_central_involution(n);
    CHECK(B.contains(z));
    for (const auto& g : B.generators()) CHECK(g * z == z * g);
    // and is exactly the centralizer in Sym_2n: |C| = 2^n n!
    if (n <= 3) {
      auto all = sym(2 * n).elements();
      std::uint64_t count = 0;
      for (const auto& x : all)
        if (x * z == z * x) ++count;
      CHECK(count == B.small_order());
    }
  }
}

TEST_CASE("weyl_b2 is dihedral of order 8") {
  ClassData b2(weyl_b(2));
  ClassData d4(dihedral(4));
  CHECK(b2.sizes() == d4.sizes());
  CHECK(b2.rep_orders() == d4.rep_orders());
}

TEST_CASE("weyl_d2 is the klein four group") {
  PermGroup D = weyl_d(2);
  CHECK(D.order() == 4);
  CHECK(D.is_abelian());
  CHECK(abelian_invariants(D) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("weyl_d3 has the class structure of sym4") {
  ClassData d3(weyl_d(3));
  ClassData s4(sym(4));
  CHECK(d3.sizes() == s4.sizes());
  CHECK(d3.rep_orders() == s4.rep_orders());
}

TEST_CASE("h3 structure") {
  PermGroup G = h3();
  ClassData cd(G);
  CHECK(cd.num_classes() == 10);
  for (int c = 0; c < cd.num_classes(); ++c) CHECK(cd.is_real_class(c));
}

TEST_CASE("holomorph relations") {
  Permutation x = holomorph_c8_x();
  Permutation a = holomorph_c8_a();
  PermGroup G = holomorph_c8();
  CHECK(G.contains(x));
  CHECK(G.contains(a));
  CHECK(a * x * a == x.inverse());
  CHECK((x * a) * (x * a) == Permutation::identity(8));

  // centralizer of g = xa has order 8 with abelian invariants (4, 2)
  PermGroup C = centralizer(G, x * a);
  CHECK(C.order() == 8);
  CHECK(C.is_abelian());
  CHECK(abelian_invariants(C) == std::vector<std::int64_t>{4, 2});
  int involutions = 0;
  for (const auto& e : C.elements())
    if (!e.is_identity() && (e * e).is_identity()) ++involutions;
  CHECK(involutions == 3);
}

TEST_CASE("direct products") {
  auto s3 = sym(3);
  CHECK(ClassData(direct_product(s3, PermGroup::trivial(1))).num_classes() == 3);
  CHECK(ClassData(direct_product(cyclic(2), cyclic(2))).num_classes() == 4);
  CHECK(ClassData(direct_product(s3, cyclic(2))).num_classes() == 6);
  CHECK(direct_product(s3, cyclic(2)).order() == 12);
}

TEST_CASE("weyl_f4 order and exponent") {
  PermGroup F = weyl_f4();
  CHECK(F.order() == 1152);
  ClassData cd(F);
  CHECK(cd.num_classes() == 25);
  CHECK(cd.exponent() == 24);
  CHECK(cd.involution_count() == 140);
}
