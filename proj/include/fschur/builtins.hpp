#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fschur/group.hpp"
#include "fschur/perm.hpp"

// Constructors for the named groups used throughout the project, as
// permutation groups.  Every constructor asserts its closed order formula.

namespace fschur {
namespace builtins {

namespace detail {

inline Permutation from_one_based(std::vector<int> images) {
  std::vector<std::uint16_t> v(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) v[i] = static_cast<std::uint16_t>(images[i] - 1);
  return Permutation(std::move(v));
}

inline void check_order(const PermGroup& G, long expected, const std::string& name) {
  if (G.order() != expected)
    throw std::logic_error(name + ": order " + G.order().get_str() + ", expected " +
                           std::to_string(expected));
}

inline long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

// Natural action on n points.
inline PermGroup sym(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("sym: n out of range 1..9");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::parse_cycles("(1,2)", n));
  if (n >= 3) {
    std::string cyc = "(1";
    for (int i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
    cyc += ")";
    gens.push_back(Permutation::parse_cycles(cyc, n));
  }
  PermGroup G(n, std::move(gens));
  detail::check_order(G, detail::factorial(n), "sym(" + std::to_string(n) + ")");
  return G;
}

inline PermGroup alt(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("alt: n out of range 1..9");
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(Permutation::parse_cycles("(1,2,3)", n));
  if (n >= 4) {
    // (1,2,3,...,n) for odd n, (2,3,...,n) for even n
    std::string cyc = "(";
    int first = (n % 2 == 1) ? 1 : 2;
    for (int i = first; i <= n; ++i) cyc += (i > first ? "," : "") + std::to_string(i);
    cyc += ")";
    gens.push_back(Permutation::parse_cycles(cyc, n));
  }
  PermGroup G(n, std::move(gens));
  detail::check_order(G, n >= 2 ? detail::factorial(n) / 2 : 1, "alt(" + std::to_string(n) + ")");
  return G;
}

// Cyclic group of order n on n points.
inline PermGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::string cyc = "(1";
    for (int i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
    cyc += ")";
    gens.push_back(Permutation::parse_cycles(cyc, n));
  }
  PermGroup G(n, std::move(gens));
  detail::check_order(G, n, "cyclic(" + std::to_string(n) + ")");
  return G;
}

// Dihedral group of order 2m acting on the m vertices of a polygon (for
// m <= 2 the action is on 2m points so the group is faithful).
inline PermGroup dihedral(int m) {
  if (m < 1) throw std::invalid_argument("dihedral: m must be >= 1");
  if (m == 1) return cyclic(2);
  if (m == 2) {
    // Klein four-group
    PermGroup G(4, {Permutation::parse_cycles("(1,2)", 4), Permutation::parse_cycles("(3,4)", 4)});
    detail::check_order(G, 4, "dihedral(2)");
    return G;
  }
  std::string rot = "(1";
  for (int i = 2; i <= m; ++i) rot += "," + std::to_string(i);
  rot += ")";
  std::string refl;
  for (int i = 2; 2 * i <= m + 1; ++i)
    refl += "(" + std::to_string(i) + "," + std::to_string(m + 2 - i) + ")";
  if (refl.empty()) refl = "()";
  PermGroup G(m, {Permutation::parse_cycles(rot, m), Permutation::parse_cycles(refl, m)});
  detail::check_order(G, 2 * m, "dihedral(" + std::to_string(m) + ")");
  return G;
}

// Quaternion group as its regular representation on the 8 points
// 1,-1,i,-i,j,-j,k,-k (in that numbering).
inline PermGroup q8() {
  // right multiplication by i and by j
  Permutation gi = detail::from_one_based({3, 4, 2, 1, 8, 7, 5, 6});
  Permutation gj = detail::from_one_based({5, 6, 7, 8, 2, 1, 4, 3});
  PermGroup G(8, {gi, gj});
  detail::check_order(G, 8, "q8");
  return G;
}

// Signed permutations of rank n on the 2n points {1..n, -1..-n}, where point
// n+i stands for -i.  Order 2^n n!.
inline PermGroup weyl_b(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("weyl_b: n out of range 2..4");
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) {
    std::string s = "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")(" +
                    std::to_string(n + i) + "," + std::to_string(n + i + 1) + ")";
    gens.push_back(Permutation::parse_cycles(s, 2 * n));
  }
  gens.push_back(
      Permutation::parse_cycles("(" + std::to_string(n) + "," + std::to_string(2 * n) + ")", 2 * n));
  PermGroup G(2 * n, std::move(gens));
  detail::check_order(G, (1L << n) * detail::factorial(n), "weyl_b(" + std::to_string(n) + ")");
  return G;
}

// The fixed-point-free involution z = (1,n+1)(2,n+2)...(n,2n) whose
// centralizer in Sym_2n is weyl_b(n).
inline Permutation weyl_b_central_involution(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i)
    s += "(" + std::to_string(i) + "," + std::to_string(n + i) + ")";
  return Permutation::parse_cycles(s, 2 * n);
}

// Even-sign subgroup of weyl_b(n): index 2, order 2^(n-1) n!.
inline PermGroup weyl_d(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("weyl_d: n out of range 2..4");
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) {
    std::string s = "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")(" +
                    std::to_string(n + i) + "," + std::to_string(n + i + 1) + ")";
    gens.push_back(Permutation::parse_cycles(s, 2 * n));
  }
  // the sign-flipping transposition on the last two coordinates
  std::string s = "(" + std::to_string(n - 1) + "," + std::to_string(2 * n) + ")(" +
                  std::to_string(n) + "," + std::to_string(2 * n - 1) + ")";
  gens.push_back(Permutation::parse_cycles(s, 2 * n));
  PermGroup G(2 * n, std::move(gens));
  detail::check_order(G, (1L << (n - 1)) * detail::factorial(n), "weyl_d(" + std::to_string(n) + ")");
  return G;
}

// Direct product acting on the disjoint union of the two point sets.
inline PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  int d = A.degree() + B.degree();
  std::vector<Permutation> gens;
  for (const auto& a : A.generators()) {
    std::vector<std::uint16_t> v(d);
    for (int i = 0; i < A.degree(); ++i) v[i] = a[static_cast<std::uint16_t>(i)];
    for (int i = 0; i < B.degree(); ++i) v[A.degree() + i] = static_cast<std::uint16_t>(A.degree() + i);
    gens.emplace_back(std::move(v));
  }
  for (const auto& b : B.generators()) {
    std::vector<std::uint16_t> v(d);
    for (int i = 0; i < A.degree(); ++i) v[i] = static_cast<std::uint16_t>(i);
    for (int i = 0; i < B.degree(); ++i)
      v[A.degree() + i] = static_cast<std::uint16_t>(A.degree() + b[static_cast<std::uint16_t>(i)]);
    gens.emplace_back(std::move(v));
  }
  PermGroup G(d, std::move(gens));
  if (G.order() != A.order() * B.order())
    throw std::logic_error("direct_product: order is not |A|*|B|");
  return G;
}

// H3 = Alt_5 x Z/2 on 7 points; order 120.
inline PermGroup h3() {
  PermGroup G = direct_product(alt(5), cyclic(2));
  detail::check_order(G, 120, "h3");
  return G;
}

// The holomorph of Z/8: <x,a,b | x^8 = a^2 = b^2 = 1, axa = x^-1, bxb = x^3>,
// realized on the 8 residues mod 8 (point i+1 is the residue i): x adds 1,
// a negates, b multiplies by 3.  Order 32.
inline PermGroup holomorph_c8() {
  auto residue_map = [](auto f) {
    std::vector<std::uint16_t> v(8);
    for (int r = 0; r < 8; ++r) v[r] = static_cast<std::uint16_t>(((f(r) % 8) + 8) % 8);
    return Permutation(std::move(v));
  };
  Permutation x = residue_map([](int r) { return r + 1; });
  Permutation a = residue_map([](int r) { return -r; });
  Permutation b = residue_map([](int r) { return 3 * r; });
  PermGroup G(8, {x, a, b});
  detail::check_order(G, 32, "holomorph_c8");
  // presentation relations, as permutation identities
  if (!(x.power(8).is_identity() && (a * a).is_identity() && (b * b).is_identity()))
    throw std::logic_error("holomorph_c8: generator orders violated");
  if (a * x * a != x.inverse()) throw std::logic_error("holomorph_c8: axa != x^-1");
  if (b * x * b != x.power(3)) throw std::logic_error("holomorph_c8: bxb != x^3");
  return G;
}

inline Permutation holomorph_c8_x() {
  return Permutation::parse_cycles("(1,2,3,4,5,6,7,8)", 8);
}
inline Permutation holomorph_c8_a() {
  // r -> -r mod 8
  return detail::from_one_based({1, 8, 7, 6, 5, 4, 3, 2});
}

// Weyl group of type F4, order 1152, acting faithfully on its 24 short
// roots.  The generator images below are the permutations induced by the
// four simple reflections on the short roots listed in lexicographic order
// (see the README for the construction); the order is asserted on build.
inline PermGroup weyl_f4() {
  static const int kGens[4][24] = {
      {1, 2, 3, 6, 7, 4, 5, 8, 9, 11, 10, 12, 13, 15, 14, 16, 17, 20, 21, 18, 19, 22, 23, 24},
      {1, 2, 4, 3, 5, 6, 8, 7, 9, 10, 12, 11, 14, 13, 15, 16, 18, 17, 19, 20, 22, 21, 23, 24},
      {1, 3, 2, 5, 4, 7, 6, 9, 8, 10, 11, 13, 12, 14, 15, 17, 16, 19, 18, 21, 20, 23, 22, 24},
      {2, 1, 3, 4, 10, 6, 11, 12, 16, 5, 7, 8, 17, 18, 20, 9, 13, 14, 19, 15, 21, 22, 24, 23}};
  std::vector<Permutation> gens;
  for (const auto& row : kGens)
    gens.push_back(detail::from_one_based(std::vector<int>(row, row + 24)));
  PermGroup G(24, std::move(gens));
  detail::check_order(G, 1152, "weyl_f4");
  return G;
}

}  // namespace builtins
}  // namespace fschur
