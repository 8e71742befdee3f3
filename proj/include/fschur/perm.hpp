#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fschur/errors.hpp"

namespace fschur {

// A permutation of {1..n} in image form, stored 0-based: images()[i] is the
// image of point i.
//
// Composition is left-to-right for the whole project: (a * b)(i) = b(a(i)),
// i.e. apply a first.  Conjugation is g^x = x^-1 * g * x, so that
// (g^x)^y = g^(x*y).
class Permutation {
public:
  Permutation() = default;  // degree 0, used only as an empty placeholder

  explicit Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint16_t p : images_) {
      if (p >= images_.size() || seen[p])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(int degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  std::uint16_t operator[](std::uint16_t point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // a * b applies a first: (a*b)(i) = b(a(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Permutation: degree mismatch in composition");
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint16_t>(i);
    return r;
  }

  // g.conjugated_by(x) = x^-1 * g * x.
  Permutation conjugated_by(const Permutation& x) const {
    if (x.degree() != degree())
      throw std::invalid_argument("Permutation: degree mismatch in conjugation");
    Permutation r;
    r.images_.resize(images_.size());
    // (x^-1 g x)(i) = x(g(x^-1(i))); fill via i = x(j) to avoid inverting x.
    for (std::size_t j = 0; j < images_.size(); ++j) r.images_[x.images_[j]] = x.images_[images_[j]];
    return r;
  }

  // Least k >= 1 with g^k = id; equals the lcm of the cycle lengths.
  std::int64_t order() const {
    std::int64_t ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::int64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  Permutation power(std::int64_t k) const {
    std::int64_t m = order();
    k %= m;
    if (k < 0) k += m;
    Permutation acc = identity(degree());
    Permutation base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint16_t p : images_) h = (h ^ p) * 0x100000001b3ull;
    return h;
  }

  // --- cycle notation (1-based points) ---------------------------------

  // Parses whitespace-separated cycles like "(1,2,3)(4,5)".  Unmentioned
  // points are fixed; "" and "()" denote the identity.
  static Permutation parse_cycles(const std::string& text, int degree);

  // Disjoint cycles, smallest moved point first; "()" for the identity.
  std::string cycles() const;

private:
  std::vector<std::uint16_t> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

inline Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw std::invalid_argument("parse_cycles: degree must be >= 1");
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',') throw ParseError("expected ',' between cycle points");
        ++i;
        skip_ws();
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("expected a point number in cycle");
      int point = std::stoi(text.substr(start, i - start));
      if (point < 1 || point > degree)
        throw ParseError("point " + std::to_string(point) + " out of range 1.." + std::to_string(degree));
      if (used[point - 1]) throw ParseError("point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cycle.push_back(point - 1);
      skip_ws();
    }
    if (i == text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] = static_cast<std::uint16_t>(cycle[(j + 1) % cycle.size()]);
    skip_ws();
  }
  return Permutation(std::move(images));
}

inline std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) return "()";
  return out;
}

}  // namespace fschur
