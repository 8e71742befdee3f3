#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fschur/rational.hpp"

namespace fschur {

namespace detail {

// Cyclotomic polynomials Phi_e with integer coefficients (index = power),
// computed by exact division of x^e - 1 by the Phi_d for proper divisors d.
// Memoized; guarded for concurrent table construction.
inline const std::vector<mpz_class>& cyclotomic_polynomial(int e) {
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;

  // exact division of monic-divisor polynomials over Z
  auto divide = [](std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> quot(num.size() - den.size() + 1, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
      mpz_class c = num[i];  // den is monic
      if (c == 0) continue;
      int shift = i - (static_cast<int>(den.size()) - 1);
      quot[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    return quot;
  };

  std::function<const std::vector<mpz_class>&(int)> get = [&](int n) -> const std::vector<mpz_class>& {
    auto jt = cache.find(n);
    if (jt != cache.end()) return jt->second;
    std::vector<mpz_class> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;  // x^n - 1
    for (int d = 1; d < n; ++d)
      if (n % d == 0) poly = divide(std::move(poly), get(d));
    return cache.emplace(n, std::move(poly)).first->second;
  };
  return get(e);
}

inline int euler_phi(int e) {
  return static_cast<int>(cyclotomic_polynomial(e).size()) - 1;
}

}  // namespace detail

// An exact element of Q(zeta_e): the residue of a polynomial in zeta_e modulo
// the e-th cyclotomic polynomial, stored as a dense vector of phi(e) rational
// coefficients.  Values keep their construction conductor; equality and mixed
// arithmetic lift both operands to the lcm conductor first.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}  // NOLINT: rationals embed
  Cyclotomic(long n) : Cyclotomic(Rational(n)) {}                  // NOLINT

  // zeta_e^k in canonical form.
  static Cyclotomic zeta(int e, long k = 1) {
    if (e < 1) throw std::invalid_argument("zeta: conductor must be >= 1");
    k %= e;
    if (k < 0) k += e;
    std::vector<Rational> raw(k + 1, Rational(0));
    raw[k] = Rational(1);
    return from_raw(e, std::move(raw));
  }

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  // Rational values always reduce to a constant residue, at any conductor.
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }

  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
  }

  std::optional<long> as_integer() const {
    auto r = as_rational();
    if (!r) return std::nullopt;
    return r->as_long();
  }

  // Galois automorphism zeta_e -> zeta_e^r, for gcd(r, e) = 1.
  Cyclotomic galois(long r) const {
    long rm = r % conductor_;
    if (rm < 0) rm += conductor_;
    if (std::gcd(rm == 0 ? conductor_ : rm, static_cast<long>(conductor_)) != 1)
      throw std::invalid_argument("galois: exponent not coprime to conductor");
    std::vector<Rational> raw(conductor_, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      raw[(k * rm) % conductor_] += coeffs_[k];
    }
    return from_raw(conductor_, std::move(raw));
  }

  Cyclotomic conj() const { return galois(conductor_ - 1); }

  bool is_real() const { return conj() == *this; }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = lift_pair(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = lift_pair(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = lift_pair(a, b);
    std::vector<Rational> raw(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        if (y.coeffs_[j].is_zero()) continue;
        raw[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return from_raw(x.conductor_, std::move(raw));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = lift_pair(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Value at the given, possibly larger, conductor E (conductor() | E).
  Cyclotomic lifted_to(int big_conductor) const {
    if (big_conductor == conductor_) return *this;
    if (big_conductor % conductor_ != 0)
      throw std::invalid_argument("lifted_to: target is not a multiple of the conductor");
    int step = big_conductor / conductor_;
    std::vector<Rational> raw((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * step] = coeffs_[k];
    return from_raw(big_conductor, std::move(raw));
  }

  // Numeric embedding zeta_e -> exp(2*pi*i/e).  Sanity checks only; no
  // decision in the library ever consults it.
  std::complex<double> numeric() const {
    std::complex<double> sum = 0.0;
    const double tau = 6.283185307179586476925286766559;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      double angle = tau * static_cast<double>(k) / conductor_;
      sum += coeffs_[k].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
  }

  // Human-readable form: rationals verbatim, otherwise a polynomial in z<e>.
  std::string str() const {
    if (is_rational()) return coeffs_[0].str();
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      std::string term;
      if (k == 0) {
        term = c.str();
      } else {
        std::string base = "z" + std::to_string(conductor_) + (k > 1 ? "^" + std::to_string(k) : "");
        if (c == Rational(1)) term = base;
        else if (c == Rational(-1)) term = "-" + base;
        else term = c.str() + "*" + base;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

private:
  static Cyclotomic from_raw(int e, std::vector<Rational> raw) {
    const auto& phi = detail::cyclotomic_polynomial(e);
    const int deg = static_cast<int>(phi.size()) - 1;
    // long division by the monic Phi_e
    for (int i = static_cast<int>(raw.size()) - 1; i >= deg; --i) {
      if (raw[i].is_zero()) continue;
      Rational c = raw[i];
      raw[i] = Rational(0);
      for (int j = 0; j < deg; ++j) raw[i - deg + j] -= c * Rational(phi[j]);
    }
    Cyclotomic out;
    out.conductor_ = e;
    raw.resize(deg, Rational(0));
    out.coeffs_ = std::move(raw);
    return out;
  }

  static std::pair<Cyclotomic, Cyclotomic> lift_pair(const Cyclotomic& a, const Cyclotomic& b) {
    int e = std::lcm(a.conductor_, b.conductor_);
    return {a.lifted_to(e), b.lifted_to(e)};
  }

  int conductor_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& a) { return Cyclotomic(r) * a; }

// Representation order (conductor, then coefficients), used only to fix
// canonical orderings in tables and reports.
inline int cyclo_compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] < b.coeffs()[i]) return -1;
    if (b.coeffs()[i] < a.coeffs()[i]) return 1;
  }
  return 0;
}

}  // namespace fschur
