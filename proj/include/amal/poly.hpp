#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace amal {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over the integers, coefficient index = degree.
/// Invariant: the highest-degree coefficient is nonzero (zero polynomial is
/// the empty coefficient vector).
class Poly {
public:
  Poly() = default;
  explicit Poly(BigInt c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit Poly(long c) : Poly(BigInt(c)) {}
  explicit Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(1); }

  /// t^k
  static Poly monomial(int k, BigInt c = BigInt(1)) {
    if (c == 0 || k < 0) return Poly();
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const BigInt& operator[](std::size_t i) const {
    static const BigInt kZero{0};
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const BigInt& s, const Poly& p) {
    if (s == 0) return Poly();
    Poly r = p;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  /// Multiply by t^k.
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<BigInt> v(coeffs_.size() + static_cast<std::size_t>(k));
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
    return Poly(std::move(v));
  }

  /// gcd of all coefficients, non-negative; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
      g = boost::multiprecision::gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  /// Divide every coefficient by s; s must divide exactly.
  Poly divided_by(const BigInt& s) const {
    if (s == 0) throw std::invalid_argument("Poly: division by zero scalar");
    Poly r = *this;
    for (auto& c : r.coeffs_) {
      BigInt q = c / s;
      if (q * s != c) throw std::invalid_argument("Poly: inexact scalar division");
      c = std::move(q);
    }
    return r;
  }

  Poly primitive_part() const {
    if (is_zero()) return Poly();
    BigInt g = content();
    if (coeffs_.back() < 0) g = -g;
    return divided_by(g);
  }

  /// Exact polynomial division; throws if the remainder is nonzero.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("Poly: division by zero");
    if (a.is_zero()) return Poly();
    std::vector<BigInt> rem = a.coeffs_;
    std::vector<BigInt> q(a.coeffs_.size() - b.coeffs_.size() + 1);
    const BigInt& lead = b.coeffs_.back();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      BigInt c = rem[i + b.coeffs_.size() - 1];
      if (c == 0) continue;
      BigInt f = c / lead;
      if (f * lead != c) throw std::invalid_argument("Poly: inexact division");
      q[i] = f;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        rem[i + j] -= f * b.coeffs_[j];
    }
    for (const auto& c : rem)
      if (c != 0) throw std::invalid_argument("Poly: inexact division");
    return Poly(std::move(q));
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<BigInt> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = BigInt(i) * coeffs_[i];
    return Poly(std::move(v));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      bool unit = (mag == 1);
      if (i == 0) {
        out += mag.str();
      } else {
        if (!unit) out += mag.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

namespace detail {

// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a mod b.
inline Poly pseudo_rem(Poly a, const Poly& b) {
  const int db = b.degree();
  const BigInt& lead = b.coeffs().back();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const BigInt f = a.coeffs().back();
    a = lead * a - (f * b).shifted(shift);
  }
  return a;
}

} // namespace detail

/// Primitive-Euclid polynomial gcd; result is primitive with positive leading
/// coefficient (integer contents of the inputs are ignored).
inline Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    Poly r = detail::pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// T_u = t + t^2 + ... + t^u; T_0 = 0.
inline Poly t_poly(int u) {
  if (u < 0) throw std::invalid_argument("t_poly: negative u");
  std::vector<BigInt> v(static_cast<std::size_t>(u) + 1, BigInt(1));
  if (!v.empty()) v[0] = 0;
  return Poly(std::move(v));
}

/// f(u, v) = T_u + T_v.
inline Poly f_poly(int u, int v) { return t_poly(u) + t_poly(v); }

/// All elementary symmetric polynomials e_0..e_k of the arguments, via the
/// product recurrence for prod_j (1 + x_j T).
inline std::vector<Poly> elem_sym_all(const std::vector<Poly>& xs) {
  std::vector<Poly> e(xs.size() + 1);
  e[0] = Poly::one();
  std::size_t used = 0;
  for (const auto& x : xs) {
    ++used;
    for (std::size_t d = used; d >= 1; --d) e[d] = e[d] + e[d - 1] * x;
  }
  return e;
}

/// Elementary symmetric polynomial of degree i in the given arguments.
inline Poly elem_sym(int i, const std::vector<Poly>& xs) {
  if (i < 0 || static_cast<std::size_t>(i) > xs.size())
    throw std::invalid_argument("elem_sym: degree out of range");
  return elem_sym_all(xs)[static_cast<std::size_t>(i)];
}

} // namespace amal
