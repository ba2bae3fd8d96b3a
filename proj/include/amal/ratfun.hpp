#pragma once

#include "amal/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amal {

/// Rational function num/den over the integers in canonical form:
/// num and den have coprime primitive parts, their integer contents are
/// coprime, and the lowest-order nonzero coefficient of den is positive.
class RatFun {
public:
  RatFun() : num_(), den_(Poly::one()) {}
  explicit RatFun(long c) : num_(Poly(c)), den_(Poly::one()) {}
  explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFun zero() { return RatFun(); }
  static RatFun one() { return RatFun(1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun operator-() const { return RatFun(-num_, den_); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  /// Structural equality of normalized forms (sound and complete).
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// First L+1 power-series coefficients; requires den(0) != 0.
  std::vector<BigRat> taylor(int L) const {
    if (den_[0] == 0) throw std::domain_error("RatFun: not expandable at t=0");
    std::vector<BigRat> out;
    out.reserve(static_cast<std::size_t>(L) + 1);
    const BigInt& d0 = den_[0];
    for (int l = 0; l <= L; ++l) {
      BigRat s(num_[static_cast<std::size_t>(l)]);
      for (int j = 1; j <= std::min(l, den_.degree()); ++j)
        s -= BigRat(den_[static_cast<std::size_t>(j)]) * out[static_cast<std::size_t>(l - j)];
      out.push_back(s / d0);
    }
    return out;
  }

  /// Integer series coefficients; throws if any coefficient is non-integral.
  std::vector<BigInt> taylor_int(int L) const {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(L) + 1);
    for (auto& c : taylor(L)) {
      if (boost::multiprecision::denominator(c) != 1)
        throw std::domain_error("RatFun: non-integral series coefficient");
      out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
  }

  std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }
  std::string latex() const { return "\\frac{" + num_.str() + "}{" + den_.str() + "}"; }

private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (c > 1) {
      num_ = num_.divided_by(c);
      den_ = den_.divided_by(c);
    }
    for (const auto& dc : den_.coeffs()) {
      if (dc == 0) continue;
      if (dc < 0) {
        num_ = -num_;
        den_ = -den_;
      }
      break;
    }
  }

  Poly num_, den_;
};

/// g_k(u_1,v_1;...;u_k,v_k) = 1 / (1 - sum_{i=2}^k (i-1) F_k^i(f(u_1,v_1),...,f(u_k,v_k))).
inline RatFun g_func(const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("g_func: k >= 1 required");
  std::vector<Poly> fs;
  fs.reserve(pairs.size());
  for (auto [u, v] : pairs) fs.push_back(f_poly(u, v));
  auto e = elem_sym_all(fs);
  Poly den = Poly::one();
  for (std::size_t i = 2; i <= pairs.size(); ++i) den -= BigInt(i - 1) * e[i];
  return RatFun(Poly::one(), den);
}

/// h_k = prod_j (1 + f(u_j,v_j)) * g_k.
inline RatFun h_func(const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("h_func: k >= 1 required");
  std::vector<Poly> fs;
  fs.reserve(pairs.size());
  for (auto [u, v] : pairs) fs.push_back(f_poly(u, v));
  Poly num = Poly::one();
  for (const auto& f : fs) num *= Poly::one() + f;
  auto e = elem_sym_all(fs);
  Poly den = Poly::one();
  for (std::size_t i = 2; i <= pairs.size(); ++i) den -= BigInt(i - 1) * e[i];
  return RatFun(std::move(num), std::move(den));
}

namespace detail {

// Best-effort factor extraction for display: unit, powers of t, Yun
// square-free decomposition, rational linear factors with small coefficients.
struct FactorList {
  std::vector<std::pair<Poly, int>> factors; // (factor, multiplicity)
  BigInt unit{1};
};

// Yun's square-free decomposition of a primitive polynomial: p = prod a_i^i.
inline std::vector<std::pair<Poly, int>> squarefree_decomp(Poly p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() < 1) {
    out.emplace_back(std::move(p), 1);
    return out;
  }
  Poly c = exact_div(p, g).primitive_part();
  Poly d = exact_div(p.derivative(), g) - c.derivative();
  int i = 1;
  while (c.degree() >= 1) {
    Poly a = poly_gcd(c, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    Poly cn = a.degree() >= 1 ? exact_div(c, a).primitive_part() : c;
    d = (a.degree() >= 1 ? exact_div(d, a) : d) - cn.derivative();
    c = std::move(cn);
    ++i;
  }
  return out;
}

// Pull out monic-up-to-small-leading linear factors b*t + a with |a|,|b| <= 64.
inline void extract_linear(Poly& p, int outer_mult, FactorList& out) {
  bool progress = true;
  while (p.degree() >= 1 && progress) {
    progress = false;
    BigInt a0 = p[0] < 0 ? BigInt(-p[0]) : BigInt(p[0]);
    BigInt an = p.coeffs().back() < 0 ? BigInt(-p.coeffs().back()) : BigInt(p.coeffs().back());
    if (a0 == 0 || a0 > 64 || an > 64) break;
    for (long b = 1; b <= static_cast<long>(an) && !progress; ++b) {
      if (an % b != 0) continue;
      for (long a = 1; a <= static_cast<long>(a0) && !progress; ++a) {
        if (a0 % a != 0) continue;
        for (long sa : {1L, -1L}) {
          Poly lin(std::vector<BigInt>{BigInt(sa * a), BigInt(b)});
          if (!detail::pseudo_rem(p, lin).is_zero()) continue;
          p = exact_div(BigInt(b) * p, lin).primitive_part();
          out.factors.emplace_back(lin, outer_mult);
          progress = true;
          break;
        }
      }
    }
  }
}

inline FactorList factor_for_display(Poly p) {
  FactorList out;
  if (p.is_zero()) {
    out.unit = 0;
    return out;
  }
  BigInt c = p.content();
  if (p.coeffs().back() < 0) c = -c;
  p = p.divided_by(c);
  out.unit = c;
  int tk = 0;
  while (p.degree() >= 1 && p[0] == 0) {
    p = exact_div(p, Poly::monomial(1));
    ++tk;
  }
  if (tk > 0) out.factors.emplace_back(Poly::monomial(1), tk);
  if (p.degree() < 1) {
    if (!p.is_one()) out.unit *= p[0];
    return out;
  }
  for (auto& [part, mult] : squarefree_decomp(p)) {
    extract_linear(part, mult, out);
    if (part.degree() >= 1 || !part.is_one())
      out.factors.emplace_back(part, mult);
  }
  return out;
}

inline std::string factors_str(const FactorList& fl) {
  std::string s;
  if (fl.factors.empty()) return fl.unit.str();
  if (fl.unit == -1)
    s = "-";
  else if (fl.unit != 1)
    s = fl.unit.str() + "*";
  bool first = true;
  for (const auto& [f, m] : fl.factors) {
    if (!first) s += "*";
    first = false;
    s += "(" + f.str() + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

} // namespace detail

/// Display r as a product of detected factors; equality checks must use the
/// canonical form, never this string.
inline std::string factored_str(const RatFun& r) {
  auto fn = detail::factor_for_display(r.num());
  auto fd = detail::factor_for_display(r.den());
  if (fd.unit < 0) {
    fd.unit = -fd.unit;
    fn.unit = -fn.unit;
  }
  std::string den = detail::factors_str(fd);
  if (fd.factors.size() > 1) den = "(" + den + ")";
  return detail::factors_str(fn) + " / " + den;
}

} // namespace amal
