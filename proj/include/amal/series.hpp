#pragma once

#include "amal/canonical.hpp"
#include "amal/presentation.hpp"
#include "amal/ratfun.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace amal {

/// Exponent windows -A_k <= s <= B_k (s != 0) per generator, with an optional
/// excluded boundary generator K (0-based) for the Lambda^K / Lambda^KK sets.
struct WindowSpec {
  std::vector<std::pair<int, int>> ab;
  std::optional<int> K;
};

/// Generating function of the window-word set Lambda: h(A_1,B_1;...;A_n,B_n).
inline RatFun omega(const WindowSpec& ws) {
  if (ws.K) throw std::invalid_argument("omega: excluded generator not allowed here");
  return h_func(ws.ab);
}

/// Words whose first syllable is not x_K.
inline RatFun omega_K(const WindowSpec& ws) {
  if (!ws.K) throw std::invalid_argument("omega_K: needs an excluded generator");
  const int K = *ws.K;
  if (K < 0 || K >= static_cast<int>(ws.ab.size()))
    throw std::invalid_argument("omega_K: K out of range");
  std::vector<Poly> fs;
  fs.reserve(ws.ab.size());
  for (auto [a, b] : ws.ab) fs.push_back(f_poly(a, b));
  Poly num = Poly::one();
  for (std::size_t k = 0; k < fs.size(); ++k)
    if (static_cast<int>(k) != K) num *= Poly::one() + fs[k];
  auto e = elem_sym_all(fs);
  Poly den = Poly::one();
  for (std::size_t i = 2; i <= fs.size(); ++i) den -= BigInt(i - 1) * e[i];
  return RatFun(std::move(num), std::move(den));
}

/// Nonempty words that neither start nor end with x_K.
inline RatFun omega_KK(const WindowSpec& ws) {
  if (!ws.K) throw std::invalid_argument("omega_KK: needs an excluded generator");
  const int K = *ws.K;
  if (K < 0 || K >= static_cast<int>(ws.ab.size()))
    throw std::invalid_argument("omega_KK: K out of range");
  std::vector<Poly> fs;
  fs.reserve(ws.ab.size());
  for (auto [a, b] : ws.ab) fs.push_back(f_poly(a, b));
  std::vector<Poly> fz = fs;
  fz[static_cast<std::size_t>(K)] = Poly::zero();
  auto ez = elem_sym_all(fz);
  Poly num;
  for (std::size_t i = 1; i + 1 <= fs.size(); ++i) num += BigInt(i) * ez[i];
  auto e = elem_sym_all(fs);
  Poly den = Poly::one();
  for (std::size_t i = 2; i <= fs.size(); ++i) den -= BigInt(i - 1) * e[i];
  return RatFun(std::move(num), std::move(den));
}

/// S_{Gamma_1} = S_{Gamma_2} = h(p^-, p^+; ...) * t^{p_1} / (1 - t^{p_1}).
inline RatFun series_gamma1(const Presentation& pres) {
  std::vector<std::pair<int, int>> ab;
  for (int k = 0; k < pres.n(); ++k) {
    const auto hb = pres.half_bounds(k);
    ab.emplace_back(hb.minus, hb.plus);
  }
  Poly one_minus = Poly::one() - Poly::monomial(pres.p1());
  return h_func(ab) * RatFun(Poly::monomial(pres.p1()), std::move(one_minus));
}

/// (S_{Gamma_{3+}}, S_{Gamma_{3+ and 3-}}).
inline std::pair<RatFun, RatFun> series_gamma3(const Presentation& pres) {
  std::vector<std::pair<int, int>> upper, cap;
  for (int k = 0; k < pres.n(); ++k) {
    const auto hb = pres.half_bounds(k);
    upper.emplace_back(hb.minus, hb.plus);
    cap.emplace_back(hb.minus, hb.minus);
  }
  return {h_func(upper), h_func(cap)};
}

namespace detail {

// Window rows for one case of the grid, in slot order q_1..q_m, r_{m+1}..r_n.
// segment is the odd-case template index (0/1/2); even cases ignore it.
inline std::vector<std::pair<int, int>> case_windows(const Presentation& pres,
                                                     const Reindexing& rx, const CaseId& c,
                                                     int segment) {
  std::vector<std::pair<int, int>> ab;
  ab.reserve(static_cast<std::size_t>(pres.n()));
  for (int slot = 0; slot < pres.n(); ++slot) {
    const int gen = slot < rx.m ? rx.orig_of_q[static_cast<std::size_t>(slot)]
                                : rx.orig_of_r[static_cast<std::size_t>(slot - rx.m)];
    const Window w = gamma30_window(pres, rx, c, gen, segment);
    ab.emplace_back(-w.lo, w.hi);
  }
  return ab;
}

inline RatFun gamma30_case_series(const Presentation& pres, const Reindexing& rx,
                                  const CaseId& c) {
  const int k0 = pres.n() - c.M;  // paper index of the boundary block
  const int K = k0 - 1;           // 0-based slot of the boundary generator
  if (!c.even) {
    const CaseId codd{c.N, c.M, false, c.boundary};
    WindowSpec w0{case_windows(pres, rx, codd, 0), K};
    WindowSpec w1{case_windows(pres, rx, codd, 1), K};
    WindowSpec w2{case_windows(pres, rx, codd, 2), K};
    const int boundary_p = c.boundary == GenKind::Z ? rx.r[static_cast<std::size_t>(k0 - rx.m - 1)]
                                                    : rx.q[static_cast<std::size_t>(k0 - 1)];
    return RatFun(Poly::monomial(boundary_p)) * omega_K(w0) * omega_KK(w1) * omega_K(w2);
  }
  const CaseId codd{c.N, c.M, false, c.boundary};
  auto phi1 = case_windows(pres, rx, c, 0);
  auto phi2 = case_windows(pres, rx, codd, 0);
  auto cap_b = [&](std::vector<std::pair<int, int>> ab) {
    for (int slot = 0; slot < pres.n(); ++slot) {
      const int gen = slot < rx.m ? rx.orig_of_q[static_cast<std::size_t>(slot)]
                                  : rx.orig_of_r[static_cast<std::size_t>(slot - rx.m)];
      ab[static_cast<std::size_t>(slot)].second = pres.p_minus(gen);
    }
    return ab;
  };
  auto phi3 = cap_b(phi1);
  auto phi4 = cap_b(phi2);
  return (h_func(phi1) - h_func(phi2)) - (h_func(phi3) - h_func(phi4));
}

} // namespace detail

/// S_{Gamma_{3^0}}: sum of the case-grid series.
inline RatFun series_gamma30(const Presentation& pres, const Reindexing& rx) {
  RatFun total;
  for (const CaseId& c : gamma30_case_grid(pres, rx))
    total += detail::gamma30_case_series(pres, rx, c);
  return total;
}

/// The spherical growth series as a single normalized rational function:
/// 2 S_{Gamma_{3+}} / (1 - t^{p_1}) - S_{Gamma_{3+ and 3-}} + S_{Gamma_{3^0}}.
inline RatFun growth_series(const Presentation& pres) {
  const Reindexing rx = reindex(pres);
  auto [s3p, s3pm] = series_gamma3(pres);
  Poly one_minus = Poly::one() - Poly::monomial(pres.p1());
  return RatFun(Poly(2)) * s3p / RatFun(std::move(one_minus)) - s3pm +
         series_gamma30(pres, rx);
}

} // namespace amal
