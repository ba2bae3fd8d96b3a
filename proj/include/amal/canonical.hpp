#pragma once

#include "amal/geodesics.hpp"
#include "amal/normal_form.hpp"
#include "amal/presentation.hpp"
#include "amal/word.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amal {

/// Spread candidates of a modified normal form grouped by level below the top
/// of the window: Y_k[l] holds positions with gen y_k and exponent q_k^+ - l,
/// Z_k[l] likewise with r_k^+ - l. Position lists are ascending ("leftmost").
struct Buckets {
  std::vector<std::vector<std::vector<int>>> y;  // [m][p1-1]
  std::vector<std::vector<std::vector<int>>> z;  // [n-m][p1]
  std::vector<int> y_count;                      // per level
  std::vector<int> z_count;
};

inline Buckets build_buckets(const Presentation& pres, const Reindexing& rx,
                             const ModifiedNf& mnf) {
  const int p1 = pres.p1();
  Buckets b;
  b.y.assign(rx.q.size(), std::vector<std::vector<int>>(static_cast<std::size_t>(p1 - 1)));
  b.z.assign(rx.r.size(), std::vector<std::vector<int>>(static_cast<std::size_t>(p1)));
  b.y_count.assign(static_cast<std::size_t>(p1 - 1), 0);
  b.z_count.assign(static_cast<std::size_t>(p1), 0);
  for (std::size_t j = 0; j < mnf.syllables.size(); ++j) {
    const auto& s = mnf.syllables[j];
    const auto ni = rx.new_of_orig[static_cast<std::size_t>(s.gen)];
    if (ni.kind == GenKind::Y) {
      const int l = rx.q_plus(ni.index) - s.exp;
      if (l >= 0 && l <= p1 - 2) {
        b.y[ni.index][l].push_back(static_cast<int>(j));
        ++b.y_count[l];
      }
    } else {
      const int l = rx.r_plus(ni.index) - s.exp;
      if (l >= 0 && l <= p1 - 1) {
        b.z[ni.index][l].push_back(static_cast<int>(j));
        ++b.z_count[l];
      }
    }
  }
  return b;
}

/// Cell of the Figure-1 partition locating delta inside (0, r_nu).
struct CaseId {
  int N = 0;
  int M = 0;
  bool even = false;          // slot 2M+2 when true, 2M+1 when odd
  GenKind boundary = GenKind::Z;  // kind of the block Z_{n-M}[N] / Y_{n-M}[N]
  int slot() const { return 2 * M + (even ? 2 : 1); }
  friend bool operator==(const CaseId&, const CaseId&) = default;
  std::string str() const {
    return "case(N=" + std::to_string(N) + ",slot=" + std::to_string(slot()) + ")";
  }
};

struct LocatedCase {
  CaseId id;
  int offset = 0;  // phi (z boundary) or psi (y boundary); 0 for even cases
};

namespace detail {

// Blocks of the descending-weight walk: per level, Z_n..Z_{m+1} then Y_m..Y_1.
struct Block {
  GenKind kind;
  int N;
  int index;  // 0-based into rx.q / rx.r
  const std::vector<int>* positions;
};

template <typename F>
void for_each_block(const Presentation& pres, const Reindexing& rx, const Buckets& b, F&& f) {
  const int p1 = pres.p1();
  const int m = rx.m;
  const int n = pres.n();
  for (int N = 0; N < p1; ++N) {
    for (int zi = n - m - 1; zi >= 0; --zi)
      if (f(Block{GenKind::Z, N, zi, &b.z[zi][static_cast<std::size_t>(N)]})) return;
    if (N <= p1 - 2)
      for (int qi = m - 1; qi >= 0; --qi)
        if (f(Block{GenKind::Y, N, qi, &b.y[qi][static_cast<std::size_t>(N)]})) return;
  }
}

} // namespace detail

/// Locate which case of the partition brackets delta, per the cumulative
/// block sums; empty boundary blocks are skipped.
inline LocatedCase locate_case(const Presentation& pres, const Reindexing& rx,
                               const ModifiedNf& mnf) {
  if (classify(pres, mnf) != TypeTag::Type3Zero)
    throw std::invalid_argument("locate_case: element is not of Type 3^0");
  const std::int64_t delta = -mnf.delta_pow;
  Buckets b = build_buckets(pres, rx, mnf);
  std::optional<LocatedCase> found;
  std::int64_t cum = 0;
  detail::for_each_block(pres, rx, b, [&](const detail::Block& blk) {
    const std::int64_t sz = static_cast<std::int64_t>(blk.positions->size());
    if (sz == 0) return false;
    const int M = blk.kind == GenKind::Z ? pres.n() - (rx.m + blk.index + 1)
                                         : pres.n() - (blk.index + 1);
    if (delta < cum + sz) {
      found = LocatedCase{CaseId{blk.N, M, false, blk.kind}, static_cast<int>(delta - cum)};
      return true;
    }
    if (delta == cum + sz) {
      found = LocatedCase{CaseId{blk.N, M, true, blk.kind}, 0};
      return true;
    }
    cum += sz;
    return false;
  });
  if (!found) throw std::logic_error("locate_case: delta not bracketed");  // unreachable
  return *found;
}

/// The unique proper geodesic representative: the modified normal form for
/// Types 1 and 3^+, the full spread for Types 2 and 3^- \ 3^+, and for
/// Type 3^0 the output chosen by descending blocks with leftmost selection.
inline SyllableWord canonical_spread(const Presentation& pres, const Reindexing& rx,
                                     const ModifiedNf& mnf) {
  const TypeTag tag = classify(pres, mnf);
  if (tag == TypeTag::Type1 || tag == TypeTag::Type3Plus) return mnf.as_word();
  const RNuData rn = r_nu(pres, mnf);
  const std::int64_t delta = -mnf.delta_pow;
  if (tag == TypeTag::Type2 || tag == TypeTag::Type3MinusNotPlus)
    return spread_word(pres, mnf, rn.r_set, mnf.delta_pow + rn.r_nu);

  Buckets b = build_buckets(pres, rx, mnf);
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(delta));
  std::int64_t remaining = delta;
  detail::for_each_block(pres, rx, b, [&](const detail::Block& blk) {
    const std::int64_t sz = static_cast<std::int64_t>(blk.positions->size());
    if (remaining >= sz) {
      chosen.insert(chosen.end(), blk.positions->begin(), blk.positions->end());
      remaining -= sz;
      return remaining == 0;
    }
    chosen.insert(chosen.end(), blk.positions->begin(),
                  blk.positions->begin() + static_cast<std::ptrdiff_t>(remaining));
    remaining = 0;
    return true;
  });
  assert(remaining == 0);
  std::sort(chosen.begin(), chosen.end());
  return spread_word(pres, mnf, chosen, 0);
}

// ---------------------------------------------------------------------------
// Gamma membership: the syntactic window checks defining the canonical sets.
// ---------------------------------------------------------------------------

namespace detail {

struct Window {
  int lo = 0, hi = 0;
  bool contains(int e) const { return e >= lo && e <= hi && e != 0; }
};

// Windows of the odd-case segment templates (segment 0/1/2 around the two
// distinguished boundary syllables) and of the even-case shape.
inline Window gamma30_window(const Presentation& pres, const Reindexing& rx, const CaseId& c,
                             int orig_gen, int segment /*0,1,2; even cases use 0*/) {
  const auto ni = rx.new_of_orig[static_cast<std::size_t>(orig_gen)];
  const int N = c.N;
  const int k0 = pres.n() - c.M;  // paper index of the boundary block
  if (c.boundary == GenKind::Z) {
    if (ni.kind == GenKind::Y) {
      const int qm = rx.q_minus(ni.index), qp = rx.q_plus(ni.index);
      return Window{-(qm + N), qp - N};
    }
    const int k = rx.m + ni.index + 1;
    const int rm = rx.r_minus(ni.index), rp = rx.r_plus(ni.index);
    if (c.even) {
      if (k >= k0) return Window{-(rm + N + 1), rp - N - 1};
      return Window{-(rm + N), rp - N};
    }
    if (k > k0) return Window{-(rm + N + 1), rp - N - 1};
    if (k < k0) return Window{-(rm + N), rp - N};
    switch (segment) {
      case 0: return Window{-(rm + N), rp - N - 1};
      case 1: return Window{-(rm + N + 1), rp - N - 1};
      default: return Window{-(rm + N), rp - N};
    }
  }
  // boundary is a Y block
  if (ni.kind == GenKind::Z) {
    const int rm = rx.r_minus(ni.index), rp = rx.r_plus(ni.index);
    return Window{-(rm + N + 1), rp - N - 1};
  }
  const int k = ni.index + 1;
  const int qm = rx.q_minus(ni.index), qp = rx.q_plus(ni.index);
  if (c.even) {
    if (k >= k0) return Window{-(qm + N + 1), qp - N - 1};
    return Window{-(qm + N), qp - N};
  }
  if (k > k0) return Window{-(qm + N + 1), qp - N - 1};
  if (k < k0) return Window{-(qm + N), qp - N};
  switch (segment) {
    case 0: return Window{-(qm + N), qp - N - 1};
    case 1: return Window{-(qm + N + 1), qp - N - 1};
    default: return Window{-(qm + N), qp - N};
  }
}

inline bool gamma30_case_member(const Presentation& pres, const Reindexing& rx,
                                const SyllableWord& w, const CaseId& c) {
  const int k0 = pres.n() - c.M;
  const int boundary_gen = c.boundary == GenKind::Z ? rx.orig_of_r[static_cast<std::size_t>(k0 - rx.m - 1)]
                                                    : rx.orig_of_q[static_cast<std::size_t>(k0 - 1)];
  const int bm = c.boundary == GenKind::Z ? rx.r_minus(k0 - rx.m - 1) : rx.q_minus(k0 - 1);
  const int bp = c.boundary == GenKind::Z ? rx.r_plus(k0 - rx.m - 1) : rx.q_plus(k0 - 1);
  const auto& syls = w.syllables();

  if (c.even) {
    bool has_marker = false;  // an exponent -(b^- + N + 1) on the boundary generator
    bool has_upper = false;   // some exponent above its generator's ^- bound
    for (const auto& s : syls) {
      if (!gamma30_window(pres, rx, c, s.gen, 0).contains(s.exp)) return false;
      if (s.gen == boundary_gen && s.exp == -(bm + c.N + 1)) has_marker = true;
      if (s.exp >= pres.p_minus(s.gen) + 1) has_upper = true;
    }
    return has_marker && has_upper;
  }

  // Odd case: w == seg0 . x^{-(b^- + N + 1)} . seg1 . x^{b^+ - N} . seg2 with
  // the boundary generator's markers; the decomposition points are forced.
  const int lo_marker = -(bm + c.N + 1);
  const int hi_marker = bp - c.N;
  std::size_t i = syls.size();
  for (std::size_t j = 0; j < syls.size(); ++j)
    if (syls[j].gen == boundary_gen && syls[j].exp == lo_marker) {
      i = j;
      break;
    }
  if (i == syls.size()) return false;
  std::size_t i2 = syls.size();
  for (std::size_t j = i + 1; j < syls.size(); ++j)
    if (syls[j].gen == boundary_gen && syls[j].exp == hi_marker) {
      i2 = j;
      break;
    }
  if (i2 == syls.size()) return false;
  for (std::size_t j = 0; j < syls.size(); ++j) {
    if (j == i || j == i2) continue;
    const int segment = j < i ? 0 : (j < i2 ? 1 : 2);
    if (!gamma30_window(pres, rx, c, syls[j].gen, segment).contains(syls[j].exp)) return false;
  }
  return true;
}

} // namespace detail

/// The case grid of the Figure-1 partition, in walk order.
inline std::vector<CaseId> gamma30_case_grid(const Presentation& pres, const Reindexing& rx) {
  std::vector<CaseId> out;
  const int p1 = pres.p1();
  const int n = pres.n();
  const int m = rx.m;
  for (int N = 0; N <= p1 - 1; ++N)
    for (int M = 0; M <= n - m - 1; ++M) {
      out.push_back(CaseId{N, M, false, GenKind::Z});
      if (N <= p1 - 2 || M <= n - m - 2) out.push_back(CaseId{N, M, true, GenKind::Z});
    }
  const int y_even_top = (m < n) ? p1 - 2 : p1 - 3;
  for (int N = 0; N <= p1 - 2; ++N)
    for (int M = n - m; M <= n - 1; ++M) {
      out.push_back(CaseId{N, M, false, GenKind::Y});
      if (N <= y_even_top || (m == n && N == p1 - 2 && M <= n - 2))
        out.push_back(CaseId{N, M, true, GenKind::Y});
    }
  return out;
}

/// Which canonical class a word lies in; all flags false when it is none.
struct GammaMembership {
  bool gamma1 = false;
  bool gamma2 = false;
  bool gamma3_plus = false;
  bool gamma3_minus = false;
  std::vector<CaseId> gamma30;  // matching Type-3^0 cases (at most one by Thm 4.4)
  bool in_gamma() const {
    return gamma1 || gamma2 || gamma3_plus || gamma3_minus || !gamma30.empty();
  }
  int class_count() const {
    return (gamma1 ? 1 : 0) + (gamma2 ? 1 : 0) + ((gamma3_plus || gamma3_minus) ? 1 : 0) +
           (gamma30.empty() ? 0 : 1);
  }
};

inline GammaMembership gamma_membership(const Presentation& pres, const Reindexing& rx,
                                        const SyllableWord& w) {
  GammaMembership out;
  bool in_upper = true;  // exponents in [-p^-, p^+]
  bool in_lower = true;  // exponents in [-p^+, p^-]
  for (const auto& s : w.syllables()) {
    const auto hb = pres.half_bounds(s.gen);
    if (s.exp < -hb.minus || s.exp > hb.plus) in_upper = false;
    if (s.exp < -hb.plus || s.exp > hb.minus) in_lower = false;
  }
  if (w.delta_pow() > 0) {
    out.gamma1 = in_upper;
    return out;
  }
  if (w.delta_pow() < 0) {
    out.gamma2 = in_lower;
    return out;
  }
  out.gamma3_plus = in_upper;
  out.gamma3_minus = in_lower;
  if (!in_upper && !in_lower) {
    bool type3_shaped = true;
    for (const auto& s : w.syllables())
      if (std::abs(s.exp) > pres.p_plus(s.gen)) type3_shaped = false;
    if (type3_shaped)
      for (const CaseId& c : gamma30_case_grid(pres, rx))
        if (detail::gamma30_case_member(pres, rx, w, c)) out.gamma30.push_back(c);
  }
  return out;
}

/// Enumerate every word with delta_pow = 0, exponents within the given
/// per-generator [lo, hi] \ {0} windows, and length <= max_len.
template <typename F>
void for_each_window_word(const std::vector<std::pair<int, int>>& windows, int max_len, F&& f) {
  std::vector<Syllable> syls;
  auto rec = [&](auto&& self, int last_gen, int remaining) -> void {
    f(syls);
    for (int g = 0; g < static_cast<int>(windows.size()); ++g) {
      if (g == last_gen) continue;
      const auto [lo, hi] = windows[static_cast<std::size_t>(g)];
      for (int e = lo; e <= hi; ++e) {
        if (e == 0 || std::abs(e) > remaining) continue;
        syls.push_back(Syllable{g, e});
        self(self, g, remaining - std::abs(e));
        syls.pop_back();
      }
    }
  };
  rec(rec, -1, max_len);
}

} // namespace amal
