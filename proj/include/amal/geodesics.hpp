#pragma once

#include "amal/normal_form.hpp"
#include "amal/poly.hpp"
#include "amal/presentation.hpp"
#include "amal/word.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace amal {

/// Element classification by (d + rho, r_nu).
enum class TypeTag { Type1, Type2, Type3Plus, Type3MinusNotPlus, Type3Zero };

inline const char* to_string(TypeTag t) {
  switch (t) {
    case TypeTag::Type1: return "1";
    case TypeTag::Type2: return "2";
    case TypeTag::Type3Plus: return "3+";
    case TypeTag::Type3MinusNotPlus: return "3-\\3+";
    case TypeTag::Type3Zero: return "3.0";
  }
  return "?";
}

inline TypeTag classify(const Presentation& pres, const ModifiedNf& mnf) {
  const std::int64_t d = mnf.delta_pow;
  if (d > 0) return TypeTag::Type1;
  if (d == 0) return TypeTag::Type3Plus;
  const std::int64_t delta = -d;
  const int rn = r_nu(pres, mnf).r_nu;
  if (rn < delta) return TypeTag::Type2;
  if (rn == delta) return TypeTag::Type3MinusNotPlus;
  return TypeTag::Type3Zero;
}

/// Per-generator maxima Pos_{x_k} and Neg_{x_k} of a Type-3 shaped word.
struct PosNegProfile {
  std::vector<int> pos;  // max nonnegative exponent per generator, 0 if absent
  std::vector<int> neg;  // max negated nonpositive exponent per generator, 0 if absent
};

inline PosNegProfile pos_neg(const Presentation& pres, const SyllableWord& w) {
  if (w.delta_pow() != 0) throw std::invalid_argument("pos_neg: requires delta_pow = 0");
  PosNegProfile out;
  out.pos.assign(static_cast<std::size_t>(pres.n()), 0);
  out.neg.assign(static_cast<std::size_t>(pres.n()), 0);
  for (const auto& s : w.syllables()) {
    if (std::abs(s.exp) > pres.p_plus(s.gen))
      throw std::invalid_argument("pos_neg: exponent outside the Type-3 window");
    if (s.exp > 0)
      out.pos[s.gen] = std::max(out.pos[s.gen], s.exp);
    else
      out.neg[s.gen] = std::max(out.neg[s.gen], -s.exp);
  }
  return out;
}

/// Length saved by spreading position j: 2 alpha_j + p_1 - p_{i_j}.
inline int spread_weight(const Presentation& pres, const ModifiedNf& mnf, int j) {
  const auto& s = mnf.syllables[static_cast<std::size_t>(j)];
  return 2 * s.exp + pres.p1() - pres.p(s.gen);
}

/// One maximizing choice of spread positions (sorted ascending, all in R_nu).
struct SpreadChoice {
  std::vector<int> positions;
  friend bool operator==(const SpreadChoice&, const SpreadChoice&) = default;
  friend auto operator<=>(const SpreadChoice&, const SpreadChoice&) = default;
};

/// CE_g: every delta-subset of R_nu maximizing the total spread weight.
/// `choices` is materialized only when the total count fits under `cap`.
struct CeEnumeration {
  std::vector<SpreadChoice> choices;  // sorted lexicographically
  BigInt total = 0;
  bool truncated = false;
};

inline CeEnumeration enumerate_ce(const Presentation& pres, const ModifiedNf& mnf,
                                  std::optional<std::uint64_t> cap = std::nullopt) {
  if (classify(pres, mnf) != TypeTag::Type3Zero)
    throw std::invalid_argument("enumerate_ce: element is not of Type 3^0");
  const std::int64_t delta = -mnf.delta_pow;
  const RNuData rn = r_nu(pres, mnf);

  // Mandatory positions have weight above the threshold; the tie class at the
  // threshold weight is chosen freely.
  std::vector<std::pair<int, int>> by_weight;  // (-weight, position)
  by_weight.reserve(rn.r_set.size());
  for (int j : rn.r_set) by_weight.emplace_back(-spread_weight(pres, mnf, j), j);
  std::sort(by_weight.begin(), by_weight.end());
  const int threshold = -by_weight[static_cast<std::size_t>(delta - 1)].first;

  std::vector<int> mandatory, tie;
  for (auto [nw, j] : by_weight) {
    if (-nw > threshold)
      mandatory.push_back(j);
    else if (-nw == threshold)
      tie.push_back(j);
  }
  std::sort(mandatory.begin(), mandatory.end());
  std::sort(tie.begin(), tie.end());
  const int need = static_cast<int>(delta) - static_cast<int>(mandatory.size());

  CeEnumeration out;
  BigInt total = 1;  // C(|tie|, need)
  for (int i = 0; i < need; ++i) total = total * BigInt(tie.size() - i) / BigInt(i + 1);
  out.total = total;
  if (cap && total > BigInt(*cap)) {
    out.truncated = true;
    return out;
  }

  std::vector<int> pick(static_cast<std::size_t>(need));
  for (int i = 0; i < need; ++i) pick[i] = i;
  while (true) {
    SpreadChoice c;
    c.positions = mandatory;
    for (int i : pick) c.positions.push_back(tie[static_cast<std::size_t>(i)]);
    std::sort(c.positions.begin(), c.positions.end());
    out.choices.push_back(std::move(c));
    // next combination
    int i = need - 1;
    while (i >= 0 && pick[i] == static_cast<int>(tie.size()) - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.choices.begin(), out.choices.end());
  return out;
}

/// Word with the given modified-normal-form positions spread (alpha -> alpha - p).
inline SyllableWord spread_word(const Presentation& pres, const ModifiedNf& mnf,
                                const std::vector<int>& positions, std::int64_t delta_out) {
  std::vector<Syllable> syls = mnf.syllables;
  for (int j : positions) syls[static_cast<std::size_t>(j)].exp -= pres.p(syls[static_cast<std::size_t>(j)].gen);
  return SyllableWord(std::move(syls), delta_out);
}

/// SS_g: all outputs of the suitable-spread procedure, sorted. For Type-3
/// elements this is exactly the set of geodesic representatives.
inline std::vector<SyllableWord> suitable_spread(const Presentation& pres, const ModifiedNf& mnf,
                                                 std::optional<std::uint64_t> cap = std::nullopt) {
  std::vector<SyllableWord> out;
  if (mnf.delta_pow >= 0) {
    out.push_back(mnf.as_word());
    return out;
  }
  const std::int64_t delta = -mnf.delta_pow;
  const RNuData rn = r_nu(pres, mnf);
  if (rn.r_nu <= delta) {
    out.push_back(spread_word(pres, mnf, rn.r_set, mnf.delta_pow + rn.r_nu));
    return out;
  }
  CeEnumeration ce = enumerate_ce(pres, mnf, cap);
  if (ce.truncated) throw std::length_error("suitable_spread: CE_g larger than cap");
  out.reserve(ce.choices.size());
  for (const auto& c : ce.choices) out.push_back(spread_word(pres, mnf, c.positions, 0));
  std::sort(out.begin(), out.end());
  return out;
}

/// Word length of every suitable-spread output.
inline std::int64_t geodesic_length(const Presentation& pres, const ModifiedNf& mnf) {
  std::int64_t base = 0;
  for (const auto& s : mnf.syllables) base += std::abs(static_cast<std::int64_t>(s.exp));
  if (mnf.delta_pow >= 0) return base + mnf.delta_pow * pres.p1();
  const std::int64_t delta = -mnf.delta_pow;
  base += delta * pres.p1();
  const RNuData rn = r_nu(pres, mnf);
  if (rn.r_nu <= delta) {
    std::int64_t saved = 0;
    for (int j : rn.r_set) saved += spread_weight(pres, mnf, j);
    return base - saved;
  }
  std::vector<int> weights;
  weights.reserve(rn.r_set.size());
  for (int j : rn.r_set) weights.push_back(spread_weight(pres, mnf, j));
  std::sort(weights.begin(), weights.end(), std::greater<int>());
  std::int64_t saved = 0;
  for (std::int64_t i = 0; i < delta; ++i) saved += weights[static_cast<std::size_t>(i)];
  return base - saved;
}

inline std::int64_t geodesic_length(const Presentation& pres, const SyllableWord& w) {
  return geodesic_length(pres, canonical_key(pres, w));
}

inline bool is_geodesic(const Presentation& pres, const std::vector<Letter>& letters) {
  return static_cast<std::int64_t>(letters.size()) ==
         geodesic_length(pres, canonical_key(pres, letters));
}

} // namespace amal
