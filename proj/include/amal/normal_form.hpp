#pragma once

#include "amal/presentation.hpp"
#include "amal/word.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace amal {

/// Garside normal form x^{alpha_1}...x^{alpha_tau} * Delta^d with
/// 1 <= alpha_j <= p_{i_j} - 1.
struct GarsideNf {
  std::vector<Syllable> syllables;
  std::int64_t delta_pow = 0;
  friend bool operator==(const GarsideNf&, const GarsideNf&) = default;
};

/// Modified normal form: exponents in [-p^-, p^+] \ {0}, delta_pow = d + rho.
/// Unique per group element; the canonical key for all identity questions.
struct ModifiedNf {
  std::vector<Syllable> syllables;
  std::int64_t delta_pow = 0;
  friend bool operator==(const ModifiedNf&, const ModifiedNf&) = default;
  friend auto operator<=>(const ModifiedNf&, const ModifiedNf&) = default;
  SyllableWord as_word() const { return SyllableWord(syllables, delta_pow); }
};

/// Positions j (0-based) with p^- + 1 <= exp_j <= p^+, i.e. spread candidates.
struct RNuData {
  std::vector<int> r_set;
  int r_nu = 0;
};

inline GarsideNf garside_nf(const Presentation& pres, const SyllableWord& lambda) {
  GarsideNf out;
  out.syllables = lambda.syllables();
  out.delta_pow = lambda.delta_pow();
  for (auto& s : out.syllables) {
    const int p = pres.p(s.gen);
    if (s.exp <= -p || s.exp >= p)
      throw std::invalid_argument("garside_nf: exponent outside lambda-form bounds");
    if (s.exp < 0) {
      s.exp += p;
      --out.delta_pow;
    }
  }
  return out;
}

inline ModifiedNf modified_nf(const Presentation& pres, const GarsideNf& gnf) {
  ModifiedNf out;
  out.syllables = gnf.syllables;
  out.delta_pow = gnf.delta_pow;
  for (auto& s : out.syllables) {
    if (s.exp >= pres.p_plus(s.gen) + 1) {
      s.exp -= pres.p(s.gen);
      ++out.delta_pow;  // rho
    }
  }
  return out;
}

inline RNuData r_nu(const Presentation& pres, const ModifiedNf& mnf) {
  RNuData out;
  for (std::size_t j = 0; j < mnf.syllables.size(); ++j) {
    const auto& s = mnf.syllables[j];
    const auto hb = pres.half_bounds(s.gen);
    if (s.exp >= hb.minus + 1 && s.exp <= hb.plus) out.r_set.push_back(static_cast<int>(j));
  }
  out.r_nu = static_cast<int>(out.r_set.size());
  return out;
}

inline ModifiedNf canonical_key(const Presentation& pres, const SyllableWord& w) {
  return modified_nf(pres, garside_nf(pres, to_lambda(pres, w)));
}

inline ModifiedNf canonical_key(const Presentation& pres, const std::vector<Letter>& letters) {
  return modified_nf(pres, garside_nf(pres, to_lambda(pres, letters)));
}

/// Canonical key of the inverse element, computed directly from the key.
inline ModifiedNf inverse_key(const Presentation& pres, const ModifiedNf& mnf) {
  ModifiedNf out;
  out.delta_pow = -mnf.delta_pow;
  out.syllables.assign(mnf.syllables.rbegin(), mnf.syllables.rend());
  for (auto& s : out.syllables) {
    s.exp = -s.exp;
    if (s.exp < -pres.p_minus(s.gen)) {
      s.exp += pres.p(s.gen);
      --out.delta_pow;
    }
  }
  return out;
}

/// Canonical key of g * x_gen^{sign} given the key of g. Only the last
/// syllable can change, so this is O(1) plus the copy.
inline void append_letter_inplace(const Presentation& pres, ModifiedNf& key, int gen, int sign) {
  int e = sign;
  if (!key.syllables.empty() && key.syllables.back().gen == gen) {
    e += key.syllables.back().exp;
    key.syllables.pop_back();
  }
  if (e == 0) return;
  const auto hb = pres.half_bounds(gen);
  if (e > hb.plus) {
    e -= pres.p(gen);
    ++key.delta_pow;
    if (e == 0) return;
  } else if (e < -hb.minus) {
    e += pres.p(gen);
    --key.delta_pow;
  }
  key.syllables.push_back(Syllable{gen, e});
}

inline ModifiedNf append_letter(const Presentation& pres, ModifiedNf key, const Letter& l) {
  append_letter_inplace(pres, key, l.gen, l.sign);
  return key;
}

struct MnfHash {
  std::size_t operator()(const ModifiedNf& m) const {
    std::size_t h = std::hash<std::int64_t>{}(m.delta_pow);
    for (const auto& s : m.syllables) {
      h ^= h >> 13;
      h *= 0x9E3779B97F4A7C15ull;
      h ^= static_cast<std::size_t>(s.gen * 131 + s.exp + 64);
    }
    return h;
  }
};

} // namespace amal
