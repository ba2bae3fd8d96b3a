#pragma once

#include "amal/geodesics.hpp"
#include "amal/normal_form.hpp"
#include "amal/presentation.hpp"
#include "amal/word.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#if defined(_OPENMP)
#include <parallel/algorithm>
#endif

namespace amal {

namespace detail {

inline int ceil_log2(std::uint64_t count) {
  int b = 0;
  while ((std::uint64_t{1} << b) < count) ++b;
  return b;
}

/// Fixed-capacity modified normal form used on the BFS hot path.
struct SmallWord {
  static constexpr int kCap = 24;
  std::array<std::int16_t, kCap> gens{};
  std::array<std::int16_t, kCap> exps{};
  int tau = 0;
  std::int32_t delta = 0;

  struct Undo {
    int tau;
    std::int32_t delta;
    std::int16_t gen, exp;
  };

  Undo save() const {
    return Undo{tau, delta, tau > 0 ? gens[tau - 1] : std::int16_t{0},
                tau > 0 ? exps[tau - 1] : std::int16_t{0}};
  }
  void restore(const Undo& u) {
    tau = u.tau;
    delta = u.delta;
    if (tau > 0) {
      gens[tau - 1] = u.gen;
      exps[tau - 1] = u.exp;
    }
  }

  void append(const Presentation& pres, int gen, int sign) {
    int e = sign;
    if (tau > 0 && gens[tau - 1] == gen) {
      e += exps[tau - 1];
      --tau;
    }
    if (e == 0) return;
    const auto hb = pres.half_bounds(gen);
    if (e > hb.plus) {
      e -= pres.p(gen);
      ++delta;
      if (e == 0) return;
    } else if (e < -hb.minus) {
      e += pres.p(gen);
      --delta;
    }
    gens[tau] = static_cast<std::int16_t>(gen);
    exps[tau] = static_cast<std::int16_t>(e);
    ++tau;
  }

  ModifiedNf to_mnf() const {
    ModifiedNf m;
    m.delta_pow = delta;
    m.syllables.reserve(static_cast<std::size_t>(tau));
    for (int j = 0; j < tau; ++j) m.syllables.push_back(Syllable{gens[j], exps[j]});
    return m;
  }

  static SmallWord from_mnf(const ModifiedNf& m) {
    SmallWord w;
    if (m.syllables.size() > kCap) throw std::length_error("SmallWord: word too long");
    w.tau = static_cast<int>(m.syllables.size());
    w.delta = static_cast<std::int32_t>(m.delta_pow);
    for (int j = 0; j < w.tau; ++j) {
      w.gens[j] = static_cast<std::int16_t>(m.syllables[static_cast<std::size_t>(j)].gen);
      w.exps[j] = static_cast<std::int16_t>(m.syllables[static_cast<std::size_t>(j)].exp);
    }
    return w;
  }
};

/// Injective fixed-width packing of every modified normal form reachable
/// within the given letter radius. Syllable count and |delta_pow| are bounded
/// by the radius (each spread syllable carries at least one letter).
template <typename KeyInt>
struct KeyCodec {
  int n = 0;
  int max_tau = 0;
  int tau_bits = 0, delta_bits = 0, first_bits = 0, next_bits = 0, exp_bits = 0;
  int total_bits = 0;
  int mm = 0;  // max p^- over generators
  std::int32_t delta_off = 0;

  static std::optional<KeyCodec> make(const Presentation& pres, int radius) {
    KeyCodec c;
    c.n = pres.n();
    c.max_tau = radius;
    if (radius > SmallWord::kCap) return std::nullopt;
    int mp = 0;
    for (int k = 0; k < pres.n(); ++k) {
      c.mm = std::max(c.mm, pres.p_minus(k));
      mp = std::max(mp, pres.p_plus(k));
    }
    c.tau_bits = ceil_log2(static_cast<std::uint64_t>(radius) + 1);
    c.delta_off = 2 * radius;  // |delta_pow| <= 3/2 radius for any such element
    c.delta_bits = ceil_log2(static_cast<std::uint64_t>(4 * radius) + 1);
    c.first_bits = ceil_log2(static_cast<std::uint64_t>(c.n));
    c.next_bits = ceil_log2(static_cast<std::uint64_t>(c.n) - 1);
    c.exp_bits = ceil_log2(static_cast<std::uint64_t>(c.mm) + static_cast<std::uint64_t>(mp));
    c.total_bits = c.tau_bits + c.delta_bits + c.first_bits +
                   (radius > 0 ? (radius - 1) * c.next_bits : 0) + radius * c.exp_bits;
    if (c.total_bits > static_cast<int>(sizeof(KeyInt) * 8)) return std::nullopt;
    return c;
  }

  KeyInt encode(const SmallWord& w) const {
    KeyInt key = static_cast<KeyInt>(w.tau);
    int pos = tau_bits;
    key |= static_cast<KeyInt>(static_cast<std::uint32_t>(w.delta + delta_off)) << pos;
    pos += delta_bits;
    for (int j = 0; j < w.tau; ++j) {
      std::uint32_t gcode;
      int gbits;
      if (j == 0) {
        gcode = static_cast<std::uint32_t>(w.gens[0]);
        gbits = first_bits;
      } else {
        gcode = static_cast<std::uint32_t>(w.gens[j] - (w.gens[j] > w.gens[j - 1] ? 1 : 0));
        gbits = next_bits;
      }
      key |= static_cast<KeyInt>(gcode) << pos;
      pos += gbits;
      const int e = w.exps[j];
      const std::uint32_t ecode = static_cast<std::uint32_t>(e < 0 ? e + mm : e + mm - 1);
      key |= static_cast<KeyInt>(ecode) << pos;
      pos += exp_bits;
    }
    return key;
  }

  void decode(KeyInt key, SmallWord& w) const {
    const auto field = [&key](int bits) {
      const std::uint32_t v = static_cast<std::uint32_t>(key & ((KeyInt{1} << bits) - 1));
      key >>= bits;
      return v;
    };
    w.tau = static_cast<int>(field(tau_bits));
    w.delta = static_cast<std::int32_t>(field(delta_bits)) - delta_off;
    for (int j = 0; j < w.tau; ++j) {
      std::uint32_t gcode = field(j == 0 ? first_bits : next_bits);
      if (j > 0 && static_cast<int>(gcode) >= w.gens[j - 1]) ++gcode;
      w.gens[j] = static_cast<std::int16_t>(gcode);
      const std::uint32_t ecode = field(exp_bits);
      const int e = static_cast<int>(ecode) - mm;
      w.exps[j] = static_cast<std::int16_t>(e < 0 ? e : e + 1);
    }
  }
};

template <typename K>
void sort_unique(std::vector<K>& v) {
#if defined(_OPENMP)
  __gnu_parallel::sort(v.begin(), v.end());
#else
  std::sort(v.begin(), v.end());
#endif
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Remove from `v` (sorted, unique) everything present in sorted `a` or `b`.
template <typename K>
void subtract_sorted(std::vector<K>& v, const std::vector<K>& a, const std::vector<K>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  std::size_t out = 0;
  for (const K& key : v) {
    while (ia != a.end() && *ia < key) ++ia;
    if (ia != a.end() && *ia == key) continue;
    while (ib != b.end() && *ib < key) ++ib;
    if (ib != b.end() && *ib == key) continue;
    v[out++] = key;
  }
  v.resize(out);
}

} // namespace detail

/// Sphere sizes #{g : ||g|| = l} for l = 0..max_len, with optional per-type
/// breakdown. `complete` is false when the memory budget cut the run short.
struct SphereTable {
  std::vector<int> p;
  int max_len = 0;
  bool complete = true;
  std::vector<std::uint64_t> counts;
  std::vector<std::array<std::uint64_t, 5>> per_type;  // indexed by TypeTag, if requested

  std::string to_csv() const {
    std::string out = per_type.empty() ? "length,count\n"
                                       : "length,count,type1,type2,type3p,type3m,type30\n";
    for (std::size_t l = 0; l < counts.size(); ++l) {
      out += std::to_string(l) + "," + std::to_string(counts[l]);
      if (!per_type.empty())
        for (const auto c : per_type[l]) out += "," + std::to_string(c);
      out += "\n";
    }
    return out;
  }
};

namespace detail {

inline TypeTag classify_small(const Presentation& pres, const SmallWord& w) {
  if (w.delta > 0) return TypeTag::Type1;
  if (w.delta == 0) return TypeTag::Type3Plus;
  int rn = 0;
  for (int j = 0; j < w.tau; ++j) {
    const auto hb = pres.half_bounds(w.gens[j]);
    if (w.exps[j] >= hb.minus + 1 && w.exps[j] <= hb.plus) ++rn;
  }
  const std::int64_t delta = -w.delta;
  if (rn < delta) return TypeTag::Type2;
  if (rn == delta) return TypeTag::Type3MinusNotPlus;
  return TypeTag::Type3Zero;
}

template <typename KeyInt>
SphereTable bfs_spheres_impl(const Presentation& pres, const KeyCodec<KeyInt>& codec, int L,
                             bool with_types, std::uint64_t budget_bytes) {
  SphereTable table;
  table.p = pres.exponents();
  table.max_len = L;
  table.counts.push_back(1);
  if (with_types) {
    table.per_type.emplace_back();
    table.per_type[0][static_cast<int>(TypeTag::Type3Plus)] = 1;
  }

  std::vector<KeyInt> prev2, prev1;
  prev1.push_back(codec.encode(SmallWord{}));  // the identity
  const int n = pres.n();
  SmallWord parent;
  for (int l = 1; l <= L; ++l) {
    const std::uint64_t cand_count = static_cast<std::uint64_t>(prev1.size()) * (2 * n);
    const std::uint64_t need =
        (cand_count + prev1.size() + prev2.size()) * sizeof(KeyInt) + (64 << 10);
    if (need > budget_bytes) {
      table.complete = false;
      table.max_len = l - 1;
      return table;
    }
    std::vector<KeyInt> cand;
    cand.reserve(cand_count);
    for (const KeyInt key : prev1) {
      codec.decode(key, parent);
      const auto undo = parent.save();
      for (int g = 0; g < n; ++g) {
        for (int s : {1, -1}) {
          parent.append(pres, g, s);
          cand.push_back(codec.encode(parent));
          parent.restore(undo);
        }
      }
    }
    sort_unique(cand);
    subtract_sorted(cand, prev1, prev2);
    table.counts.push_back(cand.size());
    if (with_types) {
      std::array<std::uint64_t, 5> tc{};
      for (const KeyInt key : cand) {
        codec.decode(key, parent);
        ++tc[static_cast<int>(classify_small(pres, parent))];
      }
      table.per_type.push_back(tc);
    }
    prev2 = std::move(prev1);
    prev1 = std::move(cand);
  }
  return table;
}

} // namespace detail

/// Exact sphere counts by breadth-synchronous expansion over the 2n letters,
/// deduplicating by packed modified-normal-form keys.
inline SphereTable bfs_spheres(const Presentation& pres, int L, bool with_types = false,
                               std::uint64_t budget_bytes = (std::uint64_t{4} << 30)) {
  if (L < 0) throw std::invalid_argument("bfs_spheres: negative depth");
  if (auto c64 = detail::KeyCodec<std::uint64_t>::make(pres, L))
    return detail::bfs_spheres_impl(pres, *c64, L, with_types, budget_bytes);
  if (auto c128 = detail::KeyCodec<unsigned __int128>::make(pres, L))
    return detail::bfs_spheres_impl(pres, *c128, L, with_types, budget_bytes);
  throw std::length_error("bfs_spheres: depth too large to pack element keys");
}

/// Distance map for the ball of a given radius; small-depth companion of
/// bfs_spheres used by geodesic enumeration and the desk-scale checks.
class BallMap {
public:
  BallMap(const Presentation& pres, int radius)
      : pres_(pres), radius_(radius),
        codec_(detail::KeyCodec<std::uint64_t>::make(pres, radius)) {
    if (!codec_) throw std::length_error("BallMap: radius too large to pack element keys");
    dist_.reserve(1u << 16);
    std::vector<std::uint64_t> frontier{codec_->encode(detail::SmallWord{})};
    dist_.emplace(frontier[0], 0);
    detail::SmallWord parent, child;
    for (int l = 1; l <= radius; ++l) {
      std::vector<std::uint64_t> next;
      for (const auto key : frontier) {
        codec_->decode(key, parent);
        for (int g = 0; g < pres.n(); ++g) {
          for (int s : {1, -1}) {
            child = parent;
            child.append(pres, g, s);
            const auto ckey = codec_->encode(child);
            if (dist_.emplace(ckey, static_cast<std::uint8_t>(l)).second) next.push_back(ckey);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  const Presentation& pres() const { return pres_; }
  int radius() const { return radius_; }
  std::size_t size() const { return dist_.size(); }

  std::optional<int> distance(const ModifiedNf& m) const {
    // Anything the codec cannot pack lies outside the ball.
    if (m.syllables.size() > static_cast<std::size_t>(radius_)) return std::nullopt;
    if (std::abs(m.delta_pow) > 2 * static_cast<std::int64_t>(radius_)) return std::nullopt;
    const auto it = dist_.find(codec_->encode(detail::SmallWord::from_mnf(m)));
    if (it == dist_.end()) return std::nullopt;
    return static_cast<int>(it->second);
  }

  /// Visit every element of the ball as (mnf, distance).
  template <typename F>
  void for_each(F&& f) const {
    detail::SmallWord w;
    for (const auto& [key, d] : dist_) {
      codec_->decode(key, w);
      f(w.to_mnf(), static_cast<int>(d));
    }
  }

private:
  Presentation pres_;
  int radius_;
  std::optional<detail::KeyCodec<std::uint64_t>> codec_;
  std::unordered_map<std::uint64_t, std::uint8_t> dist_;
};

/// Every spelling of g with length ||g||, by depth-first search with distance
/// pruning from both endpoints.
struct GeodesicSet {
  std::vector<std::vector<Letter>> words;
  bool truncated = false;
};

inline GeodesicSet all_geodesics(const Presentation& pres, const BallMap& ball,
                                 const ModifiedNf& g,
                                 std::optional<std::uint64_t> cap = std::nullopt) {
  const std::int64_t len = geodesic_length(pres, g);
  if (len > ball.radius()) throw std::invalid_argument("all_geodesics: ball radius too small");
  GeodesicSet out;
  std::vector<Letter> path;
  ModifiedNf h;  // prefix element
  ModifiedNf w = inverse_key(pres, g);  // g^{-1} h
  const auto rec = [&](auto&& self) -> bool {
    if (static_cast<std::int64_t>(path.size()) == len) {
      out.words.push_back(path);
      return !(cap && out.words.size() > *cap);
    }
    for (int gen = 0; gen < pres.n(); ++gen) {
      for (int s : {1, -1}) {
        ModifiedNf h2 = h;
        append_letter_inplace(pres, h2, gen, s);
        const auto dh = ball.distance(h2);
        if (!dh || *dh != static_cast<int>(path.size()) + 1) continue;
        ModifiedNf w2 = w;
        append_letter_inplace(pres, w2, gen, s);
        const auto dw = ball.distance(w2);
        if (!dw || *dw != len - static_cast<std::int64_t>(path.size()) - 1) continue;
        path.push_back(Letter{gen, s});
        std::swap(h, h2);
        std::swap(w, w2);
        const bool keep_going = self(self);
        std::swap(h, h2);
        std::swap(w, w2);
        path.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  };
  if (!rec(rec)) {
    out.truncated = true;
    out.words.pop_back();
  }
  return out;
}

inline GeodesicSet all_geodesics(const Presentation& pres, const ModifiedNf& g,
                                 std::optional<std::uint64_t> cap = std::nullopt) {
  const BallMap ball(pres, static_cast<int>(geodesic_length(pres, g)));
  return all_geodesics(pres, ball, g, cap);
}

} // namespace amal
