#pragma once

#include <stdexcept>
#include <vector>

namespace amal {

/// Half-window bounds p_k^- = floor((p_k - p_1)/2), p_k^+ = floor((p_1 + p_k - 1)/2).
struct HalfBounds {
  int minus = 0;
  int plus = 0;
};

/// The defining tuple (p_1,...,p_n) of the one-relator family
/// < x_1,...,x_n | x_1^{p_1} = ... = x_n^{p_n} >.
/// Exponents are sorted non-decreasing with p_1 >= 2 and n >= 2.
class Presentation {
public:
  explicit Presentation(std::vector<int> exponents) : p_(std::move(exponents)) {
    if (p_.size() < 2) throw std::invalid_argument("Presentation: need n >= 2 generators");
    int prev = 2;
    for (int e : p_) {
      if (e < prev) throw std::invalid_argument("Presentation: exponents must be sorted and >= 2");
      prev = e;
    }
  }

  int n() const { return static_cast<int>(p_.size()); }
  int p1() const { return p_.front(); }
  /// Exponent of generator k (0-based).
  int p(int k) const { return p_.at(static_cast<std::size_t>(k)); }
  const std::vector<int>& exponents() const { return p_; }

  HalfBounds half_bounds(int k) const {
    if (k < 0 || k >= n()) throw std::invalid_argument("half_bounds: generator out of range");
    return HalfBounds{(p_[k] - p_[0]) / 2, (p_[0] + p_[k] - 1) / 2};
  }
  int p_minus(int k) const { return half_bounds(k).minus; }
  int p_plus(int k) const { return half_bounds(k).plus; }

  friend bool operator==(const Presentation& a, const Presentation& b) { return a.p_ == b.p_; }

private:
  std::vector<int> p_;
};

/// Generator kind under the parity split of p_k - p_1.
enum class GenKind { Y, Z };

/// Relabeling of the generators by parity of p_k - p_1: the m generators with
/// even difference become y_1..y_m (exponents q, sorted), the rest become
/// z_{m+1}..z_n (exponents r, sorted). Ties keep original generator order.
struct Reindexing {
  int m = 0;
  std::vector<int> q;          // size m, q[0] = p_1
  std::vector<int> r;          // size n - m
  std::vector<int> orig_of_q;  // 0-based original generator index per q slot
  std::vector<int> orig_of_r;
  struct NewIndex {
    GenKind kind;
    int index;  // 0-based position within q (kind Y) or r (kind Z)
  };
  std::vector<NewIndex> new_of_orig;  // size n

  int q_minus(int i) const { return (q[i] - q[0]) / 2; }
  int q_plus(int i) const { return (q[0] + q[i] - 2) / 2; }
  int r_minus(int i) const { return (r[i] - q[0] - 1) / 2; }
  int r_plus(int i) const { return (q[0] + r[i] - 1) / 2; }
};

inline Reindexing reindex(const Presentation& pres) {
  Reindexing out;
  const int n = pres.n();
  out.new_of_orig.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const bool even = ((pres.p(k) - pres.p1()) % 2) == 0;
    if (even) {
      out.new_of_orig[k] = {GenKind::Y, static_cast<int>(out.q.size())};
      out.q.push_back(pres.p(k));
      out.orig_of_q.push_back(k);
    } else {
      out.new_of_orig[k] = {GenKind::Z, static_cast<int>(out.r.size())};
      out.r.push_back(pres.p(k));
      out.orig_of_r.push_back(k);
    }
  }
  out.m = static_cast<int>(out.q.size());
  return out;
}

} // namespace amal
