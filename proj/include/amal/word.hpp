#pragma once

#include "amal/presentation.hpp"

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace amal {

/// One letter of the symmetric alphabet: x_gen^{sign}, gen 0-based.
struct Letter {
  int gen = 0;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A run x_gen^{exp}, exp != 0.
struct Syllable {
  int gen = 0;
  int exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Word in run-length form x_{i_1}^{a_1} ... x_{i_tau}^{a_tau} * Delta^c:
/// adjacent syllables have distinct generators and every exponent is nonzero.
/// The empty syllable sequence with c = 0 is the identity.
class SyllableWord {
public:
  SyllableWord() = default;
  SyllableWord(std::vector<Syllable> syllables, std::int64_t delta_pow)
      : syls_(std::move(syllables)), delta_(delta_pow) {
    for (std::size_t i = 0; i < syls_.size(); ++i) {
      if (syls_[i].exp == 0) throw std::invalid_argument("SyllableWord: zero exponent");
      if (i > 0 && syls_[i].gen == syls_[i - 1].gen)
        throw std::invalid_argument("SyllableWord: adjacent equal generators");
    }
  }

  const std::vector<Syllable>& syllables() const { return syls_; }
  std::int64_t delta_pow() const { return delta_; }
  std::size_t size() const { return syls_.size(); }
  bool is_identity() const { return syls_.empty() && delta_ == 0; }

  friend bool operator==(const SyllableWord&, const SyllableWord&) = default;
  friend auto operator<=>(const SyllableWord&, const SyllableWord&) = default;

private:
  std::vector<Syllable> syls_;
  std::int64_t delta_ = 0;
};

/// Number of letters: sum |a_j| + |c| * p_1.
inline std::int64_t word_length(const Presentation& pres, const SyllableWord& w) {
  std::int64_t len = 0;
  for (const auto& s : w.syllables()) len += std::abs(static_cast<std::int64_t>(s.exp));
  len += std::abs(w.delta_pow()) * pres.p1();
  return len;
}

/// Formal inverse as a word (reverse, negate exponents and Delta power).
inline SyllableWord inverse_word(const SyllableWord& w) {
  std::vector<Syllable> syls(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : syls) s.exp = -s.exp;
  return SyllableWord(std::move(syls), -w.delta_pow());
}

/// Cancel adjacent sigma sigma^{-1} pairs until none remain.
inline std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> st;
  st.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!st.empty() && st.back().gen == l.gen && st.back().sign == -l.sign)
      st.pop_back();
    else
      st.push_back(l);
  }
  return st;
}

/// Representative in lambda-form: free reduction and Delta-extraction applied
/// to a fixpoint, scanning left to right. Exponents end up in
/// [-(p_k - 1), p_k - 1] \ {0} with adjacent generators distinct.
inline SyllableWord to_lambda(const Presentation& pres, const std::vector<Syllable>& spelling,
                              std::int64_t delta_pow = 0) {
  std::vector<Syllable> st;
  std::int64_t delta = delta_pow;
  for (const auto& in : spelling) {
    if (in.gen < 0 || in.gen >= pres.n()) throw std::invalid_argument("to_lambda: bad generator");
    if (in.exp == 0) continue;
    std::int64_t e = in.exp;
    if (!st.empty() && st.back().gen == in.gen) {
      e += st.back().exp;
      st.pop_back();
    }
    const int p = pres.p(in.gen);
    while (e >= p) {
      e -= p;
      ++delta;
    }
    while (e <= -p) {
      e += p;
      --delta;
    }
    if (e != 0) st.push_back(Syllable{in.gen, static_cast<int>(e)});
  }
  return SyllableWord(std::move(st), delta);
}

inline SyllableWord to_lambda(const Presentation& pres, const std::vector<Letter>& letters) {
  std::vector<Syllable> syls;
  syls.reserve(letters.size());
  for (const Letter& l : letters) syls.push_back(Syllable{l.gen, l.sign});
  return to_lambda(pres, syls);
}

inline SyllableWord to_lambda(const Presentation& pres, const SyllableWord& w) {
  return to_lambda(pres, w.syllables(), w.delta_pow());
}

/// Spell out as letters; Delta^c becomes x_1^{c p_1}.
inline std::vector<Letter> to_letters(const Presentation& pres, const SyllableWord& w) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(word_length(pres, w)));
  for (const auto& s : w.syllables()) {
    const int sgn = s.exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(s.exp); ++i) out.push_back(Letter{s.gen, sgn});
  }
  const int dsgn = w.delta_pow() > 0 ? 1 : -1;
  for (std::int64_t i = 0; i < std::abs(w.delta_pow()) * pres.p1(); ++i)
    out.push_back(Letter{0, dsgn});
  return out;
}

// ---------------------------------------------------------------------------
// Textual word syntax: whitespace-separated syllables `x3^-2`, `x1` (exponent
// omitted means 1), and `D^c` for Delta^c. Generators are 1-based in text.
// ---------------------------------------------------------------------------

struct ParsedWord {
  std::vector<Syllable> syllables;  // as written, no invariants enforced
  std::int64_t delta_pow = 0;
};

inline ParsedWord parse_word(const std::string& text, int n_generators) {
  ParsedWord out;
  std::size_t i = 0;
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_word: " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    bool is_delta = false;
    int gen = -1;
    if (text[i] == 'D') {
      is_delta = true;
      ++i;
    } else if (text[i] == 'x') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected generator index after 'x'");
      gen = std::stoi(text.substr(start, i - start)) - 1;
      if (gen < 0 || gen >= n_generators) fail("generator index out of range");
    } else {
      fail(std::string("unexpected character '") + text[i] + "'");
    }
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        fail("expected exponent after '^'");
      exp = std::stoll(text.substr(start, i - start));
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      fail("syllables must be whitespace-separated");
    if (is_delta)
      out.delta_pow += exp;
    else if (exp != 0)
      out.syllables.push_back(Syllable{gen, static_cast<int>(exp)});
  }
  return out;
}

inline std::vector<Letter> parse_letters(const Presentation& pres, const std::string& text) {
  ParsedWord pw = parse_word(text, pres.n());
  std::vector<Letter> out;
  for (const auto& s : pw.syllables) {
    const int sgn = s.exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(s.exp); ++i) out.push_back(Letter{s.gen, sgn});
  }
  const int dsgn = pw.delta_pow > 0 ? 1 : -1;
  for (std::int64_t i = 0; i < std::abs(pw.delta_pow) * pres.p1(); ++i)
    out.push_back(Letter{0, dsgn});
  return out;
}

inline std::string format_word(const SyllableWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(s.gen + 1);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  if (w.delta_pow() != 0) {
    if (!out.empty()) out += ' ';
    out += "D";
    if (w.delta_pow() != 1) out += "^" + std::to_string(w.delta_pow());
  }
  return out;
}

} // namespace amal
