#include "artin/positive.hpp"

#include <algorithm>
#include <unordered_map>

namespace artin {

namespace {

// Memo for letter division, keyed by presentation id and the word s·v.
struct QuotientCache {
  std::uint64_t owner = 0;
  std::unordered_map<Word, std::optional<Word>, WordHash> entries;
};

thread_local QuotientCache quotient_cache;

std::optional<Word> letter_quotient(const Presentation& p, Gen s, const Word& v);

std::optional<Word> quotient_from(const Presentation& p, const Word& u, Word v) {
  for (Gen s : u) {
    auto q = letter_quotient(p, s, v);
    if (!q) return std::nullopt;
    v = std::move(*q);
  }
  return v;
}

// s ≺ t·v₂ with s ≠ t forces [t,s⟩^m ≺ t·v₂, i.e. [s,t⟩^{m-1} ≺ v₂.
std::optional<Word> letter_quotient_uncached(const Presentation& p, Gen s, const Word& v) {
  if (v.empty()) return std::nullopt;
  const Gen t = v.front();
  Word rest(v.begin() + 1, v.end());
  if (s == t) return rest;
  const int m = p.bond(s, t);
  if (m == kInfinity) return std::nullopt;
  auto y = quotient_from(p, bracket_word({s}, {t}, m - 1), std::move(rest));
  if (!y) return std::nullopt;
  return concat(bracket_word({t}, {s}, m - 1), *y);
}

std::optional<Word> letter_quotient(const Presentation& p, Gen s, const Word& v) {
  if (v.empty()) return std::nullopt;
  if (v.front() == s) return Word(v.begin() + 1, v.end());
  if (quotient_cache.owner != p.id() || quotient_cache.entries.size() > 400000) {
    quotient_cache.entries.clear();
    quotient_cache.owner = p.id();
  }
  Word key;
  key.reserve(v.size() + 1);
  key.push_back(s);
  key.insert(key.end(), v.begin(), v.end());
  if (auto it = quotient_cache.entries.find(key); it != quotient_cache.entries.end()) return it->second;
  auto result = letter_quotient_uncached(p, s, v);
  // The recursive call may have reset the cache for a different owner; only the
  // owning presentation stores entries.
  if (quotient_cache.owner == p.id()) quotient_cache.entries.emplace(std::move(key), result);
  return result;
}

struct Reverser {
  const Presentation& p;
  std::size_t max_len;
  std::size_t cells = 0;
  std::size_t depth = 0;
  bool blocked = false;
  bool exhausted = false;

  static constexpr std::size_t kCellCap = 2000000;
  static constexpr std::size_t kDepthCap = 4000;

  bool failed() const { return blocked || exhausted; }

  bool too_long(const Word& w) {
    if (w.size() > max_len) exhausted = true;
    return exhausted;
  }

  // Returns (v', u') with u·v' = v·u'.
  std::pair<Word, Word> run(const Word& u, const Word& v) {
    if (too_long(u) || too_long(v) || depth > kDepthCap) {
      exhausted = true;
      return {};
    }
    ++depth;
    auto out = step(u, v);
    --depth;
    return out;
  }

  std::pair<Word, Word> step(const Word& u, const Word& v) {
    if (u.empty()) return {v, {}};
    if (v.empty()) return {{}, u};
    if (u.size() == 1 && v.size() == 1) return cell(u[0], v[0]);
    if (u.size() == 1) {
      auto [t1, s1] = cell(u[0], v[0]);
      if (failed()) return {};
      auto [v2, s2] = run(s1, Word(v.begin() + 1, v.end()));
      if (failed()) return {};
      Word head = concat(std::move(t1), v2);
      if (too_long(head) || too_long(s2)) return {};
      return {std::move(head), std::move(s2)};
    }
    auto [v1, s1] = run(Word{u[0]}, v);
    if (failed()) return {};
    auto [v2, u2] = run(Word(u.begin() + 1, u.end()), v1);
    if (failed()) return {};
    Word tail = concat(std::move(s1), u2);
    if (too_long(v2) || too_long(tail)) return {};
    return {std::move(v2), std::move(tail)};
  }

  std::pair<Word, Word> cell(Gen s, Gen t) {
    if (++cells > kCellCap) {
      exhausted = true;
      return {};
    }
    if (s == t) return {{}, {}};
    const int m = p.bond(s, t);
    if (m == kInfinity) {
      blocked = true;
      return {};
    }
    return {bracket_word({t}, {s}, m - 1), bracket_word({s}, {t}, m - 1)};
  }
};

}  // namespace

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word bracket_word(const Word& u, const Word& v, int m) {
  Word out;
  for (int i = 0; i < m; ++i) {
    const Word& f = (i % 2 == 0) ? u : v;
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::optional<Word> left_quotient(const Presentation& p, const Word& u, const Word& v) {
  if (u.size() > v.size()) return std::nullopt;
  return quotient_from(p, u, v);
}

// The defining relations are closed under reversal, so right division is left
// division of the mirror words.
std::optional<Word> right_quotient(const Presentation& p, const Word& u, const Word& v) {
  auto q = left_quotient(p, reversed(u), reversed(v));
  if (!q) return std::nullopt;
  return reversed(std::move(*q));
}

Word shortlex(const Presentation& p, const Word& v) {
  Word out;
  out.reserve(v.size());
  Word rest = v;
  while (!rest.empty()) {
    bool found = false;
    for (Gen s = 0; s < p.rank(); ++s) {
      if (auto q = letter_quotient(p, s, rest)) {
        out.push_back(s);
        rest = std::move(*q);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("shortlex: no generator divides a nonempty word");
  }
  return out;
}

Reversal reverse_right(const Presentation& p, const Word& u, const Word& v, std::size_t max_len) {
  Reverser r{p, max_len};
  auto [vt, ut] = r.run(u, v);
  Reversal out;
  if (r.blocked) {
    out.status = Reversal::Status::Blocked;
  } else if (r.exhausted) {
    out.status = Reversal::Status::Exhausted;
  } else {
    out.v_tail = std::move(vt);
    out.u_tail = std::move(ut);
  }
  return out;
}

}  // namespace artin
