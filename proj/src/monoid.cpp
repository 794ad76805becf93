#include "artin/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace artin {

namespace {

void require_same(const MonoidElement& u, const MonoidElement& v) {
  if (u.presentation() != v.presentation() && u.presentation()->id() != v.presentation()->id())
    throw InputError("elements belong to different presentations");
}

struct PresentationFacts {
  bool fc = false;
  std::size_t max_delta = 0;
};

const PresentationFacts& facts(const PresentationPtr& p) {
  thread_local std::unordered_map<std::uint64_t, PresentationFacts> cache;
  auto it = cache.find(p->id());
  if (it != cache.end()) return it->second;
  PresentationFacts f;
  f.fc = is_fc(*p);
  for (GenSet t : spherical_subsets(*p)) f.max_delta = std::max(f.max_delta, delta(p, t).length());
  return cache.emplace(p->id(), f).first->second;
}

}  // namespace

MonoidElement::MonoidElement(PresentationPtr p, const Word& w) : pres_(std::move(p)) {
  for (Gen g : w)
    if (g >= pres_->rank()) throw InputError("word uses a generator outside the presentation");
  word_ = shortlex(*pres_, w);
}

MonoidElement operator*(const MonoidElement& a, const MonoidElement& b) {
  require_same(a, b);
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  return MonoidElement(a.presentation(), concat(a.word(), b.word()));
}

MonoidElement m_canonical(const PresentationPtr& p, const Word& w) { return MonoidElement(p, w); }

bool left_divides(const MonoidElement& u, const MonoidElement& v) {
  require_same(u, v);
  return left_quotient(v.pres(), u.word(), v.word()).has_value();
}

bool right_divides(const MonoidElement& u, const MonoidElement& v) {
  require_same(u, v);
  return right_quotient(v.pres(), u.word(), v.word()).has_value();
}

MonoidElement left_complement(const MonoidElement& u, const MonoidElement& v) {
  require_same(u, v);
  auto q = left_quotient(v.pres(), u.word(), v.word());
  if (!q) throw std::logic_error(u.str() + " does not left-divide " + v.str());
  return MonoidElement(v.presentation(), *q);
}

MonoidElement right_complement(const MonoidElement& u, const MonoidElement& v) {
  require_same(u, v);
  auto q = right_quotient(v.pres(), u.word(), v.word());
  if (!q) throw std::logic_error(u.str() + " does not right-divide " + v.str());
  return MonoidElement(v.presentation(), *q);
}

MonoidElement left_gcd(const MonoidElement& u, const MonoidElement& v) {
  require_same(u, v);
  const Presentation& p = u.pres();
  Word d;
  Word qu = u.word(), qv = v.word();
  for (bool grew = true; grew;) {
    grew = false;
    for (Gen s = 0; s < p.rank(); ++s) {
      auto a = left_quotient(p, {s}, qu);
      if (!a) continue;
      auto b = left_quotient(p, {s}, qv);
      if (!b) continue;
      d.push_back(s);
      qu = std::move(*a);
      qv = std::move(*b);
      grew = true;
      break;
    }
  }
  return MonoidElement(u.presentation(), d);
}

MonoidElement right_gcd(const MonoidElement& u, const MonoidElement& v) {
  require_same(u, v);
  const auto& p = u.presentation();
  MonoidElement ru(p, reversed(u.word())), rv(p, reversed(v.word()));
  return MonoidElement(p, reversed(left_gcd(ru, rv).word()));
}

std::string LcmResult::str() const {
  switch (kind) {
    case Kind::Finite:
      return value.str();
    case Kind::Infinite:
      return "Infinite";
    case Kind::Unknown:
      return "Unknown(" + std::to_string(bound) + ")";
  }
  return {};
}

LcmResult left_lcm(const MonoidElement& u, const MonoidElement& v, std::size_t cutoff) {
  require_same(u, v);
  const auto& p = u.presentation();
  std::size_t limit = cutoff;
  const auto& f = facts(p);
  if (f.fc) limit = std::max(limit, (u.length() + v.length()) * std::max<std::size_t>(f.max_delta, 1));
  auto r = reverse_right(*p, u.word(), v.word(), limit);
  LcmResult out;
  switch (r.status) {
    case Reversal::Status::Done:
      out.value = MonoidElement(p, concat(u.word(), r.v_tail));
      break;
    case Reversal::Status::Blocked:
      out.kind = LcmResult::Kind::Infinite;
      break;
    case Reversal::Status::Exhausted:
      out.kind = LcmResult::Kind::Unknown;
      out.bound = limit;
      break;
  }
  return out;
}

LcmResult right_lcm(const MonoidElement& u, const MonoidElement& v, std::size_t cutoff) {
  require_same(u, v);
  const auto& p = u.presentation();
  auto r = left_lcm(MonoidElement(p, reversed(u.word())), MonoidElement(p, reversed(v.word())), cutoff);
  if (r.finite()) r.value = MonoidElement(p, reversed(r.value.word()));
  return r;
}

MonoidElement bracket(const MonoidElement& u, const MonoidElement& v, int m) {
  require_same(u, v);
  return MonoidElement(u.presentation(), bracket_word(u.word(), v.word(), m));
}

MonoidElement delta(const PresentationPtr& p, GenSet t) {
  if (!is_spherical(*p, t))
    throw InputError("delta: " + format_genset(*p, t) + " is not spherical");
  thread_local std::map<std::pair<std::uint64_t, std::uint32_t>, MonoidElement> cache;
  auto key = std::pair{p->id(), t.bits()};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // Δ_T has length equal to the number of reflections of W_T, at most
  // rank * max bond * rank, so this cap is never the reason to stop.
  std::size_t cap = 16;
  for (Gen s : t.members())
    for (Gen r : t.members())
      if (s != r) cap += static_cast<std::size_t>(p->bond(s, r)) * t.size();
  Word d;
  for (Gen s : t.members()) {
    auto r = reverse_right(*p, d, Word{s}, cap);
    if (r.status != Reversal::Status::Done) throw std::logic_error("delta: generator lcm did not close");
    d = shortlex(*p, concat(std::move(d), r.v_tail));
  }
  MonoidElement out = MonoidElement::trusted(p, std::move(d));
  cache.emplace(key, out);
  return out;
}

// s·x is square-free iff x is square-free and s does not left-divide x.
bool is_square_free(const MonoidElement& u) {
  const Presentation& p = u.pres();
  const Word& w = u.word();
  Word suffix;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (left_quotient(p, {*it}, suffix)) return false;
    suffix.insert(suffix.begin(), *it);
  }
  return true;
}

MonoidElement alpha(const MonoidElement& u) {
  const Presentation& p = u.pres();
  Word d;
  Word rest = u.word();
  for (bool grew = true; grew;) {
    grew = false;
    for (Gen s = 0; s < p.rank(); ++s) {
      if (right_quotient(p, {s}, d)) continue;  // d·s would carry a square
      auto q = left_quotient(p, {s}, rest);
      if (!q) continue;
      d = shortlex(p, concat(std::move(d), Word{s}));
      rest = std::move(*q);
      grew = true;
      break;
    }
  }
  return MonoidElement::trusted(u.presentation(), std::move(d));
}

std::vector<MonoidElement> normal_form(const MonoidElement& u) {
  std::vector<MonoidElement> out;
  MonoidElement rest = u;
  while (!rest.is_identity()) {
    MonoidElement a = alpha(rest);
    rest = left_complement(a, rest);
    out.push_back(std::move(a));
  }
  return out;
}

std::string format_normal_form(const std::vector<MonoidElement>& nf) {
  if (nf.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < nf.size(); ++i) {
    if (i) out += " . ";
    out += nf[i].str();
  }
  return out;
}

bool is_x_reduced(const MonoidElement& u, GenSet x, Side side) {
  for (Gen s : x.members()) {
    const Word w{s};
    const bool divides = side == Side::Left ? left_quotient(u.pres(), w, u.word()).has_value()
                                            : right_quotient(u.pres(), w, u.word()).has_value();
    if (divides) return false;
  }
  return true;
}

bool cancel(const MonoidElement& u, const MonoidElement& e1, const MonoidElement& e2, const MonoidElement& v) {
  if (u * e1 * v == u * e2 * v) return e1 == e2;
  return true;
}

std::vector<MonoidElement> elements_of_length(const PresentationPtr& p, std::size_t n) {
  std::set<Word> layer{Word{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::set<Word> next;
    for (const Word& w : layer)
      for (Gen s = 0; s < p->rank(); ++s) next.insert(shortlex(*p, concat(w, Word{s})));
    layer = std::move(next);
  }
  std::vector<MonoidElement> out;
  for (const Word& w : layer) out.push_back(MonoidElement::trusted(p, w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonoidElement> elements_up_to(const PresentationPtr& p, std::size_t n) {
  std::vector<MonoidElement> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = elements_of_length(p, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<MonoidElement> left_divisors(const MonoidElement& u) {
  const auto& p = u.presentation();
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& d : frontier)
      for (Gen s = 0; s < p->rank(); ++s) {
        Word cand = shortlex(*p, concat(d, Word{s}));
        if (seen.count(cand)) continue;
        if (!left_quotient(*p, cand, u.word())) continue;
        seen.insert(cand);
        next.push_back(std::move(cand));
      }
    frontier = std::move(next);
  }
  std::vector<MonoidElement> out;
  for (const Word& w : seen) out.push_back(MonoidElement::trusted(p, w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace artin
