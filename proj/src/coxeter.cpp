#include "artin/coxeter.hpp"

#include <algorithm>
#include <set>

namespace artin {

namespace {

Word times_letter(const Presentation& p, const Word& x, Gen s) {
  if (auto q = right_quotient(p, {s}, x)) return shortlex(p, *q);
  return shortlex(p, concat(x, Word{s}));
}

bool right_descent(const Presentation& p, const Word& x, Gen s) { return right_quotient(p, {s}, x).has_value(); }

}  // namespace

WElement w_canonical(const PresentationPtr& p, const Word& w) {
  Word x;
  for (Gen s : w) {
    if (s >= p->rank()) throw InputError("word uses a generator outside the presentation");
    x = times_letter(*p, x, s);
  }
  return WElement::trusted(p, std::move(x));
}

WElement w_multiply(const WElement& x, const WElement& y) {
  if (x.presentation()->id() != y.presentation()->id()) throw InputError("elements belong to different presentations");
  Word acc = x.word();
  for (Gen s : y.word()) acc = times_letter(x.pres(), acc, s);
  return WElement::trusted(x.presentation(), std::move(acc));
}

WElement w_inverse(const WElement& x) { return w_canonical(x.presentation(), reversed(x.word())); }

bool w_in_parabolic(const WElement& x, GenSet t) { return GenSet::of(x.word()).subset_of(t); }

WElement longest_element(const PresentationPtr& p, GenSet t) {
  if (!is_spherical(*p, t)) throw InputError("longest_element: " + format_genset(*p, t) + " is not spherical");
  Word x;
  for (bool grew = true; grew;) {
    grew = false;
    for (Gen s : t.members()) {
      if (right_descent(*p, x, s)) continue;
      x = shortlex(*p, concat(std::move(x), Word{s}));
      grew = true;
      break;
    }
  }
  return WElement::trusted(p, std::move(x));
}

MonoidElement sec_lift(const WElement& w) { return MonoidElement::trusted(w.presentation(), w.word()); }

WElement project(const MonoidElement& u) { return w_canonical(u.presentation(), u.word()); }

std::vector<WElement> enumerate_parabolic(const PresentationPtr& p, GenSet t) {
  if (!is_spherical(*p, t)) throw InputError("enumerate_parabolic: " + format_genset(*p, t) + " is not spherical");
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (Gen s : t.members()) {
        Word x = times_letter(*p, w, s);
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  std::vector<WElement> out;
  for (const Word& w : seen) out.push_back(WElement::trusted(p, w));
  std::sort(out.begin(), out.end());
  return out;
}

WElement min_coset_rep(const WElement& x, GenSet t) {
  Word w = x.word();
  for (bool shrank = true; shrank;) {
    shrank = false;
    for (Gen s : t.members())
      if (auto q = right_quotient(x.pres(), {s}, w)) {
        w = shortlex(x.pres(), *q);
        shrank = true;
        break;
      }
  }
  return WElement::trusted(x.presentation(), std::move(w));
}

}  // namespace artin
