#include "artin/monoid.hpp"

#include "artin/positive.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace artin;

namespace {

const PresentationPtr A2 = parse_presentation("presentation A2\ngenerators s t\nbond s t 3\n");
const PresentationPtr B2 = parse_presentation("presentation B2\ngenerators s t\nbond s t 4\n");
const PresentationPtr A3 = parse_presentation("presentation A3\ngenerators s1 s2 s3\nbond s1 s2 3\nbond s2 s3 3\n");
const PresentationPtr TRI =
    parse_presentation("presentation TRI\ngenerators a b c\nbond a b inf\nbond a c 3\nbond b c 3\n");
const PresentationPtr QUAD = parse_presentation(
    "presentation QUAD\ngenerators a b c d\nbond a b 3\nbond c d 3\nbond a c inf\nbond b d inf\n");
const PresentationPtr AFF =
    parse_presentation("presentation AFF\ngenerators a b c\nbond a b 3\nbond b c 3\nbond a c 3\n");

MonoidElement M(const PresentationPtr& p, const char* w) { return MonoidElement(p, parse_word(*p, w)); }

// All common multiples of u and v of length <= n, by brute force over the braid classes.
std::vector<Word> common_multiples(const PresentationPtr& p, const Word& u, const Word& v, std::size_t n) {
  std::vector<Word> out;
  const Word lu = oracle::class_min(*p, u), lv = oracle::class_min(*p, v);
  std::set<Word> seen;
  for (std::size_t len = 0; len <= n; ++len)
    for (const Word& w : oracle::words_of_length(p->rank(), len)) {
      const Word label = oracle::class_min(*p, w);
      if (!seen.insert(label).second) continue;
      const auto divs = oracle::left_divisor_classes(*p, label);
      if (divs.count(lu) && divs.count(lv)) out.push_back(label);
    }
  return out;
}

}  // namespace

TEST_CASE("canonical forms on a worked example") {
  CHECK(M(A2, "t s t").str() == "sts");
  CHECK(M(A2, "s t s") == M(A2, "t s t"));
  CHECK(M(B2, "s t s t") == M(B2, "t s t s"));
  CHECK_FALSE(M(B2, "s t s") == M(B2, "t s t"));
  CHECK(M(TRI, "a c a") == M(TRI, "c a c"));
  CHECK_FALSE(M(TRI, "a b") == M(TRI, "b a"));
}

TEST_CASE("canonical equality agrees with the braid-class oracle on QUAD") {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::map<Word, Word> canon_of_label;
    for (const Word& w : oracle::words_of_length(QUAD->rank(), n)) {
      const Word label = oracle::class_min(*QUAD, w);
      const Word canon = m_canonical(QUAD, w).word();
      auto [it, fresh] = canon_of_label.emplace(label, canon);
      CHECK(it->second == canon);
    }
    std::set<Word> canons;
    for (const auto& [label, canon] : canon_of_label) canons.insert(canon);
    CHECK(canons.size() == canon_of_label.size());
  }
}

TEST_CASE("element counts match the oracle") {
  for (const auto& p : {A2, B2, TRI}) {
    for (std::size_t n = 0; n <= 6; ++n) {
      std::set<Word> labels;
      for (const Word& w : oracle::words_of_length(p->rank(), n)) labels.insert(oracle::class_min(*p, w));
      CHECK(elements_of_length(p, n).size() == labels.size());
    }
  }
}

TEST_CASE("divisibility and complements") {
  const auto d = M(A3, "s1 s2 s1 s3 s2 s1");
  CHECK(left_divides(M(A3, "s3"), d));
  CHECK(right_divides(M(A3, "s2"), d));
  CHECK_FALSE(left_divides(M(A3, "s1 s1"), d));
  CHECK(M(A3, "s1") * left_complement(M(A3, "s1"), d) == d);
  CHECK(right_complement(M(A3, "s3"), d) * M(A3, "s3") == d);
  CHECK_THROWS(left_complement(M(A3, "s1 s1"), d));
}

TEST_CASE("left divisors match the oracle") {
  for (const auto& p : {A2, B2, TRI})
    for (const auto& u : elements_up_to(p, 5)) {
      std::set<Word> mine;
      for (const auto& d : left_divisors(u)) mine.insert(oracle::class_min(*p, d.word()));
      CHECK(mine == oracle::left_divisor_classes(*p, u.word()));
    }
}

TEST_CASE("gcds divide both and are divided by every common divisor") {
  const auto elems = elements_up_to(TRI, 3);
  for (const auto& u : elems)
    for (const auto& v : elems) {
      const auto g = left_gcd(u, v);
      CHECK(left_divides(g, u));
      CHECK(left_divides(g, v));
      for (const auto& d : left_divisors(u))
        if (left_divides(d, v)) CHECK(left_divides(d, g));
      const auto r = right_gcd(u, v);
      CHECK(right_divides(r, u));
      CHECK(right_divides(r, v));
    }
}

TEST_CASE("lcms agree with brute-force common multiples") {
  for (const auto& p : {A2, B2, TRI}) {
    const auto elems = elements_up_to(p, 2);
    for (const auto& u : elems)
      for (const auto& v : elems) {
        const auto mults = common_multiples(p, u.word(), v.word(), 6);
        const LcmResult l = left_lcm(u, v);
        if (mults.empty()) {
          // nothing within the search radius, so any lcm must be longer
          if (l.finite()) CHECK(l.value.length() > 6);
          continue;
        }
        REQUIRE(l.finite());
        // the shortest common multiple is the lcm, and it divides every other one
        CHECK(oracle::class_min(*p, l.value.word()) == mults.front());
        for (const Word& m : mults) CHECK(left_divides(l.value, MonoidElement(p, m)));
      }
  }
}

TEST_CASE("lcm outcomes") {
  CHECK(left_lcm(M(TRI, "a"), M(TRI, "b")).kind == LcmResult::Kind::Infinite);
  CHECK(left_lcm(M(TRI, "a"), M(TRI, "c")).str() == "aca");
  CHECK(left_lcm(M(TRI, "a b"), M(TRI, "a")).str() == "ab");
  CHECK(right_lcm(M(A2, "s"), M(A2, "t")).str() == "sts");
  const LcmResult r = left_lcm(M(AFF, "a"), M(AFF, "b c"), 24);
  CHECK(r.kind == LcmResult::Kind::Unknown);
  CHECK(r.str() == "Unknown(24)");
}

TEST_CASE("Garside elements") {
  CHECK(delta(A2, A2->all()).str() == "sts");
  CHECK(delta(B2, B2->all()).str() == "stst");
  CHECK(delta(A3, A3->all()).str() == "s1.s2.s1.s3.s2.s1");
  CHECK(delta(A3, parse_genset(*A3, "{s1,s3}")).str() == "s1.s3");
  CHECK(delta(TRI, parse_genset(*TRI, "{b,c}")).str() == "bcb");
  CHECK_THROWS_AS(delta(TRI, TRI->all()), InputError);
  CHECK(bracket(M(A2, "s"), M(A2, "t"), 3) == delta(A2, A2->all()));
}

TEST_CASE("square-free elements, alpha and the normal form") {
  CHECK(is_square_free(M(A2, "s t")));
  CHECK_FALSE(is_square_free(M(A2, "s t s t")));
  CHECK_FALSE(is_square_free(M(A2, "t s t t")));
  CHECK(alpha(M(A2, "s t s t")).str() == "sts");
  CHECK(format_normal_form(normal_form(M(A2, "s t s t"))) == "sts . t");
  CHECK(format_normal_form(normal_form(M(A2, "1"))) == "1");
  CHECK(format_normal_form(normal_form(M(B2, "t s s t"))) == "ts . st");
  for (const auto& u : elements_up_to(B2, 5))
    CHECK((alpha(u).word() == oracle::class_min(*B2, u.word())) == oracle::square_free(*B2, u.word()));
}

TEST_CASE("X-reduced and cancellation") {
  CHECK(is_x_reduced(M(A2, "s t"), GenSet::single(1), Side::Left));
  CHECK_FALSE(is_x_reduced(M(A2, "s t s"), GenSet::single(1), Side::Left));
  CHECK_FALSE(is_x_reduced(M(A2, "s t"), GenSet::single(1), Side::Right));
  CHECK(cancel(M(TRI, "a"), M(TRI, "c"), M(TRI, "c"), M(TRI, "b")));
}

TEST_CASE("right reversing") {
  const Reversal done = reverse_right(*A2, {0}, {1}, 100);
  CHECK(done.status == Reversal::Status::Done);
  const Reversal blocked = reverse_right(*TRI, {0}, {1}, 100);
  CHECK(blocked.status == Reversal::Status::Blocked);
  const Reversal exhausted = reverse_right(*AFF, {0}, {1, 2}, 20);
  CHECK(exhausted.status == Reversal::Status::Exhausted);
}

TEST_CASE("exact quotients") {
  CHECK(left_quotient(*A2, {0}, {1, 0, 1}) == Word{1, 0});
  CHECK_FALSE(left_quotient(*A2, {0, 0}, {1, 0, 1}));
  CHECK(right_quotient(*A2, {0}, {1, 0, 1}) == Word{0, 1});
  CHECK(shortlex(*A2, {1, 0, 1}) == Word{0, 1, 0});
  CHECK(bracket_word({0}, {1}, 4) == Word{0, 1, 0, 1});
}
