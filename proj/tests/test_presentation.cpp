#include "artin/presentation.hpp"

#include "doctest.h"

using namespace artin;

namespace {

PresentationPtr parse(const char* text) { return parse_presentation(text); }

std::string error_of(const char* text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a presentation") {
  auto p = parse("# braid group on three strands\npresentation A2\ngenerators s t\nbond s t 3\n");
  CHECK(p->name() == "A2");
  CHECK(p->rank() == 2);
  CHECK(p->bond(0, 1) == 3);
  CHECK(p->bond(1, 0) == 3);
  CHECK(p->bond(0, 0) == 1);
  CHECK(p->compact_tokens());
}

TEST_CASE("unspecified bonds commute, inf has no relation") {
  auto p = parse("presentation P\ngenerators a b c\nbond a b inf\n");
  CHECK(p->infinite(0, 1));
  CHECK(p->bond(0, 2) == 2);
  CHECK(p->bond(1, 2) == 2);
  CHECK_FALSE(p->infinite(0, 0));
}

TEST_CASE("input errors carry a line number") {
  CHECK(error_of("presentation P\ngenerators s s\n").find("duplicate generator") != std::string::npos);
  CHECK(error_of("presentation P\ngenerators s t\nbond s u 3\n").find("line 3") != std::string::npos);
  CHECK(error_of("presentation P\ngenerators s t\nbond s t 1\n").find("bond value < 2") != std::string::npos);
  CHECK(error_of("presentation P\ngenerators s t\nbond s t x\n").find("bad bond value") != std::string::npos);
  CHECK(error_of("presentation P\ngenerators s t\nbond s t 3\nbond t s 4\n").find("conflicting") != std::string::npos);
  CHECK(error_of("presentation P\ngenerators s t\nfrobnicate\n").find("unknown directive") != std::string::npos);
  CHECK(error_of("presentation P\n").find("no 'generators'") != std::string::npos);
  CHECK(error_of("presentation P\ngenerators a.b\n").find("reserved") != std::string::npos);
  CHECK(error_of("presentation P\ngenerators 1\n").find("reserved") != std::string::npos);
}

TEST_CASE("a repeated consistent bond is accepted") {
  auto p = parse("presentation P\ngenerators s t\nbond s t 3\nbond t s 3\n");
  CHECK(p->bond(0, 1) == 3);
}

TEST_CASE("format round-trips") {
  auto p = parse("presentation Q\ngenerators a b c d\nbond a b 3\nbond c d inf\n");
  auto q = parse_presentation(format_presentation(*p));
  CHECK(q->name() == "Q");
  for (Gen s = 0; s < 4; ++s)
    for (Gen t = 0; t < 4; ++t) CHECK(p->bond(s, t) == q->bond(s, t));
}

TEST_CASE("spherical type recognition") {
  auto check = [](const char* text, bool expected) { CHECK(is_spherical(*parse(text), parse(text)->all()) == expected); };
  check("presentation A3\ngenerators a b c\nbond a b 3\nbond b c 3\n", true);
  check("presentation B3\ngenerators a b c\nbond a b 4\nbond b c 3\n", true);
  check("presentation C\ngenerators a b c\nbond a b 4\nbond b c 4\n", false);  // affine C~2
  check("presentation AFF\ngenerators a b c\nbond a b 3\nbond b c 3\nbond a c 3\n", false);
  check("presentation D4\ngenerators a b c d\nbond a b 3\nbond a c 3\nbond a d 3\n", true);
  check("presentation H3\ngenerators a b c\nbond a b 5\nbond b c 3\n", true);
  check("presentation X\ngenerators a b c\nbond a b 5\nbond b c 4\n", false);
  check("presentation F4\ngenerators a b c d\nbond a b 3\nbond b c 4\nbond c d 3\n", true);
  check("presentation I\ngenerators a b\nbond a b 17\n", true);
  check("presentation E6\ngenerators a b c d e f\nbond a b 3\nbond b c 3\nbond c d 3\nbond d e 3\nbond c f 3\n", true);
  check("presentation E~6\ngenerators a b c d e f g\nbond a b 3\nbond b c 3\nbond c d 3\nbond d e 3\nbond c f 3\nbond f g 3\n",
        false);
  check("presentation F\ngenerators a b\nbond a b inf\n", false);
}

TEST_CASE("FC type and its obstruction") {
  auto tri = parse("presentation TRI\ngenerators a b c\nbond a b inf\nbond a c 3\nbond b c 3\n");
  CHECK(is_fc(*tri));
  CHECK_FALSE(fc_obstruction(*tri));
  auto aff = parse("presentation AFF\ngenerators a b c\nbond a b 3\nbond b c 3\nbond a c 3\n");
  CHECK_FALSE(is_fc(*aff));
  REQUIRE(fc_obstruction(*aff));
  CHECK(format_genset(*aff, *fc_obstruction(*aff)) == "{a,b,c}");
}

TEST_CASE("spherical subsets are sorted by size") {
  auto tri = parse("presentation TRI\ngenerators a b c\nbond a b inf\nbond a c 3\nbond b c 3\n");
  const auto subsets = spherical_subsets(*tri);
  REQUIRE(subsets.size() == 6);
  CHECK(subsets[0].empty());
  CHECK(format_genset(*tri, subsets[4]) == "{a,c}");
  CHECK(format_genset(*tri, subsets[5]) == "{b,c}");
}

TEST_CASE("word syntax") {
  auto a2 = parse("presentation A2\ngenerators s t\nbond s t 3\n");
  CHECK(parse_word(*a2, "s t s") == Word{0, 1, 0});
  CHECK(parse_word(*a2, "s.t.s") == Word{0, 1, 0});
  CHECK(parse_word(*a2, "sts") == Word{0, 1, 0});
  CHECK(parse_word(*a2, "1").empty());
  CHECK(format_word(*a2, {0, 1, 0}) == "sts");
  CHECK(format_word(*a2, {}) == "1");
  CHECK_THROWS_AS(parse_word(*a2, "s u"), InputError);

  auto a3 = parse("presentation A3\ngenerators s1 s2 s3\nbond s1 s2 3\nbond s2 s3 3\n");
  CHECK_FALSE(a3->compact_tokens());
  CHECK(format_word(*a3, {0, 2}) == "s1.s3");
  CHECK(parse_word(*a3, "s1 s3") == Word{0, 2});
}

TEST_CASE("generator subsets") {
  auto a3 = parse("presentation A3\ngenerators s1 s2 s3\nbond s1 s2 3\nbond s2 s3 3\n");
  const GenSet x = parse_genset(*a3, "{s1,s3}");
  CHECK(x.size() == 2);
  CHECK(x.contains(0));
  CHECK_FALSE(x.contains(1));
  CHECK(parse_genset(*a3, "s1 s3") == x);
  CHECK(parse_genset(*a3, "{}").empty());
  CHECK(format_genset(*a3, x) == "{s1,s3}");
  CHECK((x | GenSet::single(1)) == a3->all());
  CHECK((x - GenSet::single(0)) == GenSet::single(2));
  CHECK(GenSet::single(0) < x);
}
