#include <doctest.h>

#include "cudlab/errors.hpp"
#include "cudlab/oracle.hpp"
#include "cudlab/permutation.hpp"

using namespace cudlab;

TEST_CASE("permutation: cycle notation")
{
  CHECK(to_string(to_cycles(parse_one_line("2 5 1 7 3 6 4"))) == "(1,2,5,3)(4,7)(6)");
  CHECK(to_string(to_cycles(Permutation::identity(3))) == "(1)(2)(3)");
  CHECK(to_string(from_cycles(parse_cycles("(1,2,5,3)(4,7)(6)"))) == "2 5 1 7 3 6 4");
  CHECK(to_string(from_cycles(parse_cycles("(1)(2)"))) == "1 2");

  const auto p = from_cycles(parse_cycles("(1,4)(2,8,3,6)(5)(7)"));
  CHECK(to_string(p) == "4 8 6 1 5 2 7 3");

  // cycles are normalised to start at their minimum
  CHECK(parse_cycles("(5,8)(3,4,2)") == parse_cycles("(2,3,4)(8,5)"));
  CHECK(to_string(parse_cycles("(3,4,2)")) == "(2,3,4)");
}

TEST_CASE("permutation: general ground sets")
{
  const auto p = parse_one_line("5 8 2 7 4 11");
  CHECK_FALSE(p.on_interval());
  CHECK(p.ground() == Word{2, 4, 5, 7, 8, 11});
  // a_i -> word[i]: 2->5, 4->8, 5->2, 7->7, 8->4, 11->11
  CHECK(to_string(to_cycles(p)) == "(2,5)(4,8)(7)(11)");
  CHECK(from_cycles(to_cycles(p)) == p);
  CHECK_THROWS_AS(from_cycles(parse_cycles("(1,2)"), Word{1, 2, 3}), ParseError);
}

TEST_CASE("permutation: malformed input")
{
  CHECK_THROWS_AS(parse_one_line("1 1 2"), ParseError);
  CHECK_THROWS_AS(parse_one_line("0 1"), ParseError);
  CHECK_THROWS_AS(parse_one_line("1 x"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2)()"), ParseError);
  CHECK(parse_cycles("").empty());
  CHECK(parse_cycles("()").empty());
  CHECK(parse_permutation("(1,2)") == parse_one_line("2 1"));
}

TEST_CASE("permutation: switch")
{
  CHECK(switched(parse_one_line("2 6 3 4")) == parse_one_line("6 2 4 3"));
  CHECK(switched(Permutation{}).empty());
  CHECK(switched(parse_one_line("9 3 8 5 6 2")) == parse_one_line("2 8 3 6 5 9"));

  Word w{9, 8, 6, 7, 4, 5, 1};
  switch_range(w, 0, 7);
  CHECK(w == Word{1, 4, 6, 5, 8, 7, 9});
  Word v{3, 1, 2, 9, 8};
  switch_range(v, 0, 3);
  CHECK(v == Word{1, 3, 2, 9, 8});

  for (const auto& p : enumerate(Family::all, 6))
    REQUIRE(switched(switched(p)) == p);
}

TEST_CASE("permutation: up-down words and cycles")
{
  CHECK(is_up_down(Word{1, 3, 2, 4}));
  CHECK_FALSE(is_up_down(Word{3, 1, 2}));
  CHECK(is_down_up(Word{3, 1, 2}));
  CHECK(is_up_down(Word{}));
  CHECK(is_up_down(Word{7}));
  CHECK(is_alternating(Word{3, 1, 2}));
  CHECK_FALSE(is_alternating(Word{1, 2, 3}));

  CHECK(is_up_down_cycle(Word{1, 5, 2, 7}));
  CHECK(is_up_down_cycle(Word{5, 2, 7, 1})); // standard form is (1,5,2,7)
  // the rotation 4,6,2,3 is up-down, the standard form is not
  CHECK_FALSE(is_up_down_cycle(Word{2, 3, 4, 6}));
  CHECK(is_generalized_up_down_cycle(Word{2, 3, 4, 6}));
  CHECK_FALSE(is_generalized_up_down_cycle(Word{1, 2, 4, 3}));
}

TEST_CASE("permutation: family membership")
{
  CHECK(is_member(from_cycles(parse_cycles("(1,5,2,7)(3)(4,8,6)(9)")), Family::cud));
  CHECK_FALSE(is_member(from_cycles(parse_cycles("(1,3,5)(2,4)(6)")), Family::cud));

  // cycle families are defined on [n]; other ground sets go through the
  // cycle predicates above
  const auto single = from_cycles(parse_cycles("(2,3,4,6)"));
  CHECK_THROWS_AS(is_member(single, Family::gcud), DomainError);
  CHECK_THROWS_AS(is_member(single, Family::cud), DomainError);
  CHECK(is_member(parse_one_line("5 8 2 7 4 11"), Family::ud));
  CHECK(is_member(parse_one_line("5 8 2 7 4 11"), Family::all));

  for (const char* c : {"(1,2,4,3)", "(1,3,4,2)", "(1,4,3,2)"})
    CHECK_FALSE(is_member(from_cycles(parse_cycles(c)), Family::gcud));
  CHECK(is_member(from_cycles(parse_cycles("(1,3,2,4)")), Family::gcud));
  CHECK_FALSE(is_member(Permutation{}, Family::ud_last_gt_first));
  CHECK(is_member(parse_one_line("1 3 2 4"), Family::ud_last_gt_first));
}

TEST_CASE("permutation: family names")
{
  for (Family f : all_families)
    CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("CUD_EVEN_ONLY") == Family::cud_even_only);
  CHECK_THROWS_AS(parse_family("nope"), UnknownName);
}
