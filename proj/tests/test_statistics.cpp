#include <doctest.h>

#include "cudlab/errors.hpp"
#include "cudlab/oracle.hpp"
#include "cudlab/sequences.hpp"
#include "cudlab/statistics.hpp"

using namespace cudlab;

TEST_CASE("statistics: min-max subsequence")
{
  const auto p = parse_one_line("4 8 1 2 7 6 3 5");
  CHECK(min_max_subsequence(p, MinMaxPattern::alternating()) == Word{1, 7, 3, 5});
  CHECK(st(p) == 4);
  // min,min,... picks out the right-to-left minima; only the counts match lrm
  CHECK(min_max_subsequence(p, MinMaxPattern::all_min()) == Word{1, 2, 3, 5});
  CHECK(lrm(p) == 2);
  CHECK(min_max_subsequence(Permutation{}, MinMaxPattern::alternating()).empty());

  // max,max,... gives the right-to-left maxima
  const auto all_max = MinMaxPattern::parse("max,...");
  for (const auto& q : enumerate(Family::all, 6)) {
    Word maxima;
    for (std::size_t i = q.size(); i-- > 0;)
      if (maxima.empty() || q[i] > maxima.front())
        maxima.insert(maxima.begin(), q[i]);
    REQUIRE(min_max_subsequence(q, all_max) == maxima);
  }
}

TEST_CASE("statistics: stat vector")
{
  const auto id = stats(Permutation::identity(4));
  CHECK(id.c == 4);
  CHECK(id.c_o == 4);
  CHECK(id.c_e == 0);
  CHECK(id.fp == 4);
  CHECK(id.lrm == 1);
  CHECK(id.exc == 0);

  CHECK(extr(parse_one_line("3 5 1 8 2 7 4 9 6")) == 4);
  Word ex;
  const auto q = parse_one_line("3 5 1 8 2 7 4 9 6");
  for (auto i : extreme_positions(q))
    ex.push_back(q[i]);
  CHECK(ex == Word{5, 1, 8, 9});

  const auto v = stats(from_cycles(parse_cycles("(1,4)(2,8,3,6)(5)(7)")));
  CHECK(v.exc == 3);
  CHECK(v.c_o == 2);
  CHECK(v.c_o + 2 * v.exc == 8);
  CHECK(v.ud == 4);
  CHECK(v.nud == 0);
}

TEST_CASE("statistics: c_o + 2 exc = n on CUD")
{
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : enumerate(Family::cud, n)) {
      const auto v = stats(p);
      REQUIRE(v.c_o + 2 * v.exc == n);
    }
}

TEST_CASE("statistics: Stirling distributions")
{
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto row = stirling_row(n);
    const auto prev = stirling_row(n - 1);
    for (const auto& pat : {MinMaxPattern::alternating(), MinMaxPattern::all_min(),
                            MinMaxPattern::parse("max,min,..."),
                            MinMaxPattern::parse("min,max,max,...")}) {
      std::vector<Integer> got(row.size(), 0);
      for_each_member(Family::all, n, [&](const Permutation& p) {
        got.at(static_cast<std::size_t>(min_max_statistic(p, pat))) += 1;
      });
      CHECK(got == row);
    }
    std::vector<Integer> ext(static_cast<std::size_t>(n), 0);
    for_each_member(Family::all, n, [&](const Permutation& p) {
      ext.at(static_cast<std::size_t>(extr(p))) += 1;
    });
    for (int k = 0; k < n; ++k)
      CHECK(ext[static_cast<std::size_t>(k)] ==
            prev[static_cast<std::size_t>(k)] * (Integer(1) << k));
  }
}

TEST_CASE("statistics: parsing")
{
  CHECK(parse_stat_list("lrm,st") == std::vector<Stat>{Stat::lrm, Stat::st});
  CHECK_THROWS_AS(parse_stat("nope"), UnknownName);
  CHECK_THROWS_AS(MinMaxPattern::parse("min,max"), ParseError);
  CHECK_THROWS_AS(MinMaxPattern::parse("min,mux,..."), ParseError);
  CHECK(MinMaxPattern::parse("min,max,...").at(5) == Extremum::max);
  CHECK(MinMaxPattern::parse("max,min,min,...").at(3) == Extremum::max);
  for (Stat s : all_stats)
    CHECK(parse_stat(stat_name(s)) == s);
}
