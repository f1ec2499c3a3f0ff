#include <doctest.h>

#include "cudlab/catalog.hpp"
#include "cudlab/errors.hpp"
#include "cudlab/oracle.hpp"
#include "cudlab/sequences.hpp"

using namespace cudlab;

namespace {
std::vector<Integer> tail(SequenceId id, int from, int to)
{
  const auto t = catalog_terms(id, to);
  return std::vector<Integer>(t.begin() + from, t.end());
}
}

TEST_CASE("catalog: published terms")
{
  CHECK(tail(SequenceId::gcud, 1, 9) ==
        std::vector<Integer>{1, 2, 6, 21, 97, 491, 2989, 19756, 148444});
  CHECK(tail(SequenceId::gcud_even_only, 1, 9) ==
        std::vector<Integer>{0, 1, 0, 6, 0, 89, 0, 2431, 0});
  CHECK(tail(SequenceId::gcud_even_cyclic, 1, 9) ==
        std::vector<Integer>{0, 1, 0, 3, 0, 29, 0, 569, 0});
  CHECK(tail(SequenceId::cud_derangements, 1, 9) ==
        std::vector<Integer>{0, 1, 1, 5, 15, 71, 341, 1945, 12135});
  CHECK(catalog_terms(SequenceId::cud, 3)[3] == 5);
  CHECK(tail(SequenceId::euler, 0, 7) == std::vector<Integer>{1, 1, 1, 2, 5, 16, 61, 272});
  CHECK(tail(SequenceId::k_euler_odd, 2, 8) == std::vector<Integer>{1, 0, 4, 0, 48, 0, 1088});
}

TEST_CASE("catalog: oracle agreement for counts")
{
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const auto u = static_cast<std::size_t>(n);
    auto size = [&](Family f) { return Integer(static_cast<unsigned long>(enumerate(f, n).size())); };
    CHECK(catalog_terms(SequenceId::gcud, 7)[u] == size(Family::gcud));
    CHECK(catalog_terms(SequenceId::gcud_odd_only, 7)[u] == size(Family::gcud_odd_only));
    CHECK(catalog_terms(SequenceId::gcud_even_only, 7)[u] == size(Family::gcud_even_only));
    CHECK(catalog_terms(SequenceId::cud_derangements, 7)[u] == size(Family::cud_derangement));
    CHECK(catalog_terms(SequenceId::cud_cyclic, 7)[u] == size(Family::cud_cyclic));
    if (n % 2 == 0)
      CHECK(catalog_terms(SequenceId::gcud_even_cyclic, 7)[u] == size(Family::gcud_cyclic));
  }
}

TEST_CASE("catalog: marked entries")
{
  const auto cc = catalog_polynomials(SequenceId::cud_cycles, 2);
  CHECK(cc[2].to_string() == "t + t^2");
  const auto oe = catalog_polynomials(SequenceId::cud_odd_even, 2);
  CHECK(oe[2].to_string() == "t_e + t_o^2");
  CHECK_THROWS_AS(catalog_terms(SequenceId::ud_st, 4), DomainError);

  for (int n = 0; n <= 6; ++n) {
    CHECK(catalog_polynomials(SequenceId::perm_ud_nud, 6)[static_cast<std::size_t>(n)] ==
          distribution(Family::all, n, {Stat::ud, Stat::nud}).polynomial({"v", "w"}));
  }
}

TEST_CASE("catalog: names and caps")
{
  for (const auto& e : catalog_entries())
    CHECK(parse_sequence_id(e.name) == e.id);
  CHECK(catalog_entries().size() == 22);
  CHECK_THROWS_AS(parse_sequence_id("nope"), UnknownName);
  CHECK_THROWS_AS(catalog(SequenceId::euler, 25), CapExceeded);
  CHECK_NOTHROW(catalog(SequenceId::euler, 30, 30));
  CHECK_THROWS_AS(catalog(SequenceId::euler, -1), DomainError);
}
