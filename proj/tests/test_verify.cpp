#include <doctest.h>

#include "cudlab/errors.hpp"
#include "cudlab/oracle.hpp"
#include "cudlab/sequences.hpp"

using namespace cudlab;

TEST_CASE("verify: full suite passes at n = 7")
{
  const auto r = verify_all({});
  for (const auto& c : r.checks)
    if (!c.pass)
      FAIL_CHECK(c.check << " n=" << c.n << " expected " << c.expected << " got " << c.actual);
  CHECK(r.all_passed());
  CHECK(r.distinct_checks() >= 40);
  CHECK_FALSE(r.first_failure().has_value());
  CHECK(r.to_json().find("\"check\"") != std::string::npos);
}

TEST_CASE("verify: corrupted Euler table is reported")
{
  VerifyOptions opt;
  opt.n_cap = 4;
  auto e = euler_numbers(10);
  e[5] = 17;
  opt.euler_override = e;
  const auto r = verify_all(opt);
  CHECK_FALSE(r.all_passed());
  REQUIRE(r.first_failure().has_value());
  CHECK(*r.first_failure() == "euler-triangle-vs-series");
  CHECK(r.to_text().find("FAIL euler-triangle-vs-series") != std::string::npos);
}

TEST_CASE("verify: caps")
{
  VerifyOptions opt;
  opt.n_cap = 10;
  CHECK_THROWS_AS(verify_all(opt), CapExceeded);
  opt.n_cap = 0;
  CHECK_THROWS_AS(verify_all(opt), DomainError);
}
