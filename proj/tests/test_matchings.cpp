#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cudlab/errors.hpp"
#include "cudlab/matchings.hpp"
#include "cudlab/oracle.hpp"

using namespace cudlab;

namespace {
std::string slurp(const std::filesystem::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const Permutation fig1 = from_cycles(parse_cycles("(1,4,2,6,3,7)(5,8)"));
}

TEST_CASE("matchings: figure example")
{
  const auto mp = to_matching_pair(fig1);
  CHECK(mp.to_string() == "red: 1-4 2-6 3-7 5-8 / blue: 1-7 2-4 3-6 5-8");
  CHECK(mp.red.size() == 4);
  CHECK(mp.blue.size() == 4);
  CHECK(from_matching_pair(mp) == fig1);

  const auto tiny = to_matching_pair(parse_one_line("2 1"));
  CHECK(tiny.to_string() == "red: 1-2 / blue: 1-2");
  CHECK(from_matching_pair(make_matching_pair(2, {{1, 2}}, {{2, 1}})) == parse_one_line("2 1"));
}

TEST_CASE("matchings: invalid input")
{
  CHECK_THROWS_AS(to_matching_pair(from_cycles(parse_cycles("(1,2,3)"))), DomainError);
  CHECK_THROWS_AS(to_matching_pair(parse_one_line("1 2")), DomainError);
  // openers disagree: red opens at 1,2, blue at 1,3
  const auto bad = make_matching_pair(4, {{1, 3}, {2, 4}}, {{1, 2}, {3, 4}});
  CHECK_FALSE(bad.valid());
  CHECK_THROWS_AS(from_matching_pair(bad), DomainError);
  CHECK_THROWS_AS(make_matching_pair(4, {{1, 2}, {2, 4}}, {{1, 2}, {3, 4}}).validate(), DomainError);
  CHECK_THROWS_AS(make_matching_pair(3, {}, {}).validate(), DomainError);
}

TEST_CASE("matchings: bijection with even-only CUD permutations")
{
  const std::vector<std::size_t> euler_even{1, 1, 5, 61, 1385};
  for (int n = 0; n <= 8; n += 2) {
    CAPTURE(n);
    const auto pairs = enumerate_matching_pairs(n);
    CHECK(pairs.size() == euler_even[static_cast<std::size_t>(n / 2)]);
    std::vector<MatchingPair> img;
    for (const auto& p : enumerate(Family::cud_even_only, n)) {
      const auto mp = to_matching_pair(p);
      REQUIRE(from_matching_pair(mp) == p);
      img.push_back(mp);
    }
    std::sort(img.begin(), img.end(), [](const MatchingPair& x, const MatchingPair& y) {
      return std::tie(x.red, x.blue) < std::tie(y.red, y.blue);
    });
    CHECK(img == pairs);
  }
}

TEST_CASE("matchings: SVG output")
{
  const std::string svg = arc_diagram_svg(fig1);
  CHECK(svg == arc_diagram_svg(fig1));
  auto count = [&](const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1))
      ++c;
    return c;
  };
  CHECK(count("stroke=\"#cc0000\"") == 4);
  CHECK(count("stroke=\"#0044cc\"") == 4);
  CHECK(count("<circle") == 8);
  CHECK_THROWS_AS(arc_diagram_svg(from_cycles(parse_cycles("(1,2,3)"))), DomainError);
}

TEST_CASE("matchings: golden SVG files")
{
  const std::filesystem::path dir = CUDLAB_GOLDEN_DIR;
  CHECK(arc_diagram_svg(fig1) == slurp(dir / "fig1.svg"));
  CHECK(arc_diagram_svg(parse_one_line("2 1")) == slurp(dir / "tiny.svg"));

  const auto tmp = std::filesystem::temp_directory_path() / "cudlab_fig1_test.svg";
  render_arc_diagram(fig1, tmp);
  CHECK(slurp(tmp) == slurp(dir / "fig1.svg"));
  std::filesystem::remove(tmp);
  CHECK_THROWS(render_arc_diagram(fig1, "/nonexistent-dir/x.svg"));
}
