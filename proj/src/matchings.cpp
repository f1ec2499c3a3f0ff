#include "cudlab/matchings.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cudlab/errors.hpp"

namespace cudlab {

namespace {

constexpr int spacing = 40;
constexpr int margin = 20;
constexpr const char* red_colour = "#cc0000";
constexpr const char* blue_colour = "#0044cc";

void check_perfect(int n, const std::vector<Arc>& arcs, const char* colour)
{
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (const auto& [a, b] : arcs) {
    if (a < 1 || b > n || a >= b)
      throw DomainError(std::string(colour) + " arc out of range or not ordered");
    for (Entry v : {a, b}) {
      if (seen[static_cast<std::size_t>(v)])
        throw DomainError(std::string(colour) + " matching uses vertex " + std::to_string(v) +
                          " twice");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  if (static_cast<int>(arcs.size()) * 2 != n)
    throw DomainError(std::string(colour) + " matching is not perfect");
}

std::set<Entry> openers(const std::vector<Arc>& arcs)
{
  std::set<Entry> out;
  for (const auto& a : arcs)
    out.insert(a.first);
  return out;
}

std::string arcs_text(const std::vector<Arc>& arcs)
{
  std::string out;
  for (const auto& [a, b] : arcs)
    out += ' ' + std::to_string(a) + '-' + std::to_string(b);
  return out;
}

void matchings_rec(std::vector<Entry>& free, std::vector<Arc>& cur,
                   std::vector<std::vector<Arc>>& out)
{
  if (free.empty()) {
    auto m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  const Entry a = free.front();
  for (std::size_t k = 1; k < free.size(); ++k) {
    const Entry b = free[k];
    std::vector<Entry> rest;
    for (std::size_t i = 1; i < free.size(); ++i)
      if (i != k)
        rest.push_back(free[i]);
    cur.emplace_back(a, b);
    matchings_rec(rest, cur, out);
    cur.pop_back();
  }
}

} // namespace

void MatchingPair::validate() const
{
  if (n < 0 || n % 2)
    throw DomainError("matching pair needs an even number of vertices");
  check_perfect(n, red, "red");
  check_perfect(n, blue, "blue");
  if (openers(red) != openers(blue))
    throw DomainError("red and blue matchings disagree on opening vertices");
}

bool MatchingPair::valid() const
{
  try {
    validate();
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::string MatchingPair::to_string() const
{
  return "red:" + arcs_text(red) + " / blue:" + arcs_text(blue);
}

MatchingPair make_matching_pair(int n, std::vector<Arc> red, std::vector<Arc> blue)
{
  auto norm = [](std::vector<Arc>& arcs) {
    for (auto& a : arcs)
      if (a.first > a.second)
        std::swap(a.first, a.second);
    std::sort(arcs.begin(), arcs.end());
  };
  norm(red);
  norm(blue);
  return MatchingPair{n, std::move(red), std::move(blue)};
}

MatchingPair to_matching_pair(const Permutation& p)
{
  if (!is_member(p, Family::cud_even_only))
    throw DomainError("matching pairs need a CUD permutation with only even cycles");
  MatchingPair mp;
  mp.n = static_cast<int>(p.size());
  for (Entry i = 1; i <= mp.n; ++i) {
    const Entry j = p[static_cast<std::size_t>(i - 1)];
    if (j > i)
      mp.red.emplace_back(i, j);
    else
      mp.blue.emplace_back(j, i);
  }
  std::sort(mp.red.begin(), mp.red.end());
  std::sort(mp.blue.begin(), mp.blue.end());
  return mp;
}

Permutation from_matching_pair(const MatchingPair& mp)
{
  mp.validate();
  Word w(static_cast<std::size_t>(mp.n), 0);
  for (const auto& [a, b] : mp.red)
    w[static_cast<std::size_t>(a - 1)] = b;
  for (const auto& [a, b] : mp.blue)
    w[static_cast<std::size_t>(b - 1)] = a;
  return Permutation(std::move(w));
}

std::vector<MatchingPair> enumerate_matching_pairs(int n)
{
  if (n < 0 || n % 2)
    throw DomainError("matching pairs need an even number of vertices");
  std::vector<Entry> free;
  for (Entry v = 1; v <= n; ++v)
    free.push_back(v);
  std::vector<Arc> cur;
  std::vector<std::vector<Arc>> all;
  matchings_rec(free, cur, all);

  std::vector<MatchingPair> out;
  for (const auto& r : all)
    for (const auto& b : all)
      if (openers(r) == openers(b))
        out.push_back(MatchingPair{n, r, b});
  std::sort(out.begin(), out.end(), [](const MatchingPair& x, const MatchingPair& y) {
    return std::tie(x.red, x.blue) < std::tie(y.red, y.blue);
  });
  return out;
}

std::string arc_diagram_svg(const Permutation& p)
{
  const MatchingPair mp = to_matching_pair(p);
  int max_radius = 0;
  for (const auto& arcs : {mp.red, mp.blue})
    for (const auto& [a, b] : arcs)
      max_radius = std::max(max_radius, (b - a) * spacing / 2);
  const int width = 2 * margin + std::max(mp.n - 1, 0) * spacing;
  const int axis = margin + max_radius;
  const int height = 2 * axis;
  auto x_of = [](Entry v) { return margin + (v - 1) * spacing; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <line x1=\"" << x_of(1) << "\" y1=\"" << axis << "\" x2=\"" << x_of(mp.n)
     << "\" y2=\"" << axis << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  // sweep 1 bulges upwards when drawn left to right
  auto arc = [&](const Arc& a, const char* colour, int sweep) {
    const int r = (a.second - a.first) * spacing / 2;
    os << "  <path d=\"M " << x_of(a.first) << ' ' << axis << " A " << r << ' ' << r
       << " 0 0 " << sweep << ' ' << x_of(a.second) << ' ' << axis << "\" fill=\"none\" stroke=\""
       << colour << "\" stroke-width=\"2\"/>\n";
  };
  for (const auto& a : mp.red)
    arc(a, red_colour, 1);
  for (const auto& a : mp.blue)
    arc(a, blue_colour, 0);
  for (Entry v = 1; v <= mp.n; ++v) {
    os << "  <circle cx=\"" << x_of(v) << "\" cy=\"" << axis
       << "\" r=\"4\" fill=\"#000000\"/>\n";
    os << "  <text x=\"" << x_of(v) << "\" y=\"" << axis + 16
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << v
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void render_arc_diagram(const Permutation& p, const std::filesystem::path& path)
{
  const std::string svg = arc_diagram_svg(p);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << svg;
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

} // namespace cudlab
