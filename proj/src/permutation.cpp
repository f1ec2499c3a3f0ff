#include "cudlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "cudlab/errors.hpp"

namespace cudlab {

namespace {

void check_distinct_positive(std::span<const Entry> values, const char* what)
{
  std::set<Entry> seen;
  for (Entry v : values) {
    if (v <= 0)
      throw ParseError(std::string(what) + ": entries must be positive, got " +
                       std::to_string(v));
    if (!seen.insert(v).second)
      throw ParseError(std::string(what) + ": entry " + std::to_string(v) +
                       " repeated");
  }
}

bool alternates(std::span<const Entry> w, bool first_up)
{
  bool up = first_up;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (up != (w[i - 1] < w[i]))
      return false;
    up = !up;
  }
  return true;
}

Entry parse_entry(std::string_view tok)
{
  Entry v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
    throw ParseError("not a positive integer: '" + std::string(tok) + "'");
  return v;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Permutation::Permutation(Word word) : word_(std::move(word))
{
  check_distinct_positive(word_, "permutation");
}

Permutation Permutation::identity(int n)
{
  Word w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Word Permutation::ground() const
{
  Word g = word_;
  std::sort(g.begin(), g.end());
  return g;
}

bool Permutation::on_interval() const
{
  return std::all_of(word_.begin(), word_.end(), [n = Entry(word_.size())](Entry v) {
    return v <= n;
  });
}

CycleDecomposition::CycleDecomposition(std::vector<Cycle> cycles)
{
  Word all;
  for (auto& cyc : cycles) {
    if (cyc.empty())
      throw ParseError("malformed cycles: empty cycle");
    all.insert(all.end(), cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
  }
  check_distinct_positive(all, "malformed cycles");
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
  cycles_ = std::move(cycles);
}

std::size_t CycleDecomposition::degree() const
{
  std::size_t d = 0;
  for (const auto& cyc : cycles_)
    d += cyc.size();
  return d;
}

Word CycleDecomposition::ground() const
{
  Word g;
  for (const auto& cyc : cycles_)
    g.insert(g.end(), cyc.begin(), cyc.end());
  std::sort(g.begin(), g.end());
  return g;
}

CycleDecomposition to_cycles(const Permutation& p)
{
  const Word ground = p.ground();
  const std::size_t n = ground.size();
  auto index_of = [&](Entry v) {
    return static_cast<std::size_t>(
        std::lower_bound(ground.begin(), ground.end(), v) - ground.begin());
  };

  std::vector<bool> seen(n, false);
  std::vector<Cycle> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    Cycle cyc;
    for (std::size_t i = start; !seen[i]; i = index_of(p[i])) {
      seen[i] = true;
      cyc.push_back(ground[i]);
    }
    cycles.push_back(std::move(cyc));
  }
  return CycleDecomposition(std::move(cycles));
}

Permutation from_cycles(const CycleDecomposition& c)
{
  const Word ground = c.ground();
  Word w(ground.size());
  auto index_of = [&](Entry v) {
    return static_cast<std::size_t>(
        std::lower_bound(ground.begin(), ground.end(), v) - ground.begin());
  };
  for (const auto& cyc : c.cycles())
    for (std::size_t j = 0; j < cyc.size(); ++j)
      w[index_of(cyc[j])] = cyc[(j + 1) % cyc.size()];
  return Permutation(std::move(w));
}

Permutation from_cycles(const CycleDecomposition& c, std::span<const Entry> ground)
{
  Word expected(ground.begin(), ground.end());
  std::sort(expected.begin(), expected.end());
  if (c.ground() != expected)
    throw ParseError("malformed cycles: cycles do not cover the ground set exactly");
  return from_cycles(c);
}

Word switched(std::span<const Entry> word)
{
  Word sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  Word out;
  out.reserve(word.size());
  for (Entry v : word) {
    auto i = std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    out.push_back(sorted[sorted.size() - 1 - static_cast<std::size_t>(i)]);
  }
  return out;
}

Permutation switched(const Permutation& p)
{
  return Permutation(switched(p.word()));
}

void switch_range(Word& word, std::size_t first, std::size_t last)
{
  Word part = switched(std::span<const Entry>(word).subspan(first, last - first));
  std::copy(part.begin(), part.end(), word.begin() + static_cast<std::ptrdiff_t>(first));
}

bool is_up_down(std::span<const Entry> word) { return alternates(word, true); }
bool is_down_up(std::span<const Entry> word) { return alternates(word, false); }
bool is_alternating(std::span<const Entry> word)
{
  return is_up_down(word) || is_down_up(word);
}

bool is_up_down_cycle(std::span<const Entry> cycle)
{
  Cycle c(cycle.begin(), cycle.end());
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return is_up_down(c);
}

bool is_generalized_up_down_cycle(std::span<const Entry> cycle)
{
  Cycle c(cycle.begin(), cycle.end());
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (is_up_down(c))
      return true;
    std::rotate(c.begin(), c.begin() + 1, c.end());
  }
  return c.empty();
}

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr FamilyInfo family_table[] = {
    {Family::all, "all"},
    {Family::ud, "ud"},
    {Family::down_up, "down-up"},
    {Family::cud, "cud"},
    {Family::cud_even_only, "cud-even-only"},
    {Family::cud_odd_only, "cud-odd-only"},
    {Family::cud_derangement, "cud-derangement"},
    {Family::gcud, "gcud"},
    {Family::gcud_odd_only, "gcud-odd-only"},
    {Family::gcud_even_only, "gcud-even-only"},
    {Family::cud_cyclic, "cud-cyclic"},
    {Family::gcud_cyclic, "gcud-cyclic"},
    {Family::ud_last_gt_first, "ud-last-gt-first"},
};

} // namespace

Family parse_family(std::string_view name)
{
  std::string norm;
  for (char ch : name) {
    if (ch == '_')
      norm.push_back('-');
    else
      norm.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (norm == "downup")
    norm = "down-up";
  for (const auto& info : family_table)
    if (info.name == norm)
      return info.family;
  throw UnknownName("unknown family: " + std::string(name));
}

std::string_view family_name(Family f)
{
  for (const auto& info : family_table)
    if (info.family == f)
      return info.name;
  return "?";
}

bool needs_interval(Family f)
{
  switch (f) {
  case Family::all:
  case Family::ud:
  case Family::down_up:
  case Family::ud_last_gt_first:
    return false;
  default:
    return true;
  }
}

bool is_member(const Permutation& p, Family f)
{
  if (needs_interval(f) && !p.on_interval())
    throw DomainError("family " + std::string(family_name(f)) +
                      " is defined on [n]; got a permutation of another set");

  switch (f) {
  case Family::all:
    return true;
  case Family::ud:
    return is_up_down(p.word());
  case Family::down_up:
    return is_down_up(p.word());
  case Family::ud_last_gt_first:
    return !p.empty() && p.size() % 2 == 0 && is_up_down(p.word()) &&
           p[p.size() - 1] > p[0];
  default:
    break;
  }

  const auto cycles = to_cycles(p).cycles();
  auto every = [&](auto pred) { return std::all_of(cycles.begin(), cycles.end(), pred); };
  auto ud = [](const Cycle& c) { return is_up_down_cycle(c); };
  auto gud = [](const Cycle& c) { return is_generalized_up_down_cycle(c); };
  auto even = [](const Cycle& c) { return c.size() % 2 == 0; };
  auto odd = [](const Cycle& c) { return c.size() % 2 == 1; };

  switch (f) {
  case Family::cud:
    return every(ud);
  case Family::cud_even_only:
    return every(ud) && every(even);
  case Family::cud_odd_only:
    return every(ud) && every(odd);
  case Family::cud_derangement:
    return every(ud) && every([](const Cycle& c) { return c.size() > 1; });
  case Family::gcud:
    return every(gud);
  case Family::gcud_odd_only:
    return every(gud) && every(odd);
  case Family::gcud_even_only:
    return every(gud) && every(even);
  case Family::cud_cyclic:
    return cycles.size() == 1 && every(ud);
  case Family::gcud_cyclic:
    return cycles.size() == 1 && every(gud);
  default:
    return false;
  }
}

Permutation parse_one_line(std::string_view text)
{
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i)
      w.push_back(parse_entry(text.substr(i, j - i)));
    i = j;
  }
  return Permutation(std::move(w));
}

CycleDecomposition parse_cycles(std::string_view text)
{
  text = trim(text);
  if (text.empty() || text == "()")
    return {};

  std::vector<Cycle> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw ParseError("malformed cycles: expected '(' in '" + std::string(text) + "'");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw ParseError("malformed cycles: missing ')'");
    std::string_view body = text.substr(i + 1, close - i - 1);
    Cycle cyc;
    std::size_t pos = 0;
    while (true) {
      auto comma = body.find(',', pos);
      auto tok = trim(body.substr(pos, comma == std::string_view::npos ? body.npos
                                                                       : comma - pos));
      cyc.push_back(parse_entry(tok));
      if (comma == std::string_view::npos)
        break;
      pos = comma + 1;
    }
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  return CycleDecomposition(std::move(cycles));
}

Permutation parse_permutation(std::string_view text)
{
  auto t = trim(text);
  if (!t.empty() && t.front() == '(')
    return from_cycles(parse_cycles(t));
  return parse_one_line(t);
}

std::string to_string(const Permutation& p)
{
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out.push_back(' ');
    out += std::to_string(p[i]);
  }
  return out;
}

std::string to_string(const CycleDecomposition& c)
{
  if (c.empty())
    return "()";
  std::string out;
  for (const auto& cyc : c.cycles()) {
    out.push_back('(');
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j)
        out.push_back(',');
      out += std::to_string(cyc[j]);
    }
    out.push_back(')');
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p)
{
  return os << to_string(p);
}

std::ostream& operator<<(std::ostream& os, const CycleDecomposition& c)
{
  return os << to_string(c);
}

} // namespace cudlab
