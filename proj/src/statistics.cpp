#include "cudlab/statistics.hpp"

#include <algorithm>
#include <cctype>

#include "cudlab/errors.hpp"

namespace cudlab {

namespace {

constexpr std::pair<Stat, std::string_view> stat_table[] = {
    {Stat::c, "c"},       {Stat::c_o, "c_o"}, {Stat::c_e, "c_e"},   {Stat::fp, "fp"},
    {Stat::lrm, "lrm"},   {Stat::st, "st"},   {Stat::extr, "extr"}, {Stat::exc, "exc"},
    {Stat::ud, "ud"},     {Stat::nud, "nud"},
};

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Stat parse_stat(std::string_view name)
{
  name = trim(name);
  for (const auto& [s, n] : stat_table)
    if (n == name)
      return s;
  throw UnknownName("unknown statistic: " + std::string(name));
}

std::string_view stat_name(Stat s)
{
  for (const auto& [st, n] : stat_table)
    if (st == s)
      return n;
  return "?";
}

std::vector<Stat> parse_stat_list(std::string_view names)
{
  std::vector<Stat> out;
  std::size_t pos = 0;
  while (pos <= names.size()) {
    auto comma = names.find(',', pos);
    auto tok = names.substr(pos, comma == names.npos ? names.npos : comma - pos);
    if (!trim(tok).empty())
      out.push_back(parse_stat(tok));
    if (comma == names.npos)
      break;
    pos = comma + 1;
  }
  return out;
}

int get(const StatVector& v, Stat s)
{
  switch (s) {
  case Stat::c: return v.c;
  case Stat::c_o: return v.c_o;
  case Stat::c_e: return v.c_e;
  case Stat::fp: return v.fp;
  case Stat::lrm: return v.lrm;
  case Stat::st: return v.st;
  case Stat::extr: return v.extr;
  case Stat::exc: return v.exc;
  case Stat::ud: return v.ud;
  case Stat::nud: return v.nud;
  }
  return 0;
}

std::vector<std::size_t> lr_minima_positions(const Permutation& p)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (out.empty() || p[i] < p[out.back()])
      out.push_back(i);
  return out;
}

std::vector<std::size_t> lr_maxima_positions(const Permutation& p)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (out.empty() || p[i] > p[out.back()])
      out.push_back(i);
  return out;
}

std::vector<std::size_t> extreme_positions(const Permutation& p)
{
  std::vector<std::size_t> out;
  if (p.empty())
    return out;
  Entry lo = p[0], hi = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] < lo) {
      lo = p[i];
      out.push_back(i);
    } else if (p[i] > hi) {
      hi = p[i];
      out.push_back(i);
    }
  }
  return out;
}

int lrm(const Permutation& p) { return static_cast<int>(lr_minima_positions(p).size()); }
int st(const Permutation& p) { return min_max_statistic(p, MinMaxPattern::alternating()); }
int extr(const Permutation& p) { return static_cast<int>(extreme_positions(p).size()); }

int exc(const Permutation& p)
{
  const Word ground = p.ground();
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > ground[i])
      ++count;
  return count;
}

StatVector stats(const Permutation& p)
{
  StatVector v;
  const CycleDecomposition cd = to_cycles(p);
  for (const auto& cyc : cd.cycles()) {
    ++v.c;
    if (cyc.size() % 2)
      ++v.c_o;
    else
      ++v.c_e;
    if (cyc.size() == 1)
      ++v.fp;
    if (is_up_down_cycle(cyc))
      ++v.ud;
  }
  v.nud = v.c - v.ud;
  v.lrm = lrm(p);
  v.st = st(p);
  v.extr = extr(p);
  v.exc = exc(p);
  return v;
}

MinMaxPattern::MinMaxPattern(std::vector<Extremum> prefix, std::vector<Extremum> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail))
{
  if (tail_.empty())
    throw DomainError("min-max pattern needs a nonempty repeating tail");
}

MinMaxPattern MinMaxPattern::alternating()
{
  return MinMaxPattern({}, {Extremum::min, Extremum::max});
}

MinMaxPattern MinMaxPattern::all_min() { return MinMaxPattern({}, {Extremum::min}); }

MinMaxPattern MinMaxPattern::parse(std::string_view text)
{
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    tokens.push_back(trim(text.substr(pos, comma == text.npos ? text.npos : comma - pos)));
    if (comma == text.npos)
      break;
    pos = comma + 1;
  }
  if (tokens.size() < 2 || tokens.back() != "...")
    throw ParseError("pattern must end with ',...', e.g. 'min,max,...': " +
                     std::string(text));
  tokens.pop_back();
  std::vector<Extremum> word;
  for (auto tok : tokens) {
    if (tok == "min")
      word.push_back(Extremum::min);
    else if (tok == "max")
      word.push_back(Extremum::max);
    else
      throw ParseError("pattern token must be 'min' or 'max': " + std::string(tok));
  }
  return MinMaxPattern({}, std::move(word));
}

Extremum MinMaxPattern::at(std::size_t j) const
{
  if (j < prefix_.size())
    return prefix_[j];
  return tail_[(j - prefix_.size()) % tail_.size()];
}

std::string MinMaxPattern::to_string() const
{
  std::string out;
  auto put = [&](Extremum e) {
    out += e == Extremum::min ? "min" : "max";
    out += ',';
  };
  for (auto e : prefix_)
    put(e);
  if (!prefix_.empty())
    out += "(";
  for (auto e : tail_)
    put(e);
  if (!prefix_.empty())
    out += ")";
  out += "...";
  return out;
}

std::vector<std::size_t> min_max_positions(const Permutation& p, const MinMaxPattern& s)
{
  std::vector<std::size_t> out;
  const auto w = p.word();
  std::size_t from = 0;
  for (std::size_t j = 0; from < w.size(); ++j) {
    auto rest = w.subspan(from);
    auto it = s.at(j) == Extremum::min ? std::min_element(rest.begin(), rest.end())
                                       : std::max_element(rest.begin(), rest.end());
    std::size_t pos = from + static_cast<std::size_t>(it - rest.begin());
    out.push_back(pos);
    from = pos + 1;
  }
  return out;
}

Word min_max_subsequence(const Permutation& p, const MinMaxPattern& s)
{
  Word out;
  for (auto i : min_max_positions(p, s))
    out.push_back(p[i]);
  return out;
}

int min_max_statistic(const Permutation& p, const MinMaxPattern& s)
{
  return static_cast<int>(min_max_positions(p, s).size());
}

} // namespace cudlab
