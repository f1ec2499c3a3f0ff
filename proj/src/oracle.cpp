#include "cudlab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cudlab/errors.hpp"

namespace cudlab {

EnumerationCaps EnumerationCaps::from_environment(EnumerationCaps base)
{
  if (const char* env = std::getenv("CUDLAB_CAP"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0)
      throw ParseError(std::string("CUDLAB_CAP must be a positive integer, got '") + env + "'");
    base.general = static_cast<int>(v);
    base.up_down = static_cast<int>(v);
  }
  return base;
}

EnumerationCaps EnumerationCaps::from_environment()
{
  return from_environment(EnumerationCaps{});
}

int EnumerationCaps::for_family(Family f) const
{
  switch (f) {
  case Family::ud:
  case Family::down_up:
  case Family::ud_last_gt_first:
    return up_down;
  default:
    return general;
  }
}

namespace {

void require_cap(Family f, int n, const EnumerationCaps& caps)
{
  if (n < 0)
    throw DomainError("n must be nonnegative");
  if (n > caps.for_family(f))
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(caps.for_family(f)) + " for family " +
                      std::string(family_name(f)));
}

void up_down_rec(Word& word, std::vector<bool>& used, int n, bool down_up,
                 const std::function<void(const Permutation&)>& visit)
{
  const auto i = word.size();
  if (i == static_cast<std::size_t>(n)) {
    visit(Permutation(word));
    return;
  }
  for (Entry v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)])
      continue;
    if (i > 0) {
      const bool rise = (i % 2 == 1) != down_up;
      if (rise != (v > word.back()))
        continue;
    }
    used[static_cast<std::size_t>(v)] = true;
    word.push_back(v);
    up_down_rec(word, used, n, down_up, visit);
    word.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

void for_each_up_down(int n, bool down_up, const std::function<void(const Permutation&)>& visit)
{
  Word word;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  up_down_rec(word, used, n, down_up, visit);
}

void cud_rec(Word remaining, std::vector<Cycle>& cycles, std::vector<Permutation>& out)
{
  if (remaining.empty()) {
    out.push_back(from_cycles(CycleDecomposition(cycles)));
    return;
  }
  const Entry head = remaining.front();
  const Word rest(remaining.begin() + 1, remaining.end());
  const std::size_t r = rest.size();
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    Word chosen, left;
    for (std::size_t b = 0; b < r; ++b)
      ((mask >> b) & 1u ? chosen : left).push_back(rest[b]);
    do {
      Cycle cyc{head};
      cyc.insert(cyc.end(), chosen.begin(), chosen.end());
      if (!is_up_down(cyc))
        continue;
      cycles.push_back(cyc);
      cud_rec(left, cycles, out);
      cycles.pop_back();
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
}

} // namespace

void for_each_member(Family f, int n, const std::function<void(const Permutation&)>& visit,
                     const EnumerationCaps& caps)
{
  require_cap(f, n, caps);
  switch (f) {
  case Family::ud:
    for_each_up_down(n, false, visit);
    return;
  case Family::down_up:
    for_each_up_down(n, true, visit);
    return;
  case Family::ud_last_gt_first:
    for_each_up_down(n, false, [&](const Permutation& p) {
      if (is_member(p, Family::ud_last_gt_first))
        visit(p);
    });
    return;
  default:
    break;
  }
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    Permutation p(w);
    if (is_member(p, f))
      visit(p);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> enumerate(Family f, int n, const EnumerationCaps& caps)
{
  std::vector<Permutation> out;
  for_each_member(f, n, [&](const Permutation& p) { out.push_back(p); }, caps);
  return out;
}

std::vector<Permutation> enumerate_by_filter(Family f, int n, const EnumerationCaps& caps)
{
  if (n < 0)
    throw DomainError("n must be nonnegative");
  if (n > caps.general)
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the filter cap " +
                      std::to_string(caps.general));
  std::vector<Permutation> out;
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    Permutation p(w);
    if (is_member(p, f))
      out.push_back(std::move(p));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> enumerate_up_down_direct(int n, bool down_up)
{
  std::vector<Permutation> out;
  for_each_up_down(n, down_up, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> enumerate_cud_direct(int n)
{
  Word all(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(all.begin(), all.end(), 1);
  std::vector<Cycle> cycles;
  std::vector<Permutation> out;
  cud_rec(all, cycles, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_exc_def_swap(const Permutation& p)
{
  if (!p.on_interval())
    throw DomainError("exc-def-swap is defined on [n]");
  auto image = [&](Entry i) { return p[static_cast<std::size_t>(i - 1)]; };
  for (Entry i = 1; i <= static_cast<Entry>(p.size()); ++i) {
    const Entry j = image(i);
    if (j > i && !(image(j) < j))
      return false;
    if (j < i && !(image(j) > j))
      return false;
  }
  return true;
}

std::uint64_t DistributionTable::total() const
{
  std::uint64_t t = 0;
  for (const auto& [_, c] : rows)
    t += c;
  return t;
}

std::map<int, std::uint64_t> DistributionTable::marginal(std::size_t index) const
{
  std::map<int, std::uint64_t> out;
  for (const auto& [values, c] : rows)
    out[values.at(index)] += c;
  return out;
}

void DistributionTable::merge(const DistributionTable& other)
{
  if (other.family != family || other.n != n || other.stats != stats)
    throw DomainError("cannot merge distribution tables over different domains");
  for (const auto& [values, c] : other.rows)
    rows[values] += c;
}

MPoly DistributionTable::polynomial(const std::vector<std::string>& markers) const
{
  if (markers.size() != stats.size())
    throw DomainError("need one marker per statistic");
  MPoly out(markers);
  for (const auto& [values, c] : rows) {
    MPoly::Exponents e(values.begin(), values.end());
    out.set_coefficient(e, out.coefficient(e) + Rational(static_cast<unsigned long>(c)));
  }
  return out;
}

std::string DistributionTable::to_csv() const
{
  std::ostringstream os;
  for (const auto s : stats)
    os << stat_name(s) << ',';
  os << "count\n";
  for (const auto& [values, c] : rows) {
    for (int v : values)
      os << v << ',';
    os << c << '\n';
  }
  return os.str();
}

std::string DistributionTable::to_json() const
{
  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  j["n"] = n;
  j["stats"] = nlohmann::json::array();
  for (const auto s : stats)
    j["stats"].push_back(stat_name(s));
  j["rows"] = nlohmann::json::array();
  for (const auto& [values, c] : rows)
    j["rows"].push_back({{"values", values}, {"count", c}});
  j["total"] = total();
  return j.dump(2);
}

std::string DistributionTable::to_text() const
{
  std::ostringstream os;
  for (const auto& [values, c] : rows) {
    for (std::size_t i = 0; i < values.size(); ++i)
      os << (i ? " " : "") << stat_name(stats[i]) << '=' << values[i];
    os << ": " << c << '\n';
  }
  return os.str();
}

DistributionTable distribution(Family f, int n, const std::vector<Stat>& stats,
                               const EnumerationCaps& caps)
{
  DistributionTable table{f, n, stats, {}};
  std::vector<int> key(stats.size());
  for_each_member(f, n, [&](const Permutation& p) {
    const StatVector v = cudlab::stats(p);
    for (std::size_t i = 0; i < stats.size(); ++i)
      key[i] = get(v, stats[i]);
    ++table.rows[key];
  }, caps);
  return table;
}

DistributionTable distribution_where(const std::function<bool(const Permutation&)>& keep, int n,
                                     const std::vector<Stat>& stats)
{
  DistributionTable table{Family::all, n, stats, {}};
  std::vector<int> key(stats.size());
  for_each_member(Family::all, n, [&](const Permutation& p) {
    if (!keep(p))
      return;
    const StatVector v = cudlab::stats(p);
    for (std::size_t i = 0; i < stats.size(); ++i)
      key[i] = get(v, stats[i]);
    ++table.rows[key];
  });
  return table;
}

} // namespace cudlab
