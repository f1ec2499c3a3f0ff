#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cudlab/bijections.hpp"
#include "cudlab/catalog.hpp"
#include "cudlab/errors.hpp"
#include "cudlab/matchings.hpp"
#include "cudlab/oracle.hpp"
#include "cudlab/sequences.hpp"

using namespace cudlab;
using json = nlohmann::ordered_json;

namespace {

enum class Format { text, json, csv };

struct Config {
  Format format = Format::text;
  std::string out;
  std::uint64_t seed = 0;
  std::optional<int> cap;
  int series_cap = default_series_cap;

  EnumerationCaps caps() const
  {
    EnumerationCaps c = EnumerationCaps::from_environment();
    if (cap)
      c.general = c.up_down = *cap;
    return c;
  }
};

// Where command output goes: --out if given, stdout otherwise.
void emit(const Config& cfg, const std::string& text)
{
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open " + cfg.out + " for writing");
  f << text;
}

json poly_json(const MPoly& p)
{
  json j = json::object();
  for (const auto& [e, c] : p.terms())
    j[p.monomial_label(e)] = c.get_str();
  return j;
}

// ---- seq

int cmd_seq(const Config& cfg, const std::string& name, int n_max, int from)
{
  const SequenceId id = parse_sequence_id(name);
  const auto& entry = catalog_entry(id);
  if (from < 0 || from > n_max)
    throw DomainError("--from must lie in [0, n]");
  const auto polys = catalog_polynomials(id, n_max, cfg.series_cap);
  const bool marked = !entry.markers.empty();
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (int n = from; n <= n_max; ++n) {
      const auto& p = polys[static_cast<std::size_t>(n)];
      if (marked)
        arr.push_back({{"n", n}, {"coefficients", poly_json(p)}});
      else
        arr.push_back(p.constant_term().get_str());
    }
    emit(cfg, arr.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  for (int n = from; n <= n_max; ++n) {
    const auto& p = polys[static_cast<std::size_t>(n)];
    os << n << ' ' << (marked ? p.to_string() : p.constant_term().get_str()) << '\n';
  }
  emit(cfg, os.str());
  return 0;
}

// ---- enumerate

int cmd_enumerate(const Config& cfg, const std::string& family, int n, const std::string& stat_list,
                  bool cycles)
{
  const bool swap = family == "exc-def-swap";
  const Family f = swap ? Family::all : parse_family(family);
  const auto caps = cfg.caps();
  if (!stat_list.empty()) {
    const auto stats = parse_stat_list(stat_list);
    DistributionTable t;
    if (swap) {
      if (n > caps.general)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                          std::to_string(caps.general));
      t = distribution_where(is_exc_def_swap, n, stats);
    } else {
      t = distribution(f, n, stats, caps);
    }
    switch (cfg.format) {
    case Format::json:
      emit(cfg, t.to_json() + "\n");
      break;
    case Format::csv:
      emit(cfg, t.to_csv());
      break;
    case Format::text:
      emit(cfg, t.to_text());
      break;
    }
    return 0;
  }
  std::vector<Permutation> members;
  for_each_member(f, n, [&](const Permutation& p) {
    if (!swap || is_exc_def_swap(p))
      members.push_back(p);
  }, caps);
  auto show = [&](const Permutation& p) {
    return cycles ? to_string(to_cycles(p)) : to_string(p);
  };
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& p : members)
      arr.push_back(show(p));
    emit(cfg, json{{"family", family}, {"n", n}, {"count", members.size()}, {"members", arr}}
                  .dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  for (const auto& p : members)
    os << show(p) << '\n';
  emit(cfg, os.str());
  return 0;
}

// ---- map

int cmd_map(const Config& cfg, const std::string& name, const std::string& input,
            const std::string& pattern, const std::string& bits, bool ascending)
{
  const Permutation p = parse_permutation(input);
  auto as_cycles = [&] {
    // cycle notation is parsed straight into a decomposition so general
    // ground sets survive
    return input.find('(') != std::string::npos ? parse_cycles(input) : to_cycles(p);
  };
  std::string out;
  if (name == "g")
    out = to_string(g_even(p));
  else if (name == "g-inv")
    out = to_string(g_even_inverse(as_cycles()));
  else if (name == "f")
    out = to_string(f_odd(p));
  else if (name == "f-inv")
    out = to_string(f_odd_inverse(as_cycles()));
  else if (name == "phi")
    out = to_string(phi(p));
  else if (name == "phi-inv")
    out = to_string(phi_inverse(as_cycles()));
  else if (name == "jbij")
    out = to_string(jbij(p));
  else if (name == "jbij-inv")
    out = to_string(jbij_inverse(as_cycles()));
  else if (name == "h")
    out = to_string(h_map(p, pattern.empty() ? MinMaxPattern::alternating()
                                             : MinMaxPattern::parse(pattern)));
  else if (name == "ell") {
    if (bits.empty())
      throw ParseError("ell needs --bits");
    out = to_string(ell_map(p, BitWord::parse(bits)));
  } else if (name == "ell-inv") {
    const auto [q, s] = ell_inverse(p);
    out = to_string(q) + " / " + s.to_string();
  } else if (name == "foata")
    out = to_string(foata_word(as_cycles(), !ascending));
  else
    throw UnknownName("unknown map: " + name);

  if (cfg.format == Format::json)
    emit(cfg, json{{"map", name}, {"input", input}, {"output", out}}.dump(2) + "\n");
  else
    emit(cfg, out + "\n");
  return 0;
}

// ---- verify

int cmd_verify(const Config& cfg, int n_cap, int order, const std::string& inject)
{
  VerifyOptions opt;
  opt.n_cap = n_cap;
  opt.series_order = order;
  if (!inject.empty()) {
    std::vector<Integer> table;
    std::stringstream ss(inject);
    std::string item;
    while (std::getline(ss, item, ','))
      table.emplace_back(item);
    opt.euler_override = table;
  }
  const VerifyReport r = verify_all(opt);
  if (cfg.format == Format::json)
    emit(cfg, r.to_json() + "\n");
  else
    emit(cfg, r.to_text());
  if (!r.all_passed()) {
    std::cerr << "first failing check: " << *r.first_failure() << '\n';
    return 1;
  }
  return 0;
}

// ---- expect

double mc_estimate(const std::string& what, int n, long samples, std::uint64_t seed,
                   double& stderr_out)
{
  std::mt19937_64 rng(seed);
  Word w(static_cast<std::size_t>(n));
  double sum = 0, sumsq = 0;
  for (long s = 0; s < samples; ++s) {
    std::iota(w.begin(), w.end(), 1);
    for (std::size_t i = w.size(); i > 1; --i) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      std::swap(w[i - 1], w[pick(rng)]);
    }
    const int ud = stats(Permutation(w)).ud;
    const double x = what == "ud-cycles" ? ud : (ud == 0 ? 1.0 : 0.0);
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / static_cast<double>(samples);
  const double var = std::max(0.0, sumsq / static_cast<double>(samples) - mean * mean);
  stderr_out = std::sqrt(var / static_cast<double>(samples));
  return mean;
}

int cmd_expect(const Config& cfg, const std::string& what, int n, bool exact, bool as_float,
               bool montecarlo, long samples)
{
  if (what != "ud-cycles" && what != "no-ud-cycles")
    throw UnknownName("unknown expectation: " + what + " (ud-cycles, no-ud-cycles)");
  if (n < 1)
    throw DomainError("--n must be at least 1");
  if (!exact && !as_float && !montecarlo)
    exact = true;
  const Rational value = what == "ud-cycles" ? expected_ud_cycles(n)
                                             : Rational(Rational(no_ud_cycles_count(n)) / Rational(factorial(n)));
  const double limit = what == "ud-cycles" ? expected_ud_cycles_limit() : no_ud_cycles_limit();
  json j{{"quantity", what}, {"n", n}};
  std::ostringstream os;
  os << std::setprecision(12) << std::fixed;
  if (exact) {
    j["exact"] = value.get_str();
    os << value.get_str() << '\n';
  }
  if (as_float) {
    j["float"] = value.get_d();
    j["limit"] = limit;
    os << value.get_d() << '\n';
  }
  if (montecarlo) {
    if (samples < 2)
      throw DomainError("--samples must be at least 2");
    double se = 0;
    const double est = mc_estimate(what, n, samples, cfg.seed, se);
    j["estimate"] = est;
    j["stderr"] = se;
    j["samples"] = samples;
    j["seed"] = cfg.seed;
    os << "estimate " << est << " stderr " << se << '\n';
  }
  emit(cfg, cfg.format == Format::json ? j.dump(2) + "\n" : os.str());
  return 0;
}

// ---- diagram

int cmd_diagram(const Config& cfg, const std::string& input, bool text)
{
  const Permutation p = parse_permutation(input);
  if (text) {
    emit(cfg, to_matching_pair(p).to_string() + "\n");
    return 0;
  }
  if (cfg.out.empty())
    std::cout << arc_diagram_svg(p);
  else
    render_arc_diagram(p, cfg.out);
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Cycle-up-down permutations: sequences, enumeration, bijections and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_option("--seed", cfg.seed, "RNG seed for Monte Carlo")->capture_default_str();
  int cap = 0;
  auto* cap_opt = app.add_option("--cap", cap, "Enumeration cap on n (overrides CUDLAB_CAP)")
                      ->check(CLI::PositiveNumber);
  app.add_option("--series-cap", cfg.series_cap, "Largest allowed series order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string name, input, stat_list, pattern, bits, inject, what;
  int n = 0, from = 0, order = 20;
  long samples = 100000;
  bool cycles = false, ascending = false, json_flag = false, exact = false, as_float = false,
       montecarlo = false, text = false;

  auto* seq = app.add_subcommand("seq", "Print a catalog sequence (n value per line)");
  seq->add_option("name", name, "Catalog name")->required();
  seq->add_option("--n", n, "Largest n")->required();
  seq->add_option("--from", from, "First n to print")->capture_default_str();

  auto* en = app.add_subcommand("enumerate", "List a family or tabulate statistics");
  en->add_option("family", name, "Family name (or exc-def-swap)")->required();
  en->add_option("--n", n, "Size")->required();
  en->add_option("--stats", stat_list, "Comma-separated statistics, e.g. lrm,st");
  en->add_flag("--cycles", cycles, "Print members in cycle notation");

  auto* mp = app.add_subcommand("map", "Apply a bijection");
  mp->add_option("name", name, "g, g-inv, f, f-inv, phi, phi-inv, jbij, jbij-inv, h, ell, "
                               "ell-inv, foata")
      ->required();
  mp->add_option("input", input, "Permutation, one-line or cycle notation")->required();
  mp->add_option("--pattern", pattern, "Min-max pattern for h, e.g. max,min,...");
  mp->add_option("--bits", bits, "Bit word for ell, e.g. 10011");
  mp->add_flag("--ascending", ascending, "foata: order cycles by increasing first entry");

  auto* ve = app.add_subcommand("verify", "Run every identity and bijection check");
  ve->add_option("--n", n, "Largest n for exhaustive checks (at most 9)")->default_val(7);
  ve->add_option("--order", order, "Series truncation order")->capture_default_str();
  ve->add_flag("--json", json_flag, "Same as --format json");
  ve->add_option("--inject-euler", inject, "Comma-separated Euler table to check against");

  auto* ex = app.add_subcommand("expect", "Expected number of up-down cycles, or P(none)");
  ex->add_option("quantity", what, "ud-cycles or no-ud-cycles")->required();
  ex->add_option("--n", n, "Size")->required();
  ex->add_flag("--exact", exact, "Exact rational value");
  ex->add_flag("--float", as_float, "Floating-point value");
  ex->add_flag("--montecarlo", montecarlo, "Monte Carlo estimate with standard error");
  ex->add_option("--samples", samples, "Monte Carlo samples")->capture_default_str();

  auto* di = app.add_subcommand("diagram", "Arc diagram of an even-cycle CUD permutation");
  di->add_option("input", input, "Permutation")->required();
  di->add_flag("--text", text, "Print the arc sets instead of SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (json_flag)
    cfg.format = Format::json;
  if (*cap_opt)
    cfg.cap = cap;

  try {
    if (*seq)
      return cmd_seq(cfg, name, n, from);
    if (*en)
      return cmd_enumerate(cfg, name, n, stat_list, cycles);
    if (*mp)
      return cmd_map(cfg, name, input, pattern, bits, ascending);
    if (*ve)
      return cmd_verify(cfg, n, order, inject);
    if (*ex)
      return cmd_expect(cfg, what, n, exact, as_float, montecarlo, samples);
    if (*di)
      return cmd_diagram(cfg, input, text);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    // ParseError, UnknownName
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
