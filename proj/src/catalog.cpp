#include "cudlab/catalog.hpp"

#include <array>

#include "cudlab/errors.hpp"

namespace cudlab {

namespace {

const std::array<CatalogEntry, 22>& table()
{
  static const std::array<CatalogEntry, 22> entries{{
      {SequenceId::euler, "euler", {}, "sec z + tan z", "up-down permutations (A000111)"},
      {SequenceId::cud, "cud", {}, "1/(1 - sin z)", "CUD permutations of [n]; E_{n+1}"},
      {SequenceId::cud_cyclic, "cud-cyclic", {}, "int_0^z E(u) du",
       "cyclic CUD permutations; E_{n-1}"},
      {SequenceId::cud_even_only, "cud-even-only", {}, "sec z",
       "CUD permutations with only even cycles"},
      {SequenceId::cud_odd_only, "cud-odd-only", {}, "sec z + tan z",
       "CUD permutations with only odd cycles"},
      {SequenceId::exc_def_swap, "exc-def-swap", {}, "e^z sec z",
       "excedances map to deficiencies and back, fixed points allowed (A003701)"},
      {SequenceId::gcud_odd_only, "gcud-odd-only", {}, "exp(tan z)",
       "GCUD permutations with only odd cycles (A006229)"},
      {SequenceId::k_euler_odd, "k-euler-odd", {}, "(z/2) tan z",
       "up-down permutations of [2k] with last > first; k E_{2k-1} at n = 2k (A024255)"},
      {SequenceId::gcud_even_cyclic, "gcud-even-cyclic", {},
       "sec z - 1 - (z/2) tan z - ln(cos z)", "cyclic GCUD permutations of even length"},
      {SequenceId::gcud_even_only, "gcud-even-only", {}, "sec z exp(sec z - 1 - (z/2) tan z)",
       "GCUD permutations with only even cycles"},
      {SequenceId::gcud, "gcud", {}, "sec z exp(sec z - 1 + (1 - z/2) tan z)",
       "GCUD permutations"},
      {SequenceId::cud_derangements, "cud-derangements", {}, "e^{-z}/(1 - sin z)",
       "CUD derangements"},
      {SequenceId::cud_fp_cycles, "cud-fp-cycles", {"x", "t"},
       "e^{(x-1)tz}/(1 - sin z)^t", "CUD by fixed points (x) and cycles (t)"},
      {SequenceId::cud_cycles, "cud-cycles", {"t"}, "(1 - sin z)^{-t}", "CUD by cycles"},
      {SequenceId::cud_odd_even, "cud-odd-even", {"t_o", "t_e"},
       "(sec z + tan z)^{t_o} (sec z)^{t_e}", "CUD by odd (t_o) and even (t_e) cycles"},
      {SequenceId::ud_st, "ud-st", {"t"}, "(sec z + tan z)^t",
       "up-down permutations by min-max subsequence length"},
      {SequenceId::ud_lrm, "ud-lrm", {"t"}, "t int_0^z sec^{t+1} u du + sec^t z - 1",
       "up-down permutations (n >= 1) by left-to-right minima"},
      {SequenceId::ud_extr, "ud-extr", {"t"}, "int_0^z (1 - sin u)^{-t} du",
       "up-down permutations (n >= 1) by extreme elements"},
      {SequenceId::gcud_fp_cycles, "gcud-fp-cycles", {"x", "t"},
       "sec^t z exp[t((x-1)z + sec z - 1 + (1 - z/2) tan z)]",
       "GCUD by fixed points (x) and cycles (t)"},
      {SequenceId::perm_ud_nud, "perm-ud-nud", {"v", "w"},
       "(1 - z)^{-w} (1 - sin z)^{-(v-w)}",
       "all permutations by up-down (v) and other (w) cycles"},
      {SequenceId::avg_ud_cycles, "avg-ud-cycles", {}, "-ln(1 - sin z)/(1 - z)",
       "total number of up-down cycles over S_n"},
      {SequenceId::no_ud_cycles, "no-ud-cycles", {}, "(1 - sin z)/(1 - z)",
       "permutations with no up-down cycle"},
  }};
  return entries;
}

MPoly var(const std::vector<std::string>& ring, std::string_view name)
{
  return MPoly::variable(ring, name);
}

MPoly constant(const std::vector<std::string>& ring, long v) { return MPoly(ring, v); }

// Builds the series at order `order` (callers add margin for integrals).
PSeries build(SequenceId id, int order)
{
  const auto& ring = catalog_entry(id).markers;
  const RSeries one = RSeries::constant(order, Rational(1));
  const RSeries z = z_series(order);
  const RSeries sec = sec_series(order);
  const RSeries tan = tan_series(order);
  const RSeries sin = sin_series(order);
  const RSeries euler = sec + tan;
  const RSeries one_minus_sin = one - sin;
  const RSeries half_z = z.scaled(Rational(1, 2));
  auto up = [&](const RSeries& s) { return lift(s, ring); };

  switch (id) {
  case SequenceId::euler:
  case SequenceId::cud_odd_only:
    return up(euler);
  case SequenceId::cud:
    return up(reciprocal(one_minus_sin));
  case SequenceId::cud_cyclic:
    return up(integrate(euler).truncated(order));
  case SequenceId::cud_even_only:
    return up(sec);
  case SequenceId::exc_def_swap:
    return up(exp_series(order) * sec);
  case SequenceId::gcud_odd_only:
    return up(exp(tan));
  case SequenceId::k_euler_odd:
    return up(half_z * tan);
  case SequenceId::gcud_even_cyclic:
    return up(sec - one - half_z * tan - log(cos_series(order)));
  case SequenceId::gcud_even_only:
    return up(sec * exp(sec - one - half_z * tan));
  case SequenceId::gcud:
    return up(sec * exp(sec - one + (one - half_z) * tan));
  case SequenceId::cud_derangements:
    return up(rescale(exp_series(order), Rational(-1)) * reciprocal(one_minus_sin));
  case SequenceId::cud_fp_cycles: {
    const MPoly t = var(ring, "t");
    const MPoly x = var(ring, "x");
    const PSeries linear = up(z).scaled((x - constant(ring, 1)) * t);
    return exp(linear) * pow_marker(one_minus_sin, -t);
  }
  case SequenceId::cud_cycles:
    return pow_marker(one_minus_sin, -var(ring, "t"));
  case SequenceId::cud_odd_even:
    return pow_marker(euler, var(ring, "t_o")) * pow_marker(sec, var(ring, "t_e"));
  case SequenceId::ud_st:
    return pow_marker(euler, var(ring, "t"));
  case SequenceId::ud_lrm: {
    const MPoly t = var(ring, "t");
    const PSeries integral =
        integrate(pow_marker(sec, t + constant(ring, 1))).truncated(order).scaled(t);
    return integral + pow_marker(sec, t) - up(one);
  }
  case SequenceId::ud_extr:
    return integrate(pow_marker(one_minus_sin, -var(ring, "t"))).truncated(order);
  case SequenceId::gcud_fp_cycles: {
    const MPoly t = var(ring, "t");
    const MPoly x = var(ring, "x");
    const PSeries inner = up(z).scaled(x - constant(ring, 1)) +
                          up(sec - one + (one - half_z) * tan);
    return pow_marker(sec, t) * exp(inner.scaled(t));
  }
  case SequenceId::perm_ud_nud: {
    const MPoly v = var(ring, "v");
    const MPoly w = var(ring, "w");
    return pow_marker(one - z, -w) * pow_marker(one_minus_sin, w - v);
  }
  case SequenceId::avg_ud_cycles:
    return up(-log(one_minus_sin) * geometric_series(order));
  case SequenceId::no_ud_cycles:
    return up(one_minus_sin * geometric_series(order));
  }
  throw UnknownName("unhandled catalog entry");
}

} // namespace

std::span<const CatalogEntry> catalog_entries() { return table(); }

const CatalogEntry& catalog_entry(SequenceId id)
{
  for (const auto& e : table())
    if (e.id == id)
      return e;
  throw UnknownName("unknown sequence id");
}

SequenceId parse_sequence_id(std::string_view name)
{
  for (const auto& e : table())
    if (e.name == name)
      return e.id;
  throw UnknownName("unknown sequence: " + std::string(name));
}

PSeries catalog(SequenceId id, int n_max, int cap)
{
  if (n_max < 0)
    throw DomainError("series order must be nonnegative");
  if (n_max > cap)
    throw CapExceeded("series order " + std::to_string(n_max) + " exceeds cap " +
                      std::to_string(cap));
  return build(id, n_max);
}

std::vector<MPoly> catalog_polynomials(SequenceId id, int n_max, int cap)
{
  return egf_coefficients(catalog(id, n_max, cap));
}

std::vector<Integer> catalog_terms(SequenceId id, int n_max, int cap)
{
  if (!catalog_entry(id).markers.empty())
    throw DomainError("sequence '" + std::string(catalog_entry(id).name) +
                      "' is marked; request polynomials instead");
  std::vector<Integer> out;
  for (const auto& p : catalog_polynomials(id, n_max, cap)) {
    const Rational c = p.constant_term();
    if (c.get_den() != 1)
      throw DomainError("non-integer term in sequence '" +
                        std::string(catalog_entry(id).name) + "'");
    out.push_back(c.get_num());
  }
  return out;
}

} // namespace cudlab
