#ifndef CUDLAB_CATALOG_HPP
#define CUDLAB_CATALOG_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cudlab/mpoly.hpp"
#include "cudlab/series.hpp"

namespace cudlab {

enum class SequenceId {
  euler,
  cud,
  cud_cyclic,
  cud_even_only,
  cud_odd_only,
  exc_def_swap,
  gcud_odd_only,
  k_euler_odd,
  gcud_even_cyclic,
  gcud_even_only,
  gcud,
  cud_derangements,
  cud_fp_cycles,
  cud_cycles,
  cud_odd_even,
  ud_st,
  ud_lrm,
  ud_extr,
  gcud_fp_cycles,
  perm_ud_nud,
  avg_ud_cycles,
  no_ud_cycles,
};

struct CatalogEntry {
  SequenceId id;
  std::string_view name;
  /// Marker names in ring order; empty for plain number sequences.
  std::vector<std::string> markers;
  std::string_view formula;
  std::string_view counts;
};

/// Default truncation cap for catalog requests.
inline constexpr int default_series_cap = 24;

std::span<const CatalogEntry> catalog_entries();
const CatalogEntry& catalog_entry(SequenceId id);
/// Throws UnknownName.
SequenceId parse_sequence_id(std::string_view name);

/// Exact truncated EGF, order n_max, over the entry's marker ring.
/// Throws CapExceeded when n_max > cap.
PSeries catalog(SequenceId id, int n_max, int cap = default_series_cap);

/// n! * [z^n] for n = 0..n_max as polynomials in the entry's markers.
std::vector<MPoly> catalog_polynomials(SequenceId id, int n_max,
                                       int cap = default_series_cap);

/// Integer terms n! * [z^n] for unmarked entries. Throws DomainError for
/// marked entries or if a term is not an integer.
std::vector<Integer> catalog_terms(SequenceId id, int n_max, int cap = default_series_cap);

} // namespace cudlab

#endif // CUDLAB_CATALOG_HPP
