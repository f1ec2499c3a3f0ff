#ifndef CUDLAB_STATISTICS_HPP
#define CUDLAB_STATISTICS_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cudlab/permutation.hpp"

namespace cudlab {

/// All statistics of a permutation. Cycle statistics are taken on the
/// permutation's own ground set, word statistics on relative order.
struct StatVector {
  int c = 0;    ///< cycles
  int c_o = 0;  ///< odd cycles
  int c_e = 0;  ///< even cycles
  int fp = 0;   ///< fixed points
  int lrm = 0;  ///< left-to-right minima, position 1 included
  int st = 0;   ///< length of the min-max subsequence
  int extr = 0; ///< LR minima or maxima at positions >= 2
  int exc = 0;  ///< excedances, pi_i > a_i
  int ud = 0;   ///< up-down cycles
  int nud = 0;  ///< cycles that are not up-down

  friend auto operator<=>(const StatVector&, const StatVector&) = default;
};

enum class Stat { c, c_o, c_e, fp, lrm, st, extr, exc, ud, nud };

inline constexpr Stat all_stats[] = {Stat::c,   Stat::c_o,  Stat::c_e, Stat::fp,
                                     Stat::lrm, Stat::st,   Stat::extr, Stat::exc,
                                     Stat::ud,  Stat::nud};

Stat parse_stat(std::string_view name);
std::string_view stat_name(Stat s);
/// Comma-separated list, e.g. "lrm,st".
std::vector<Stat> parse_stat_list(std::string_view names);

int get(const StatVector& v, Stat s);

StatVector stats(const Permutation& p);

/// 0-based positions of left-to-right minima / maxima (position 0 included).
std::vector<std::size_t> lr_minima_positions(const Permutation& p);
std::vector<std::size_t> lr_maxima_positions(const Permutation& p);
/// 0-based positions >= 1 holding an LR minimum or LR maximum.
std::vector<std::size_t> extreme_positions(const Permutation& p);

int lrm(const Permutation& p);
int st(const Permutation& p);
int extr(const Permutation& p);
int exc(const Permutation& p);

enum class Extremum { min, max };

/// An infinite sequence over {min, max}: a finite prefix followed by a
/// tail repeated forever.
class MinMaxPattern {
public:
  /// Throws DomainError if tail is empty.
  MinMaxPattern(std::vector<Extremum> prefix, std::vector<Extremum> tail);

  /// min, max, min, max, ...  (gives st)
  static MinMaxPattern alternating();
  /// min, min, ...  (gives lrm)
  static MinMaxPattern all_min();

  /// Syntax: "min,max,..." where the trailing "..." repeats the whole word.
  /// Throws ParseError on anything else.
  static MinMaxPattern parse(std::string_view text);

  /// s_{j+1}, 0-based.
  Extremum at(std::size_t j) const;

  std::string to_string() const;

private:
  std::vector<Extremum> prefix_;
  std::vector<Extremum> tail_;
};

/// 0-based positions i_1 < ... < i_k of the m_s subsequence. The last
/// position is always size()-1; empty for the empty permutation.
std::vector<std::size_t> min_max_positions(const Permutation& p, const MinMaxPattern& s);
Word min_max_subsequence(const Permutation& p, const MinMaxPattern& s);
/// m_s(p).
int min_max_statistic(const Permutation& p, const MinMaxPattern& s);

} // namespace cudlab

#endif // CUDLAB_STATISTICS_HPP
