#ifndef CUDLAB_MATCHINGS_HPP
#define CUDLAB_MATCHINGS_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cudlab/permutation.hpp"

namespace cudlab {

/// Unordered pair stored with first < second.
using Arc = std::pair<Entry, Entry>;

/// Two perfect matchings of [n]: red arcs are drawn above the line, blue
/// arcs below. Valid when both are perfect and the sets of opening
/// (left-end) vertices agree.
struct MatchingPair {
  int n = 0;
  std::vector<Arc> red;  // sorted
  std::vector<Arc> blue; // sorted

  /// Throws DomainError naming the broken invariant.
  void validate() const;
  bool valid() const;
  /// "red: 1-4 2-6 3-7 5-8 / blue: 1-7 2-4 3-6 5-8"
  std::string to_string() const;

  friend bool operator==(const MatchingPair&, const MatchingPair&) = default;
};

/// Builds a MatchingPair from arcs in any order; sorts them.
MatchingPair make_matching_pair(int n, std::vector<Arc> red, std::vector<Arc> blue);

/// Red arcs {i, p(i)} for p(i) > i, blue arcs for p(i) < i.
/// p must be a CUD permutation of [2m] with only even cycles.
MatchingPair to_matching_pair(const Permutation& p);
/// Openers go to their red partner, closers to their blue partner.
Permutation from_matching_pair(const MatchingPair& mp);

/// All valid pairs on [n], n even, by pairing perfect matchings directly.
/// Independent of the permutation side; sorted.
std::vector<MatchingPair> enumerate_matching_pairs(int n);

/// SVG 1.1 arc diagram: vertices 40 units apart, red semicircles above,
/// blue below. Deterministic.
std::string arc_diagram_svg(const Permutation& p);
/// Writes arc_diagram_svg(p) to path. Throws std::runtime_error on I/O failure.
void render_arc_diagram(const Permutation& p, const std::filesystem::path& path);

} // namespace cudlab

#endif // CUDLAB_MATCHINGS_HPP
