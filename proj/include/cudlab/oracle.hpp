#ifndef CUDLAB_ORACLE_HPP
#define CUDLAB_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cudlab/mpoly.hpp"
#include "cudlab/permutation.hpp"
#include "cudlab/statistics.hpp"

namespace cudlab {

/// Hard caps on n for brute-force enumeration.
struct EnumerationCaps {
  int general = 9;  ///< families enumerated by filtering S_n
  int up_down = 11; ///< ud, down-up, ud-last-gt-first (built directly)

  /// Applies CUDLAB_CAP from the environment to both caps, if set.
  static EnumerationCaps from_environment();
  static EnumerationCaps from_environment(EnumerationCaps base);
  int for_family(Family f) const;
};

/// Calls `visit` on every member of the family in S_n, in lexicographic
/// order of one-line notation. Throws CapExceeded above the cap.
void for_each_member(Family f, int n, const std::function<void(const Permutation&)>& visit,
                     const EnumerationCaps& caps = {});
std::vector<Permutation> enumerate(Family f, int n, const EnumerationCaps& caps = {});

/// Filters all of S_n with is_member. Independent of the direct builders.
std::vector<Permutation> enumerate_by_filter(Family f, int n, const EnumerationCaps& caps = {});
/// Up-down (or down-up) words of [n] by backtracking, lexicographic.
std::vector<Permutation> enumerate_up_down_direct(int n, bool down_up = false);
/// CUD permutations of [n] assembled cycle by cycle: the cycle through the
/// smallest unused element is chosen as an up-down arrangement of a subset.
/// Sorted lexicographically.
std::vector<Permutation> enumerate_cud_direct(int n);

/// Permutations of [n] (fixed points allowed) in which every excedance maps
/// to a deficiency and every deficiency to an excedance.
bool is_exc_def_swap(const Permutation& p);

/// Joint distribution of a list of statistics over a family.
struct DistributionTable {
  Family family = Family::all;
  int n = 0;
  std::vector<Stat> stats;
  std::map<std::vector<int>, std::uint64_t> rows;

  std::uint64_t total() const;
  /// Counts by value of stats[index].
  std::map<int, std::uint64_t> marginal(std::size_t index) const;
  /// Adds another table over the same family, n and statistics.
  void merge(const DistributionTable& other);

  /// Generating polynomial: stats[i] is the exponent of markers[i].
  MPoly polynomial(const std::vector<std::string>& markers) const;

  /// Stat columns then count, with a header line.
  std::string to_csv() const;
  std::string to_json() const;
  std::string to_text() const;
};

DistributionTable distribution(Family f, int n, const std::vector<Stat>& stats,
                               const EnumerationCaps& caps = {});

/// Same as distribution() but for any predicate over S_n.
DistributionTable distribution_where(const std::function<bool(const Permutation&)>& keep, int n,
                                     const std::vector<Stat>& stats);

/// One row of a verification report.
struct CheckResult {
  std::string check;
  int n = 0;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// Name of the first failing check, if any.
  std::optional<std::string> first_failure() const;
  std::size_t distinct_checks() const;
  std::string to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  int n_cap = 7;
  /// Series identities are checked at this truncation order.
  int series_order = 20;
  /// Replaces the Euler table the checks compare against (fault injection).
  std::optional<std::vector<Integer>> euler_override;
};

/// Runs every identity and bijection property up to n_cap (at most 9).
/// Throws CapExceeded above 9.
VerifyReport verify_all(const VerifyOptions& options);

} // namespace cudlab

#endif // CUDLAB_ORACLE_HPP
