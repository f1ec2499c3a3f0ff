#ifndef CUDLAB_PERMUTATION_HPP
#define CUDLAB_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cudlab {

using Entry = int;
using Word = std::vector<Entry>;
using Cycle = std::vector<Entry>;

/// A permutation of a finite set A = {a_1 < ... < a_n} of positive integers,
/// stored in one-line notation: a_i maps to word()[i-1].
///
/// The ground set is implied by the entries, so a word such as "5 8 2 7"
/// is a permutation of {2,5,7,8}. The empty permutation is legal.
class Permutation {
public:
  Permutation() = default;

  /// Throws ParseError if an entry repeats or is not positive.
  explicit Permutation(Word word);

  static Permutation identity(int n);

  std::span<const Entry> word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  Entry operator[](std::size_t i) const { return word_[i]; }

  /// Sorted ground set a_1 < ... < a_n.
  Word ground() const;

  /// True when the ground set is exactly {1, ..., n}.
  bool on_interval() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  Word word_;
};

/// Cycles in standard form (smallest element first), sorted by increasing
/// first entry. Construction normalizes any input into that shape.
class CycleDecomposition {
public:
  CycleDecomposition() = default;

  /// Throws ParseError on an empty cycle, a repeated element, or a
  /// non-positive element.
  explicit CycleDecomposition(std::vector<Cycle> cycles);

  const std::vector<Cycle>& cycles() const { return cycles_; }
  std::size_t cycle_count() const { return cycles_.size(); }
  /// Number of elements moved or fixed, i.e. |A|.
  std::size_t degree() const;
  bool empty() const { return cycles_.empty(); }
  Word ground() const;

  friend bool operator==(const CycleDecomposition&,
                         const CycleDecomposition&) = default;
  friend auto operator<=>(const CycleDecomposition&,
                          const CycleDecomposition&) = default;

private:
  std::vector<Cycle> cycles_;
};

CycleDecomposition to_cycles(const Permutation& p);

/// Inverse of to_cycles; the ground set is the union of the cycles.
Permutation from_cycles(const CycleDecomposition& c);

/// As above but requires the cycles to cover exactly `ground`.
Permutation from_cycles(const CycleDecomposition& c,
                        std::span<const Entry> ground);

/// Replaces each a_i by a_{n+1-i} (the "switch"). Works on any word of
/// distinct values, relative to that word's own value set.
Word switched(std::span<const Entry> word);
Permutation switched(const Permutation& p);

/// Switches word[first, last) in place, relative to the values it holds.
void switch_range(Word& word, std::size_t first, std::size_t last);

bool is_up_down(std::span<const Entry> word);
bool is_down_up(std::span<const Entry> word);
bool is_alternating(std::span<const Entry> word);

/// Standard form of the cycle is up-down. Length-1 cycles qualify.
bool is_up_down_cycle(std::span<const Entry> cycle);
/// Some rotation of the cycle is up-down.
bool is_generalized_up_down_cycle(std::span<const Entry> cycle);

enum class Family {
  all,
  ud,
  down_up,
  cud,
  cud_even_only,
  cud_odd_only,
  cud_derangement,
  gcud,
  gcud_odd_only,
  gcud_even_only,
  cud_cyclic,
  gcud_cyclic,
  ud_last_gt_first,
};

inline constexpr Family all_families[] = {
    Family::all,           Family::ud,
    Family::down_up,       Family::cud,
    Family::cud_even_only, Family::cud_odd_only,
    Family::cud_derangement, Family::gcud,
    Family::gcud_odd_only, Family::gcud_even_only,
    Family::cud_cyclic,    Family::gcud_cyclic,
    Family::ud_last_gt_first,
};

/// Accepts "cud-even-only", "CUD_EVEN_ONLY" and similar spellings.
/// Throws UnknownName otherwise.
Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Families defined through cycle structure need a permutation of [n].
bool needs_interval(Family f);

/// Throws DomainError when the family needs [n] and p is on another set.
bool is_member(const Permutation& p, Family f);

/// "2 5 1 7 3 6 4". Empty string gives the empty permutation.
Permutation parse_one_line(std::string_view text);
/// "(1,2,5,3)(4,7)(6)"; "()" or "" is the empty decomposition.
CycleDecomposition parse_cycles(std::string_view text);
/// Cycle notation when the text starts with '(' and one-line otherwise.
Permutation parse_permutation(std::string_view text);

std::string to_string(const Permutation& p);
std::string to_string(const CycleDecomposition& c);

std::ostream& operator<<(std::ostream& os, const Permutation& p);
std::ostream& operator<<(std::ostream& os, const CycleDecomposition& c);

} // namespace cudlab

#endif // CUDLAB_PERMUTATION_HPP
