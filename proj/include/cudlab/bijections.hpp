#ifndef CUDLAB_BIJECTIONS_HPP
#define CUDLAB_BIJECTIONS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cudlab/permutation.hpp"
#include "cudlab/statistics.hpp"

namespace cudlab {

/// Finite word over {0,1}, paired with a permutation by ell_map.
class BitWord {
public:
  BitWord() = default;
  explicit BitWord(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// "10011". Throws ParseError on any other character.
  static BitWord parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t j) const { return bits_[j]; }
  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;

private:
  std::vector<bool> bits_;
};

// Up-down permutations of even length -> CUD with only even cycles.
// A cycle opens at every left-to-right minimum.
CycleDecomposition g_even(const Permutation& p);
Permutation g_even_inverse(const CycleDecomposition& c);

// Up-down permutations of A -> CUD permutations of A with only odd cycles.
CycleDecomposition f_odd(const Permutation& p);
Permutation f_odd_inverse(const CycleDecomposition& c);

/// UD_{n+1} -> CUD_n, combining g_even on the part before 1 with f_odd on
/// the switched part after it.
CycleDecomposition phi(const Permutation& p);
Permutation phi_inverse(const CycleDecomposition& c);

/// UD_{n+1} -> CUD_n, one cycle per extreme element.
CycleDecomposition jbij(const Permutation& p);
Permutation jbij_inverse(const CycleDecomposition& c);

/// Concatenates the standard-form cycles ordered by decreasing (or
/// increasing) first entry.
Permutation foata_word(const CycleDecomposition& c, bool descending = true);
/// Inverse of the descending Foata word: cut before every LR minimum.
CycleDecomposition from_foata_word(const Permutation& w);

/// Cyclic rotation sigma_{2i-1} ... sigma_{2k} sigma_1 ... sigma_{2i-2} of an
/// even-length up-down word starting with its minimum. 1 <= i <= k.
Permutation rotate_ud(const Permutation& p, int i);
/// Inverse of rotate_ud on up-down words of even length with last > first.
std::pair<Permutation, int> unrotate_ud(const Permutation& p);

/// Bijection S_n -> S_n taking the m_s subsequence of p to the
/// left-to-right minima of the image.
Permutation h_map(const Permutation& p, const MinMaxPattern& s = MinMaxPattern::alternating());

/// (p in S_{n-1}, s in {0,1}^lrm(p)) -> sigma in S_n with extr(sigma) = lrm(p).
Permutation ell_map(const Permutation& p, const BitWord& s);
std::pair<Permutation, BitWord> ell_inverse(const Permutation& q);

} // namespace cudlab

#endif // CUDLAB_BIJECTIONS_HPP
