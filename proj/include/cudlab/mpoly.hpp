#ifndef CUDLAB_MPOLY_HPP
#define CUDLAB_MPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cudlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial over the rationals in an ordered list of named markers
/// (t, x, t_o, ...). Zero coefficients are never stored.
///
/// Arithmetic between polynomials requires identical marker lists and
/// throws DomainError otherwise.
class MPoly {
public:
  using Exponents = std::vector<unsigned>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> markers);
  MPoly(std::vector<std::string> markers, const Rational& constant);

  static MPoly variable(std::vector<std::string> markers, std::string_view name);

  const std::vector<std::string>& markers() const { return markers_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;
  /// Sets one coefficient; a zero value erases the term.
  void set_coefficient(const Exponents& e, const Rational& value);

  /// Highest exponent of marker `name` over all terms (0 for constants).
  unsigned degree_in(std::string_view name) const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const Rational& k);
  MPoly& operator/=(const Rational& k);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& k) { return a *= k; }
  friend MPoly operator*(const Rational& k, MPoly a) { return a *= k; }
  friend MPoly operator/(MPoly a, const Rational& k) { return a /= k; }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Replaces every marker by a polynomial in the ring `target`.
  /// Every marker of this polynomial must have an entry in `values`.
  MPoly substitute(const std::vector<std::string>& target,
                   const std::map<std::string, MPoly>& values) const;

  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Human-readable form, e.g. "t^2 + 3*x*t". Integers print without a
  /// denominator.
  std::string to_string() const;
  /// Monomial label such as "t_o^2*t_e" or "1".
  std::string monomial_label(const Exponents& e) const;

private:
  void require_same_ring(const MPoly& other) const;
  std::size_t index_of(std::string_view name) const;

  std::vector<std::string> markers_;
  std::map<Exponents, Rational> terms_;
};

} // namespace cudlab

#endif // CUDLAB_MPOLY_HPP
