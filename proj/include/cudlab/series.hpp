#ifndef CUDLAB_SERIES_HPP
#define CUDLAB_SERIES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cudlab/errors.hpp"
#include "cudlab/mpoly.hpp"

namespace cudlab {

// Ring hooks used by Series<C>. Rational and MPoly are the two rings.

inline Rational zero_like(const Rational&) { return 0; }
inline MPoly zero_like(const MPoly& c) { return MPoly(c.markers()); }
inline Rational one_like(const Rational&) { return 1; }
inline MPoly one_like(const MPoly& c) { return MPoly(c.markers(), 1); }
inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const MPoly& c) { return c.is_zero(); }
inline bool same_ring(const Rational&, const Rational&) { return true; }
inline bool same_ring(const MPoly& a, const MPoly& b) { return a.markers() == b.markers(); }

inline Rational unit_inverse(const Rational& c)
{
  if (c == 0)
    throw DomainError("constant term is not invertible");
  return 1 / c;
}

inline MPoly unit_inverse(const MPoly& c)
{
  if (!c.is_constant() || c.is_zero())
    throw DomainError("constant term is not invertible");
  return MPoly(c.markers(), 1 / c.constant_term());
}

inline std::string coeff_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_string(const MPoly& c) { return c.to_string(); }

/// Truncated power series sum_{k<=N} c_k z^k with exact coefficients.
/// Coefficients are ordinary; EGF numbers are k! * c_k.
template <class C>
class Series {
public:
  /// Throws DomainError if `coeffs` is empty or mixes rings.
  explicit Series(std::vector<C> coeffs) : coeffs_(std::move(coeffs))
  {
    if (coeffs_.empty())
      throw DomainError("series needs at least one coefficient");
    for (const auto& c : coeffs_)
      if (!same_ring(c, coeffs_.front()))
        throw DomainError("series coefficients are not in one ring");
  }

  static Series zero(int order, const C& like)
  {
    return Series(std::vector<C>(static_cast<std::size_t>(order + 1), zero_like(like)));
  }

  static Series constant(int order, const C& value)
  {
    Series s = zero(order, value);
    s.coeffs_[0] = value;
    return s;
  }

  /// value * z^k, truncated.
  static Series monomial(int order, int k, const C& value)
  {
    Series s = zero(order, value);
    if (k <= order)
      s.coeffs_[static_cast<std::size_t>(k)] = value;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<C>& coefficients() const { return coeffs_; }
  const C& like() const { return coeffs_.front(); }

  Series truncated(int order) const
  {
    if (order > this->order())
      throw DomainError("cannot extend a truncated series from order " +
                        std::to_string(this->order()) + " to " + std::to_string(order));
    return Series(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  Series& operator+=(const Series& rhs)
  {
    require_compatible(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }

  Series& operator-=(const Series& rhs)
  {
    require_compatible(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] -= rhs.coeffs_[k];
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  Series operator-() const
  {
    Series out = *this;
    for (auto& c : out.coeffs_)
      c = -c;
    return out;
  }

  /// Cauchy product truncated at the common order.
  friend Series operator*(const Series& a, const Series& b)
  {
    a.require_compatible(b);
    Series out = zero(a.order(), a.like());
    const std::size_t n = a.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(a.coeffs_[i]))
        continue;
      for (std::size_t j = 0; i + j < n; ++j)
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  Series& operator*=(const Series& rhs) { return *this = *this * rhs; }

  /// Multiplies every coefficient by k.
  Series scaled(const C& k) const
  {
    Series out = *this;
    for (auto& c : out.coeffs_)
      c = c * k;
    return out;
  }

  Series scaled(const Rational& k) const
    requires(!std::is_same_v<C, Rational>)
  {
    Series out = *this;
    for (auto& c : out.coeffs_)
      c *= k;
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
  void require_compatible(const Series& rhs) const
  {
    if (order() != rhs.order())
      throw DomainError("series order mismatch: " + std::to_string(order()) + " vs " +
                        std::to_string(rhs.order()));
    if (!same_ring(like(), rhs.like()))
      throw DomainError("series coefficient ring mismatch");
  }

  std::vector<C> coeffs_;
};

using RSeries = Series<Rational>;
using PSeries = Series<MPoly>;

template <class C>
Series<C> reciprocal(const Series<C>& a)
{
  const C inv0 = unit_inverse(a[0]);
  std::vector<C> b(a.coefficients().size(), zero_like(a.like()));
  b[0] = inv0;
  for (std::size_t n = 1; n < b.size(); ++n) {
    C acc = zero_like(a.like());
    for (std::size_t k = 1; k <= n; ++k)
      if (!is_zero(a[k]))
        acc += a[k] * b[n - k];
    b[n] = -(acc * inv0);
  }
  return Series<C>(std::move(b));
}

template <class C>
Series<C> divide(const Series<C>& a, const Series<C>& b)
{
  return a * reciprocal(b);
}

/// Derivative; the result has order one less (order 0 stays 0 with a zero
/// coefficient).
template <class C>
Series<C> differentiate(const Series<C>& a)
{
  if (a.order() == 0)
    return Series<C>::zero(0, a.like());
  std::vector<C> out;
  for (std::size_t k = 1; k < a.coefficients().size(); ++k)
    out.push_back(a[k] * Rational(static_cast<long>(k)));
  return Series<C>(std::move(out));
}

/// Antiderivative with zero constant term; the result has order one more.
template <class C>
Series<C> integrate(const Series<C>& a)
{
  std::vector<C> out{zero_like(a.like())};
  for (std::size_t k = 0; k < a.coefficients().size(); ++k)
    out.push_back(a[k] / Rational(static_cast<long>(k + 1)));
  return Series<C>(std::move(out));
}

/// exp(a) for a with zero constant term, via n b_n = sum k a_k b_{n-k}.
template <class C>
Series<C> exp(const Series<C>& a)
{
  if (!is_zero(a[0]))
    throw DomainError("exp needs a series with zero constant term");
  std::vector<C> b(a.coefficients().size(), zero_like(a.like()));
  b[0] = one_like(a.like());
  for (std::size_t n = 1; n < b.size(); ++n) {
    C acc = zero_like(a.like());
    for (std::size_t k = 1; k <= n; ++k)
      if (!is_zero(a[k]))
        acc += a[k] * b[n - k] * Rational(static_cast<long>(k));
    b[n] = acc / Rational(static_cast<long>(n));
  }
  return Series<C>(std::move(b));
}

/// log(a) for a with constant term 1, via n b_n = n a_n - sum k b_k a_{n-k}.
template <class C>
Series<C> log(const Series<C>& a)
{
  if (!(a[0] == one_like(a.like())))
    throw DomainError("log needs a series with constant term 1");
  std::vector<C> b(a.coefficients().size(), zero_like(a.like()));
  for (std::size_t n = 1; n < b.size(); ++n) {
    C acc = a[n] * Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k)
      if (!is_zero(b[k]))
        acc -= b[k] * a[n - k] * Rational(static_cast<long>(k));
    b[n] = acc / Rational(static_cast<long>(n));
  }
  return Series<C>(std::move(b));
}

/// Substitutes z -> lambda z, i.e. c_k -> lambda^k c_k.
template <class C>
Series<C> rescale(const Series<C>& a, const Rational& lambda)
{
  std::vector<C> out;
  Rational power = 1;
  for (const auto& c : a.coefficients()) {
    out.push_back(c * power);
    power *= lambda;
  }
  return Series<C>(std::move(out));
}

/// Multiplies by z (shifting coefficients up), keeping the order.
template <class C>
Series<C> times_z(const Series<C>& a)
{
  std::vector<C> out{zero_like(a.like())};
  out.insert(out.end(), a.coefficients().begin(), a.coefficients().end() - 1);
  return Series<C>(std::move(out));
}

/// Embeds a rational series into the polynomial ring with the given markers.
PSeries lift(const RSeries& a, const std::vector<std::string>& markers);

/// a^e = exp(e * log a) with a polynomial exponent. a must start with 1.
PSeries pow_marker(const RSeries& a, const MPoly& e);

/// Rational exponent version of pow_marker.
RSeries pow(const RSeries& a, const Rational& e);

/// Applies MPoly::substitute to every coefficient.
PSeries substitute(const PSeries& a, const std::vector<std::string>& target,
                   const std::map<std::string, MPoly>& values);

/// k! * c_k for k = 0..order.
template <class C>
std::vector<C> egf_coefficients(const Series<C>& a)
{
  std::vector<C> out;
  Rational fact = 1;
  for (std::size_t k = 0; k < a.coefficients().size(); ++k) {
    if (k)
      fact *= static_cast<long>(k);
    out.push_back(a[k] * fact);
  }
  return out;
}

// Elementary series built from factorial formulas, all truncated at `order`.
RSeries sin_series(int order);
RSeries cos_series(int order);
RSeries sec_series(int order);
RSeries tan_series(int order);
/// sec z + tan z.
RSeries euler_series(int order);
RSeries exp_series(int order);
/// 1 / (1 - z).
RSeries geometric_series(int order);
/// The series z.
RSeries z_series(int order);

} // namespace cudlab

#endif // CUDLAB_SERIES_HPP
