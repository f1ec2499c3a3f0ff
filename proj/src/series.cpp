#include "cudlab/series.hpp"

namespace cudlab {

PSeries lift(const RSeries& a, const std::vector<std::string>& markers)
{
  std::vector<MPoly> out;
  for (const auto& c : a.coefficients())
    out.emplace_back(markers, c);
  return PSeries(std::move(out));
}

PSeries pow_marker(const RSeries& a, const MPoly& e)
{
  if (a[0] != 1)
    throw DomainError("marker power needs a base series with constant term 1");
  return exp(lift(log(a), e.markers()).scaled(e));
}

RSeries pow(const RSeries& a, const Rational& e)
{
  if (a[0] != 1)
    throw DomainError("rational power needs a base series with constant term 1");
  return exp(log(a).scaled(e));
}

PSeries substitute(const PSeries& a, const std::vector<std::string>& target,
                   const std::map<std::string, MPoly>& values)
{
  std::vector<MPoly> out;
  for (const auto& c : a.coefficients())
    out.push_back(c.substitute(target, values));
  return PSeries(std::move(out));
}

namespace {

// Coefficients sign * 1/k! for k = start, start+2, ..., alternating sign.
RSeries alternating_factorial_series(int order, int start)
{
  std::vector<Rational> c(static_cast<std::size_t>(order + 1), Rational(0));
  Integer fact = 1;
  int sign = 1;
  for (int k = 1; k <= order; ++k) {
    fact *= k;
    if (k >= start && (k - start) % 2 == 0) {
      c[static_cast<std::size_t>(k)] = Rational(sign, 1) / Rational(fact);
      sign = -sign;
    }
  }
  if (start == 0)
    c[0] = 1;
  return RSeries(std::move(c));
}

} // namespace

RSeries sin_series(int order) { return alternating_factorial_series(order, 1); }

RSeries cos_series(int order)
{
  std::vector<Rational> c(static_cast<std::size_t>(order + 1), Rational(0));
  Integer fact = 1;
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    fact *= k;
    if (k % 2 == 0)
      c[static_cast<std::size_t>(k)] = Rational((k / 2) % 2 ? -1 : 1, 1) / Rational(fact);
  }
  return RSeries(std::move(c));
}

RSeries sec_series(int order) { return reciprocal(cos_series(order)); }
RSeries tan_series(int order) { return sin_series(order) * sec_series(order); }
RSeries euler_series(int order) { return sec_series(order) + tan_series(order); }

RSeries exp_series(int order)
{
  std::vector<Rational> c;
  Integer fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k)
      fact *= k;
    c.push_back(Rational(1) / Rational(fact));
  }
  return RSeries(std::move(c));
}

RSeries geometric_series(int order)
{
  return RSeries(std::vector<Rational>(static_cast<std::size_t>(order + 1), Rational(1)));
}

RSeries z_series(int order) { return RSeries::monomial(order, 1, Rational(1)); }

} // namespace cudlab
