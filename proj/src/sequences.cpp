#include "cudlab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cudlab/catalog.hpp"
#include "cudlab/errors.hpp"

namespace cudlab {

Integer factorial(int n)
{
  Integer f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

std::vector<Integer> euler_numbers(int n_max)
{
  // Entringer numbers: e(n,0) = 0 for n > 0, e(n,k) = e(n,k-1) + e(n-1,n-k);
  // E_n = e(n,n).
  std::vector<Integer> out{1};
  std::vector<Integer> prev{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(n + 1));
    row[0] = 0;
    for (int k = 1; k <= n; ++k)
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(n - k)];
    out.push_back(row.back());
    prev = std::move(row);
  }
  return out;
}

std::vector<Integer> euler_numbers_from_series(int n_max)
{
  std::vector<Integer> out;
  for (const auto& c : egf_coefficients(euler_series(n_max)))
    out.push_back(c.get_num());
  return out;
}

Integer stirling_c(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  return stirling_row(n)[static_cast<std::size_t>(k)];
}

std::vector<Integer> stirling_row(int n)
{
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m + 1), 0);
    for (int k = 1; k <= m; ++k) {
      auto ku = static_cast<std::size_t>(k);
      next[ku] = row[ku - 1];
      if (ku < row.size())
        next[ku] += (m - 1) * row[ku];
    }
    row = std::move(next);
  }
  return row;
}

MPoly exc_polynomial(int n)
{
  const auto joint = catalog_polynomials(SequenceId::cud_odd_even, n, std::max(n, 0));
  const std::vector<std::string> ring{"t"};
  MPoly out(ring);
  for (const auto& [e, count] : joint[static_cast<std::size_t>(n)].terms()) {
    const int odd_cycles = static_cast<int>(e[0]);
    if ((n - odd_cycles) % 2 != 0 || odd_cycles > n)
      throw std::logic_error("odd-cycle count has the wrong parity for n");
    MPoly::Exponents ex{static_cast<unsigned>((n - odd_cycles) / 2)};
    out.set_coefficient(ex, out.coefficient(ex) + count);
  }
  return out;
}

RSeries exc_closed_form_series(const Rational& sqrt_t, int order)
{
  if (sqrt_t <= 0)
    throw DomainError("square root of t must be positive");
  const RSeries base = rescale(euler_series(order), sqrt_t);
  return pow(base, 1 / sqrt_t) * reciprocal(rescale(cos_series(order), sqrt_t));
}

double exc_closed_form_value(double t, double z)
{
  const double r = std::sqrt(t);
  const double u = z * r;
  return std::pow(1.0 / std::cos(u) + std::tan(u), 1.0 / r) / std::cos(u);
}

RSeries secant_cf_convergent(int depth, int n_max)
{
  if (depth < 1)
    throw DomainError("continued fraction depth must be at least 1");
  const RSeries one = RSeries::constant(n_max, Rational(1));
  const RSeries z = z_series(n_max);
  RSeries level = one - z.scaled(Rational(depth * depth));
  for (int j = depth - 1; j >= 1; --j)
    level = one - z.scaled(Rational(j * j)) * reciprocal(level);
  return reciprocal(level);
}

int secant_cf_agreement(int depth)
{
  const int order = 2 * depth + 4;
  const auto euler = euler_numbers(2 * order);
  const RSeries conv = secant_cf_convergent(depth, order);
  int m = -1;
  while (m + 1 <= order && conv[static_cast<std::size_t>(m + 1)] ==
                               Rational(euler[static_cast<std::size_t>(2 * (m + 1))]))
    ++m;
  return m;
}

Rational expected_ud_cycles(int n)
{
  if (n < 1)
    throw DomainError("expected up-down cycles needs n >= 1");
  const auto euler = euler_numbers(n - 1);
  Rational sum = 0;
  for (int k = 1; k <= n; ++k)
    sum += Rational(euler[static_cast<std::size_t>(k - 1)]) / Rational(factorial(k));
  return sum;
}

double expected_ud_cycles_limit() { return -std::log(1.0 - std::sin(1.0)); }

Integer no_ud_cycles_count(int n)
{
  if (n < 1)
    throw DomainError("r_n needs n >= 1");
  const RSeries s = (RSeries::constant(n, Rational(1)) - sin_series(n)) * geometric_series(n);
  const Rational v = s[static_cast<std::size_t>(n)] * Rational(factorial(n));
  return v.get_num();
}

Rational no_ud_cycles_ratio_formula(int n)
{
  if (n < 1)
    throw DomainError("r_n needs n >= 1");
  const int m = (n + 1) / 2;
  Rational sum = 0;
  for (int i = 2; i <= m; ++i)
    sum += Rational(i % 2 ? -1 : 1) / Rational(factorial(2 * i - 1));
  return sum;
}

double no_ud_cycles_limit() { return 1.0 - std::sin(1.0); }

} // namespace cudlab
