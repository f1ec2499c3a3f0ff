#ifndef CUDLAB_SEQUENCES_HPP
#define CUDLAB_SEQUENCES_HPP

#include <vector>

#include "cudlab/mpoly.hpp"
#include "cudlab/series.hpp"

namespace cudlab {

Integer factorial(int n);

/// E_0..E_{n_max} from the Seidel-Entringer (boustrophedon) triangle.
std::vector<Integer> euler_numbers(int n_max);
/// E_0..E_{n_max} as n! [z^n](sec z + tan z). Independent of the triangle.
std::vector<Integer> euler_numbers_from_series(int n_max);

/// Signless Stirling numbers of the first kind; zero when k > n or k < 0.
Integer stirling_c(int n, int k);
/// c(n, 0..n).
std::vector<Integer> stirling_row(int n);

/// Sum over CUD_n of t^exc, read off the odd-cycle marker of the
/// (c_o, c_e) generating function using c_o + 2 exc = n.
MPoly exc_polynomial(int n);

/// Series coefficients of the excedance EGF closed form at a rational
/// square root r = sqrt(t):  (sec(rz) + tan(rz))^(1/r) / cos(rz).
/// The k! * coefficient at z^k is the excedance polynomial at t = r^2.
RSeries exc_closed_form_series(const Rational& sqrt_t, int order);
/// Floating-point value of the same closed form at (t, z).
double exc_closed_form_value(double t, double z);

/// Ordinary series of 1/(1 - 1^2 z/(1 - 2^2 z/(... (1 - d^2 z)))).
RSeries secant_cf_convergent(int depth, int n_max);
/// Largest m such that the depth-d convergent matches E_0, E_2, ..., E_{2m}
/// in its first m+1 coefficients (measured, not assumed).
int secant_cf_agreement(int depth);

/// E_0/1! + E_1/2! + ... + E_{n-1}/n!.
Rational expected_ud_cycles(int n);
/// -ln(1 - sin 1).
double expected_ud_cycles_limit();

/// r_n = n! [z^n] (1 - sin z)/(1 - z): permutations of [n] with no
/// up-down cycle.
Integer no_ud_cycles_count(int n);
/// 1/3! - 1/5! + ... + (-1)^m/(2m-1)! with n in {2m-1, 2m}; empty sum for m = 1.
Rational no_ud_cycles_ratio_formula(int n);
/// 1 - sin 1.
double no_ud_cycles_limit();

} // namespace cudlab

#endif // CUDLAB_SEQUENCES_HPP
