#pragma once

#include <vector>

#include "nodallab/errors.hpp"

namespace nodallab {

/// Documented desk-scale cap for zero computation; recurrences are stable well past it.
inline constexpr int kMaxLegendreDegree = 500;

/// The n simple roots of the degree-n Legendre polynomial, ascending in (-1, 1).
struct LegendreZeros {
    int degree = 0;
    std::vector<double> zeros;
};

/// P_n(x) by the three-term upward recurrence. Requires |x| <= 1.
double legendre_eval(int n, double x);

/// dP_n/dx via (1-x^2) P_n' = n (P_{n-1} - x P_n). Requires |x| < 1.
double legendre_deriv(int n, double x);

/// All n roots from Chebyshev-angle guesses, Newton-refined in extended precision so
/// each stored double is the correctly rounded root: |P_n(root)| < 1e-13, except where
/// that is not representable (edge roots past n ~ 150, conditioning floor |P_n'| * ulp).
LegendreZeros legendre_zeros(int n);

/// Associated Legendre P_n^k(x) without the Condon-Shortley phase (P_n^k >= 0 just
/// below x = 1). Requires 0 <= k <= n and |x| <= 1.
double assoc_legendre_eval(int n, int k, double x);

/// Factorization P_n^k(x) = (1-x^2)^{k/2} * p(x) with p polynomial. Returns p and p',
/// which stay finite at |x| = 1; this is the stable engine behind gradient evaluation.
struct AssocLegendreParts {
    double reduced = 0.0;
    double reduced_deriv = 0.0;
};
AssocLegendreParts assoc_legendre_parts(int n, int k, double x);

} // namespace nodallab
