#include "nodallab/legendre.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <string>

#include "nodallab/geometry.hpp"

namespace nodallab {

namespace {

void check_degree(int n) {
    if (n < 0) throw DomainError("legendre: negative degree");
}

// P_n and P_{n-1} in one pass.
std::pair<double, double> legendre_pair(int n, double x) {
    double pm1 = 0.0, p = 1.0; // P_{-1} (unused), P_0
    for (int i = 0; i < n; ++i) {
        const double next = ((2.0 * i + 1.0) * x * p - i * pm1) / (i + 1.0);
        pm1 = p;
        p = next;
    }
    return {p, pm1};
}

std::pair<long double, long double> legendre_pair_l(int n, long double x) {
    long double pm1 = 0.0L, p = 1.0L;
    for (int i = 0; i < n; ++i) {
        const long double next = ((2.0L * i + 1.0L) * x * p - i * pm1) / (i + 1.0L);
        pm1 = p;
        p = next;
    }
    return {p, pm1};
}

} // namespace

double legendre_eval(int n, double x) {
    check_degree(n);
    if (x < -1.0 || x > 1.0) throw DomainError("legendre_eval: |x| > 1");
    return legendre_pair(n, x).first;
}

double legendre_deriv(int n, double x) {
    check_degree(n);
    if (std::abs(x) >= 1.0)
        throw DomainError("legendre_deriv: identity degenerates at |x| = 1");
    if (n == 0) return 0.0;
    const auto [p, pm1] = legendre_pair(n, x);
    return n * (pm1 - x * p) / (1.0 - x * x);
}

LegendreZeros legendre_zeros(int n) {
    if (n < 1) throw DomainError("legendre_zeros: degree must be >= 1");
    if (n > kMaxLegendreDegree)
        throw DomainError("legendre_zeros: degree above documented cap " +
                          std::to_string(kMaxLegendreDegree));

    // Chebyshev-angle guess for the i-th root (descending in x), i = 1..n.
    const auto guess = [n](int i) { return std::cos(kPi * (4.0 * i - 1.0) / (4.0 * n + 2.0)); };

    LegendreZeros out;
    out.degree = n;
    out.zeros.resize(n);

    for (int i = 1; i <= n; ++i) {
        // Newton in extended precision so the stored double is the correctly rounded
        // root; brackets from the midpoints toward the adjacent guesses.
        long double x = guess(i);
        long double hi = (i == 1) ? 1.0L : 0.5L * (guess(i - 1) + guess(i));
        long double lo = (i == n) ? -1.0L : 0.5L * (guess(i) + guess(i + 1));

        bool converged = false;
        for (int iter = 0; iter < 40; ++iter) {
            const auto [p, pm1] = legendre_pair_l(n, x);
            const long double dp = n * (pm1 - x * p) / (1.0L - x * x);
            long double step = p / dp;
            long double next = x - step;
            if (next <= lo || next >= hi) { // Newton left the bracket: bisect
                const long double plo = legendre_pair_l(n, lo).first;
                if ((plo > 0.0L) == (p > 0.0L)) lo = x; else hi = x;
                next = 0.5L * (lo + hi);
                step = next - x;
            }
            x = next;
            if (std::abs(static_cast<double>(step)) < 1e-18) {
                converged = true;
                break;
            }
        }
        const double xd = static_cast<double>(x);
        const double resid = std::abs(legendre_pair(n, xd).first);
        // 1e-13 is representable up to n ~ 150; past that the edge roots sit on the
        // conditioning floor |P'| * ulp(x), so certify against both.
        const double cond_floor =
            4.0 * (std::abs(legendre_deriv(n, xd)) * std::abs(xd) + n) * 2.3e-16;
        if (!converged || (resid >= 1e-13 && resid >= cond_floor)) {
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "legendre_zeros: root %d of degree %d residual %.3e above bound", i, n,
                          resid);
            throw ConvergenceError(msg);
        }
        out.zeros[n - i] = xd; // store ascending
    }
    std::sort(out.zeros.begin(), out.zeros.end());
    return out;
}

AssocLegendreParts assoc_legendre_parts(int n, int k, double x) {
    check_degree(n);
    if (k < 0 || k > n) throw DomainError("assoc_legendre: order k outside 0..n");
    if (x < -1.0 || x > 1.0) throw DomainError("assoc_legendre: |x| > 1");

    // p_k^k = (2k-1)!!, p' = 0.
    double p = 1.0;
    for (int j = 1; j <= k; ++j) p *= 2.0 * j - 1.0;
    double dp = 0.0;
    if (n == k) return {p, dp};

    // p_{k+1}^k = (2k+1) x p_k^k.
    double p_prev = p, dp_prev = dp;
    p = (2.0 * k + 1.0) * x * p_prev;
    dp = (2.0 * k + 1.0) * p_prev;

    for (int m = k + 2; m <= n; ++m) {
        const double a = 2.0 * m - 1.0, b = m + k - 1.0, c = m - k;
        const double pn = (a * x * p - b * p_prev) / c;
        const double dpn = (a * (p + x * dp) - b * dp_prev) / c;
        p_prev = p;
        dp_prev = dp;
        p = pn;
        dp = dpn;
    }
    return {p, dp};
}

double assoc_legendre_eval(int n, int k, double x) {
    const auto parts = assoc_legendre_parts(n, k, x);
    if (k == 0) return parts.reduced;
    const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
    double sk = 1.0;
    for (int j = 0; j < k; ++j) sk *= s;
    return sk * parts.reduced;
}

} // namespace nodallab
