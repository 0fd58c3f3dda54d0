#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

/// Explicit finite series sum_m (-1)^m C(n+a, n-m) z^m / m!. The terms
/// alternate and cancel heavily for large z, so the sum runs in quad precision.
inline double laguerre_series(int n, double alpha, double x) {
    using quad = __float128;
    const quad a = alpha, z = x;
    quad sum = 0;
    for (int m = 0; m <= n; ++m) {
        quad binom = 1;
        for (int j = 1; j <= n - m; ++j) binom *= (a + m + j) / j;
        quad term = binom;
        for (int j = 1; j <= m; ++j) term *= z / j;
        sum += (m % 2 ? -term : term);
    }
    return static_cast<double>(sum);
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Walk every |N, L', M> with N at most 2s - L - 1.
inline std::uint64_t enumerate_core(int l, int s, int spin = 1) {
    std::uint64_t count = 0;
    for (int n = 0; n <= 2 * s - l - 1; ++n)
        for (int lp = n % 2; lp <= n; lp += 2)
            for (int m = -lp; m <= lp; ++m) count += spin;
    return count;
}

} // namespace oracle
