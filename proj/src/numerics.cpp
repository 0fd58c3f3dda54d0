#include "trapsusy/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

namespace trapsusy {

Grid::Grid(double r_min, double r_max, std::size_t points)
    : r_min_(r_min), r_max_(r_max), points_(points), spacing_(0.0) {
    if (!(r_min > 0.0))
        throw std::invalid_argument("Grid: r_min must be > 0");
    if (points < 3)
        throw std::invalid_argument("Grid: need at least 3 points");
    spacing_ = (r_max - r_min) / static_cast<double>(points - 1);
    if (!(spacing_ > 0.0))
        throw std::invalid_argument("Grid: r_max must exceed r_min");
}

std::vector<double> Grid::nodes() const {
    std::vector<double> r(points_);
    for (std::size_t i = 0; i < points_; ++i)
        r[i] = (*this)[i];
    r.back() = r_max_;
    return r;
}

double laguerre(int degree, double alpha, double z) {
    if (degree < 0)
        throw std::invalid_argument("laguerre: negative degree");
    if (!(alpha > -1.0))
        throw std::invalid_argument("laguerre: alpha must be > -1");
    if (degree == 0)
        return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - z;
    for (int k = 1; k < degree; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - z) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("log_gamma: argument must be > 0");
    return std::lgamma(x);
}

namespace {

// Kronrod 15-point abscissae (non-negative half) and weights; Gauss 7-point
// weights live on the odd Kronrod nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const RealFunction& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1)
            gauss += kWg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

double integrate(const RealFunction& f, double a, double b, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate: tol must be > 0");
    if (a == b)
        return 0.0;
    if (b < a)
        return -integrate(f, b, a, tol);

    constexpr std::size_t kMaxSegments = 20000;
    std::priority_queue<Segment> work;
    work.push(gauss_kronrod(f, a, b));
    double total = work.top().value;
    double error = work.top().error;
    std::size_t segments = 1;

    while (error > tol) {
        if (segments >= kMaxSegments)
            throw ConvergenceError("integrate: no convergence within " +
                                   std::to_string(kMaxSegments) + " segments");
        Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw ConvergenceError("integrate: interval collapsed before reaching tolerance");
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        ++segments;
        if (!std::isfinite(total))
            throw ConvergenceError("integrate: integrand is not finite");
    }

    // Re-sum to shed accumulated update rounding.
    total = 0.0;
    while (!work.empty()) {
        total += work.top().value;
        work.pop();
    }
    return total;
}

double second_derivative(const RealFunction& f, double r, double h) {
    return (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h);
}

double derivative5(const RealFunction& f, double r, double h) {
    return (f(r - 2 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2 * h)) / (12.0 * h);
}

double second_derivative5(const RealFunction& f, double r, double h) {
    return (-f(r - 2 * h) + 16.0 * f(r - h) - 30.0 * f(r) + 16.0 * f(r + h) - f(r + 2 * h)) /
           (12.0 * h * h);
}

// ---------------------------------------------------------------------------
// Symmetric tridiagonal eigensolver
// ---------------------------------------------------------------------------

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double gershgorin_norm(std::span<const double> d, std::span<const double> e) {
    double norm = 0.0;
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(d[i]);
        if (i > 0) row += std::abs(e[i - 1]);
        if (i + 1 < n) row += std::abs(e[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

std::size_t sturm_count_impl(std::span<const double> d, std::span<const double> e, double x,
                             double pivmin) {
    std::size_t count = 0;
    double q = d[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

// LU factorization with partial pivoting of (T - shift*I); U has two
// super-diagonals. Tiny pivots are replaced so the solve stays finite.
struct TridiagLU {
    std::vector<double> d, du, du2, dl;
    std::vector<char> swapped;

    TridiagLU(std::span<const double> diag, std::span<const double> off, double shift,
              double tiny) {
        const std::size_t n = diag.size();
        d.resize(n);
        du.assign(n, 0.0);
        du2.assign(n, 0.0);
        dl.assign(n, 0.0);
        swapped.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
        for (std::size_t i = 0; i + 1 < n; ++i) du[i] = dl[i] = off[i];

        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (std::abs(d[i]) < tiny) d[i] = tiny;
                const double fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                const double fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                const double temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = 1;
            }
        }
        if (std::abs(d[n - 1]) < tiny) d[n - 1] = tiny;
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = d.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!swapped[i]) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                const double temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if (n < 2) return;
        b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        for (std::size_t i = n - 2; i-- > 0;)
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
};

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace

std::size_t sturm_count(std::span<const double> diagonal, std::span<const double> off_diagonal,
                        double x) {
    if (diagonal.empty()) return 0;
    const double norm = gershgorin_norm(diagonal, off_diagonal);
    const double pivmin = std::max(std::numeric_limits<double>::min(), kEps * kEps * norm);
    return sturm_count_impl(diagonal, off_diagonal, x, pivmin);
}

TridiagEigen tridiag_eigen(std::span<const double> diagonal, std::span<const double> off_diagonal,
                           std::size_t k, bool want_vectors) {
    const std::size_t n = diagonal.size();
    if (n == 0)
        throw std::invalid_argument("tridiag_eigen: empty matrix");
    if (off_diagonal.size() + 1 != n)
        throw std::invalid_argument("tridiag_eigen: off-diagonal must have n-1 entries");
    if (k == 0 || k > n)
        throw std::invalid_argument("tridiag_eigen: k must be in [1, n]");

    const double norm = std::max(gershgorin_norm(diagonal, off_diagonal),
                                 std::numeric_limits<double>::min());
    const double pivmin = std::max(std::numeric_limits<double>::min(), kEps * kEps * norm);

    double lower = diagonal[0], upper = diagonal[0];
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(off_diagonal[i]);
        lower = std::min(lower, diagonal[i] - radius);
        upper = std::max(upper, diagonal[i] + radius);
    }
    const double pad = 2.0 * kEps * norm + pivmin;
    lower -= pad;
    upper += pad;

    TridiagEigen out;
    out.values.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        // Smallest x with count(x) >= j+1.
        double lo = (j > 0) ? std::max(lower, out.values[j - 1] - pad) : lower;
        double hi = upper;
        int iterations = 0;
        while (hi - lo > 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + pivmin) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (sturm_count_impl(diagonal, off_diagonal, mid, pivmin) >= j + 1)
                hi = mid;
            else
                lo = mid;
            if (++iterations > 400)
                throw ConvergenceError("tridiag_eigen: bisection did not converge");
        }
        out.values[j] = 0.5 * (lo + hi);
    }

    if (!want_vectors) return out;

    out.vectors.reserve(k);
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    const double cluster_gap = 1e-3 * norm;
    const double tiny = kEps * norm;
    std::size_t cluster_start = 0;

    for (std::size_t j = 0; j < k; ++j) {
        const double lambda = out.values[j];
        if (j > 0 && lambda - out.values[j - 1] > cluster_gap) cluster_start = j;

        TridiagLU lu(diagonal, off_diagonal, lambda, tiny);
        std::vector<double> x(n);
        for (double& v : x) v = uniform(rng);

        bool converged = false;
        for (int it = 0; it < 8 && !converged; ++it) {
            for (std::size_t c = cluster_start; c < j; ++c) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += x[i] * out.vectors[c][i];
                for (std::size_t i = 0; i < n; ++i) x[i] -= dot * out.vectors[c][i];
            }
            double scale = norm2(x);
            if (scale == 0.0)
                throw ConvergenceError("tridiag_eigen: inverse iteration collapsed");
            for (double& v : x) v /= scale;
            lu.solve(x);
            for (std::size_t c = cluster_start; c < j; ++c) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += x[i] * out.vectors[c][i];
                for (std::size_t i = 0; i < n; ++i) x[i] -= dot * out.vectors[c][i];
            }
            scale = norm2(x);
            for (double& v : x) v /= scale;

            if (it >= 1) {
                double res = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    double y = (diagonal[i] - lambda) * x[i];
                    if (i > 0) y += off_diagonal[i - 1] * x[i - 1];
                    if (i + 1 < n) y += off_diagonal[i] * x[i + 1];
                    res += y * y;
                }
                converged = std::sqrt(res) <= 1e3 * kEps * norm * std::sqrt(static_cast<double>(n));
            }
        }
        if (!converged)
            throw ConvergenceError("tridiag_eigen: inverse iteration did not converge for eigenvalue " +
                                   std::to_string(j));

        double peak = 0.0;
        for (double v : x) peak = std::max(peak, std::abs(v));
        for (double v : x) {
            if (std::abs(v) > 1e-8 * peak) {
                if (v < 0)
                    for (double& w : x) w = -w;
                break;
            }
        }
        out.vectors.push_back(std::move(x));
    }
    return out;
}

} // namespace trapsusy
