#include "hillgap/spectral_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "hillgap/errors.hpp"

namespace hillgap {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double collapse_rel = 1e-10;   // gaps below this (relative) snap to zero
constexpr double interlace_rel = 1e-9;   // tolerated relative eigenvalue overlap

void check_matrix_args(const FourierSequence& q, int M) {
    if (!q.hermitian())
        throw std::invalid_argument("spectral_solver: potential must be hermitian");
    if (M < 1)
        throw std::invalid_argument("spectral_solver: truncation M must be >= 1");
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& A) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericError("spectral_solver: eigensolver failed to converge");
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

// Walk the chain lambda0 <= m_1 <= p_1 <= m_2 <= p_2 <= ... and record the
// largest relative overlap. Within-pair order is automatic for directly
// solved spectra but can wobble after extrapolation.
void check_interlacing(SpectralResult& r) {
    double worst = 0.0;
    double left = r.lambda0;
    for (std::size_t i = 0; i < r.gamma.size(); ++i) {
        for (double right : {r.minus[i], r.plus[i]}) {
            const double scale = std::max({1.0, std::abs(left), std::abs(right)});
            worst = std::max(worst, (left - right) / scale);
            left = right;
        }
    }
    r.max_interlacing_violation = std::max(worst, 0.0);
    r.interlacing_ok = worst <= interlace_rel;
}

void snap_collapsed_gaps(SpectralResult& r) {
    for (std::size_t i = 0; i < r.gamma.size(); ++i) {
        if (std::abs(r.gamma[i]) < collapse_rel * std::max(1.0, std::abs(r.plus[i])))
            r.gamma[i] = 0.0;
    }
}

} // namespace

Eigen::MatrixXcd build_periodic_matrix(const FourierSequence& q, int M) {
    check_matrix_args(q, M);
    const int n = 2 * M + 1;
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i) {
        const int m = i - M;
        for (int j = 0; j < n; ++j) {
            const int l = j - M;
            cplx v = q.at(m - l);
            if (i == j) v += (2.0 * pi * m) * (2.0 * pi * m);
            A(i, j) = v;
        }
    }
    return A;
}

Eigen::MatrixXcd build_semiperiodic_matrix(const FourierSequence& q, int M) {
    check_matrix_args(q, M);
    const int n = 2 * M;
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i) {
        const int m = i - M;
        for (int j = 0; j < n; ++j) {
            const int l = j - M;
            cplx v = q.at(m - l);
            if (i == j) {
                const double d = pi * (2.0 * m + 1.0);
                v += d * d;
            }
            A(i, j) = v;
        }
    }
    return A;
}

SpectralResult spectral_endpoints(const FourierSequence& q, int M, int n_max) {
    check_matrix_args(q, M);
    if (n_max < 1 || n_max > M / 2)
        throw std::invalid_argument("spectral_solver: need 1 <= n_max <= M/2");

    const std::vector<double> per = sorted_eigenvalues(build_periodic_matrix(q, M));
    const std::vector<double> semi = sorted_eigenvalues(build_semiperiodic_matrix(q, M));

    SpectralResult r;
    r.truncation = M;
    const double shift = q.mean();
    r.lambda0 = per[0] + shift;
    r.minus.resize(static_cast<std::size_t>(n_max));
    r.plus.resize(static_cast<std::size_t>(n_max));
    r.gamma.resize(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        // gap n sits between sorted eigenvalues n-1 and n of one family:
        // semiperiodic for odd n, periodic for even n
        const std::vector<double>& ev = (n % 2 == 1) ? semi : per;
        const double lo = ev[static_cast<std::size_t>(n - 1)] + shift;
        const double hi = ev[static_cast<std::size_t>(n)] + shift;
        r.minus[static_cast<std::size_t>(n - 1)] = lo;
        r.plus[static_cast<std::size_t>(n - 1)] = hi;
        r.gamma[static_cast<std::size_t>(n - 1)] = hi - lo;
    }
    snap_collapsed_gaps(r);
    check_interlacing(r);
    return r;
}

double kronig_penney_discriminant(double lambda, double alpha) {
    if (std::abs(lambda) < 1e-6) {
        // series continuation through lambda = 0
        return (2.0 - lambda + lambda * lambda / 12.0)
             + alpha * (1.0 - lambda / 6.0 + lambda * lambda / 120.0);
    }
    if (lambda > 0.0) {
        const double r = std::sqrt(lambda);
        return 2.0 * std::cos(r) + alpha * std::sin(r) / r;
    }
    const double r = std::sqrt(-lambda);
    return 2.0 * std::cosh(r) + alpha * std::sinh(r) / r;
}

namespace {

// (-1)^n Delta(lambda) - 2: positive strictly inside gap n, negative in the
// neighbouring bands.
double gap_indicator(double lambda, double alpha, int n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * kronig_penney_discriminant(lambda, alpha) - 2.0;
}

double bisect_gap_edge(double lo, double hi, bool positive_at_lo, double alpha, int n,
                       double tol) {
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool pos = gap_indicator(mid, alpha, n) > 0.0;
        if (pos == positive_at_lo) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<GapInterval> kronig_penney_gaps(double alpha, int n_max, double tol) {
    if (n_max < 1)
        throw std::invalid_argument("spectral_solver: kronig_penney needs n_max >= 1");
    if (!(tol > 0.0))
        throw std::invalid_argument("spectral_solver: kronig_penney needs tol > 0");

    std::vector<GapInterval> gaps;
    gaps.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double known = (pi * n) * (pi * n);  // one edge is exact
        if (alpha == 0.0) {
            gaps.push_back({known, known, 0.0});
            continue;
        }
        if (alpha > 0.0) {
            // gap opens upward from (pi n)^2; far bracket is the next band edge
            const double far = (pi * (n + 1)) * (pi * (n + 1));
            double h = 1e-9 * std::max(1.0, known);
            while (known + h < far && gap_indicator(known + h, alpha, n) <= 0.0) h *= 2.0;
            if (known + h >= far)
                throw NumericError("spectral_solver: kronig_penney bracket failed for gap "
                                   + std::to_string(n));
            const double root = bisect_gap_edge(known + h, far, true, alpha, n, tol);
            gaps.push_back({known, root, root - known});
        } else {
            // gap opens downward from (pi n)^2
            const double floor_edge = (n >= 2) ? (pi * (n - 1)) * (pi * (n - 1)) : 0.0;
            double h = 1e-9 * std::max(1.0, known);
            while (known - h > floor_edge && gap_indicator(known - h, alpha, n) <= 0.0)
                h *= 2.0;
            double hi = known - h;
            if (!(gap_indicator(hi, alpha, n) > 0.0))
                throw NumericError("spectral_solver: kronig_penney bracket failed for gap "
                                   + std::to_string(n));
            double lo = floor_edge;
            if (n == 1) {
                // strong negative coupling pushes the lowest gap below 0
                double width = 1.0;
                while (gap_indicator(lo, alpha, n) > 0.0) {
                    lo = -width;
                    width *= 2.0;
                    if (width > 1e12)
                        throw NumericError(
                            "spectral_solver: kronig_penney lower edge escaped");
                }
            }
            const double root = bisect_gap_edge(lo, hi, false, alpha, n, tol);
            gaps.push_back({root, known, known - root});
        }
    }
    return gaps;
}

namespace {

struct AccelOut {
    double value = 0.0;
    bool fallback = false;
    std::optional<double> order;
};

// Aitken delta-squared on the last three values of a truncation sweep.
AccelOut accelerate(double v1, double v2, double v3, double m2, double m3) {
    const double d1 = v2 - v1;
    const double d2 = v3 - v2;
    const double tiny = 1e-12 * std::max(1.0, std::abs(v3));
    if (std::abs(d1) <= tiny && std::abs(d2) <= tiny)
        return {v3, false, std::nullopt};  // already converged
    if (d1 * d2 > 0.0 && std::abs(d2) < std::abs(d1)) {
        const double denom = d2 - d1;
        const double value = v3 - d2 * d2 / denom;
        const double order = std::log(std::abs(d1) / std::abs(d2)) / std::log(m3 / m2);
        return {value, false, order};
    }
    return {v3, true, std::nullopt};  // differences not settling; trust largest M
}

} // namespace

SpectralResult richardson_extrapolate(const FourierSequence& q, int n_max,
                                      const std::vector<int>& M_list) {
    if (M_list.size() < 3)
        throw std::invalid_argument("spectral_solver: extrapolation needs >= 3 sizes");
    for (std::size_t i = 0; i < M_list.size(); ++i) {
        if (M_list[i] < 2 * n_max)
            throw std::invalid_argument("spectral_solver: each M must be >= 2*n_max");
        if (i > 0 && M_list[i] <= M_list[i - 1])
            throw std::invalid_argument("spectral_solver: M_list must be strictly increasing");
    }

    std::vector<SpectralResult> levels;
    levels.reserve(M_list.size());
    for (int M : M_list) levels.push_back(spectral_endpoints(q, M, n_max));

    const std::size_t L = levels.size();
    const double m2 = static_cast<double>(M_list[L - 2]);
    const double m3 = static_cast<double>(M_list[L - 1]);

    SpectralResult r;
    r.truncation = M_list.back();
    r.extrapolated = true;
    r.minus.resize(static_cast<std::size_t>(n_max));
    r.plus.resize(static_cast<std::size_t>(n_max));
    r.gamma.resize(static_cast<std::size_t>(n_max));

    std::vector<double> orders;
    auto accel_endpoint = [&](auto getter) {
        const AccelOut out = accelerate(getter(levels[L - 3]), getter(levels[L - 2]),
                                        getter(levels[L - 1]), m2, m3);
        if (out.fallback) r.extrapolation_fallback = true;
        if (out.order) orders.push_back(*out.order);
        return out.value;
    };

    r.lambda0 = accel_endpoint([](const SpectralResult& s) { return s.lambda0; });
    for (int n = 1; n <= n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        r.minus[i] = accel_endpoint([i](const SpectralResult& s) { return s.minus[i]; });
        r.plus[i] = accel_endpoint([i](const SpectralResult& s) { return s.plus[i]; });
        r.gamma[i] = r.plus[i] - r.minus[i];
    }
    snap_collapsed_gaps(r);
    check_interlacing(r);

    if (!orders.empty()) {
        std::nth_element(orders.begin(), orders.begin() + orders.size() / 2, orders.end());
        r.fit_order = orders[orders.size() / 2];
    }
    return r;
}

} // namespace hillgap
