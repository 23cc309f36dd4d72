#include "accnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace accnet {

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::transpose() const {
    Mat t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec matvec(const Mat& a, const Vec& x) {
    const int n = a.n();
    Vec y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double norm_inf(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double norm_inf(const Mat& a) {
    double m = 0.0;
    for (int i = 0; i < a.n(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.n(); ++j) s += std::abs(a(i, j));
        m = std::max(m, s);
    }
    return m;
}

Vec lu_solve(Mat a, Vec b) {
    const int n = a.n();
    if (n == 0 || static_cast<int>(b.size()) != n)
        throw numeric_error("lu_solve: dimension mismatch");
    const double pivot_floor = 1e-12 * norm_inf(a);

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (std::abs(a(p, k)) <= pivot_floor)
            throw numeric_error("lu_solve: pivot below threshold (matrix singular or nearly so)");
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(b[k], b[p]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double m = a(i, k) / a(k, k);
            a(i, k) = m;
            for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
            b[i] -= m * b[k];
        }
    }

    Vec x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

Vec symmetric_eigenvalues(Mat s, int max_sweeps, double tol) {
    const int n = s.n();
    if (n == 1) return {s(0, 0)};
    const double scale = std::max(norm_inf(s), 1.0);

    auto off_norm = [&]() {
        double t = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) t += s(i, j) * s(i, j);
        return std::sqrt(t);
    };

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_norm() <= tol * scale) {
            Vec ev(n);
            for (int i = 0; i < n; ++i) ev[i] = s(i, i);
            std::sort(ev.begin(), ev.end());
            return ev;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(s(p, q)) <= 1e-300) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
                // Smaller-angle rotation root for stability.
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double w = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - w * skq;
                    s(k, q) = w * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - w * sqk;
                    s(q, k) = w * spk + c * sqk;
                }
            }
        }
    }
    throw numeric_error("symmetric_eigenvalues: Jacobi sweeps did not converge");
}

double spectral_radius_estimate(const Mat& a, int iterations) {
    const int n = a.n();
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * i;  // fixed, deterministic start
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        Vec w = matvec(a, v);
        const double norm = norm_inf(w);
        if (norm == 0.0) return 0.0;
        lambda = norm;
        for (double& x : w) x /= norm;
        v = std::move(w);
    }
    return lambda;
}

}  // namespace accnet
