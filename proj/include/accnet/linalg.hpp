#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace accnet {

using Vec = std::vector<double>;

// Thrown when a numerical routine cannot deliver a trustworthy result
// (near-singular pivot, non-converged iteration, diverging series).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense square matrix, row-major.
class Mat {
  public:
    Mat() = default;
    explicit Mat(int n) : n_(n), v_(static_cast<size_t>(n) * n, 0.0) {}

    int n() const { return n_; }
    double& operator()(int i, int j) { return v_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return v_[static_cast<size_t>(i) * n_ + j]; }

    static Mat identity(int n);
    Mat transpose() const;

  private:
    int n_ = 0;
    std::vector<double> v_;
};

Vec matvec(const Mat& a, const Vec& x);
double norm_inf(const Vec& v);
double norm_inf(const Mat& a);  // maximum absolute row sum

// Solves a x = b by LU factorization with partial pivoting.
// Throws numeric_error if a pivot falls below 1e-12 * ||a||_inf.
Vec lu_solve(Mat a, Vec b);

// All eigenvalues of a symmetric matrix via the cyclic Jacobi method,
// returned in ascending order. Throws numeric_error if the off-diagonal
// mass does not vanish within the sweep budget.
Vec symmetric_eigenvalues(Mat s, int max_sweeps = 64, double tol = 1e-13);

// Rough spectral-radius estimate by power iteration (fixed iteration count,
// no convergence requirement); used only as a safety precondition.
double spectral_radius_estimate(const Mat& a, int iterations = 50);

}  // namespace accnet
