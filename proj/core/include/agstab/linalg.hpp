#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "agstab/rng.hpp"
#include "agstab/vec.hpp"

namespace agstab {

// Small dense row-major matrix. Everything here targets dimensions <= 8;
// no attempt at blocking or vectorization.
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(int r, int c) : r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, 0.0) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw std::invalid_argument("mat mul: dimension mismatch");
        Mat p(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                double v = (*this)(i, k);
                if (v == 0.0) continue;
                for (int j = 0; j < o.c_; ++j) p(i, j) += v * o(k, j);
            }
        return p;
    }

    Vec apply(const Vec& x) const {
        Vec y(static_cast<std::size_t>(r_), 0.0);
        for (int i = 0; i < r_; ++i) {
            double s = 0.0;
            for (int j = 0; j < c_; ++j) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        return y;
    }

    Mat transposed() const {
        Mat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool same_shape(const Mat& o) const { return r_ == o.r_ && c_ == o.c_; }

private:
    int r_, c_;
    std::vector<double> a_;
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi. Deterministic;
// eigenvalues returned ascending.
std::vector<double> jacobi_eigenvalues(Mat a, int max_sweeps = 64);

// Largest singular value. 1x1 and 2x2 use closed forms; larger matrices use
// power iteration on M^T M with a 1e-12 relative tolerance and a 1e4
// iteration cap. `warm` (optional, size = cols) seeds and receives the
// iteration vector, which makes prefix-product sweeps cheap.
double spectral_norm(const Mat& m, Vec* warm = nullptr);

// Random symmetric PSD matrix with spectrum sampled uniformly in [lo, hi]:
// Q diag(lambda) Q^T with Q from Gram-Schmidt on a Gaussian matrix.
Mat random_psd(int d, double lo, double hi, Rng& rng);

}  // namespace agstab
