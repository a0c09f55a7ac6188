#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "agstab/linalg.hpp"
#include "agstab/vec.hpp"

namespace agstab {

// A deterministic first-order oracle: same point, bitwise-identical gradient.
// Non-smooth objectives return their chosen subgradient from grad() and
// document the selection rule.
class Objective {
public:
    virtual ~Objective() = default;
    virtual int dim() const = 0;
    virtual Vec grad(const Vec& x) const = 0;
    virtual std::string name() const { return "objective"; }
};

class ZeroObjective final : public Objective {
public:
    explicit ZeroObjective(int d = 1) : d_(d) {}
    int dim() const override { return d_; }
    Vec grad(const Vec&) const override { return zeros(static_cast<std::size_t>(d_)); }
    std::string name() const override { return "zero"; }

private:
    int d_;
};

// f(x) = g . x
class LinearObjective final : public Objective {
public:
    explicit LinearObjective(Vec g) : g_(std::move(g)) {}
    explicit LinearObjective(double g) : g_{g} {}
    int dim() const override { return static_cast<int>(g_.size()); }
    Vec grad(const Vec&) const override { return g_; }
    std::string name() const override { return "linear"; }

private:
    Vec g_;
};

// f(x) = (1/2) x^T H x + b . x, H symmetric PSD
class QuadraticObjective final : public Objective {
public:
    QuadraticObjective(Mat H, Vec b) : H_(std::move(H)), b_(std::move(b)) {
        if (H_.rows() != H_.cols() || H_.rows() != static_cast<int>(b_.size()))
            throw std::invalid_argument("quadratic objective: dimension mismatch");
    }
    explicit QuadraticObjective(Mat H) : QuadraticObjective(std::move(H), zeros(static_cast<std::size_t>(H.rows()))) {}

    int dim() const override { return H_.rows(); }
    Vec grad(const Vec& x) const override {
        Vec g = H_.apply(x);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += b_[i];
        return g;
    }
    double value(const Vec& x) const {
        return 0.5 * dot(x, H_.apply(x)) + dot(b_, x);
    }
    const Mat& hessian() const { return H_; }
    std::string name() const override { return "quadratic"; }

private:
    Mat H_;
    Vec b_;
};

// s * f
class ScaledObjective final : public Objective {
public:
    ScaledObjective(double s, std::shared_ptr<const Objective> inner)
        : s_(s), inner_(std::move(inner)) {}
    int dim() const override { return inner_->dim(); }
    Vec grad(const Vec& x) const override { return scale(s_, inner_->grad(x)); }
    std::string name() const override { return "scaled(" + inner_->name() + ")"; }

private:
    double s_;
    std::shared_ptr<const Objective> inner_;
};

// sum_i w_i f_i
class WeightedSumObjective final : public Objective {
public:
    WeightedSumObjective(std::vector<double> w, std::vector<std::shared_ptr<const Objective>> fs)
        : w_(std::move(w)), fs_(std::move(fs)) {
        if (w_.size() != fs_.size() || fs_.empty())
            throw std::invalid_argument("weighted sum: mismatched terms");
    }
    int dim() const override { return fs_[0]->dim(); }
    Vec grad(const Vec& x) const override {
        Vec g = scale(w_[0], fs_[0]->grad(x));
        for (std::size_t k = 1; k < fs_.size(); ++k) {
            Vec gk = fs_[k]->grad(x);
            for (std::size_t i = 0; i < g.size(); ++i) g[i] += w_[k] * gk[i];
        }
        return g;
    }
    std::string name() const override { return "weighted_sum"; }

private:
    std::vector<double> w_;
    std::vector<std::shared_ptr<const Objective>> fs_;
};

// f(x) = G * max{0, x_1 - c, ..., x_d - c}.
// Subgradient rule: among branches attaining the max, pick G*e_i for the
// smallest-index coordinate branch; the 0 branch is returned only when it is
// the unique maximizer. This makes the subgradient schedule deterministic.
class MaxOfCoordsObjective final : public Objective {
public:
    MaxOfCoordsObjective(int d, double G, double c) : d_(d), G_(G), c_(c) {}
    int dim() const override { return d_; }
    Vec grad(const Vec& x) const override {
        double best = 0.0;  // the 0 branch
        for (int i = 0; i < d_; ++i) best = std::max(best, x[static_cast<std::size_t>(i)] - c_);
        Vec g = zeros(static_cast<std::size_t>(d_));
        for (int i = 0; i < d_; ++i) {
            if (x[static_cast<std::size_t>(i)] - c_ == best) {
                g[static_cast<std::size_t>(i)] = G_;
                return g;
            }
        }
        return g;  // 0 branch is the unique maximizer
    }
    double value(const Vec& x) const {
        double best = 0.0;
        for (int i = 0; i < d_; ++i) best = std::max(best, x[static_cast<std::size_t>(i)] - c_);
        return G_ * best;
    }
    std::string name() const override { return "max_of_coords"; }

private:
    int d_;
    double G_;
    double c_;
};

}  // namespace agstab
