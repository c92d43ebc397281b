#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "pdflow/types.hpp"

namespace pdflow {

/// Twice continuously differentiable convex function on R^dim with value,
/// gradient and Hessian-vector access. Quadratics additionally carry their
/// (constant) Hessian so that saddle systems can be solved in closed form.
class SmoothConvexFn {
public:
    using ValueFn = std::function<double(const Vector&)>;
    using GradFn = std::function<Vector(const Vector&)>;
    using HessVecFn = std::function<Vector(const Vector&, const Vector&)>;

    SmoothConvexFn(Index dim, ValueFn value, GradFn gradient, HessVecFn hessian_vec);

    /// v -> 0.5 v'Qv + l'v with Q symmetric positive semidefinite.
    static SmoothConvexFn quadratic(Matrix q, Vector linear);

    Index dim() const { return dim_; }
    double value(const Vector& v) const;
    Vector gradient(const Vector& v) const;
    Vector hessian_vec(const Vector& at, const Vector& dir) const;

    bool is_quadratic() const { return quad_matrix_.has_value(); }
    const Matrix& quadratic_matrix() const;
    const Vector& quadratic_linear() const;

private:
    Index dim_;
    ValueFn value_;
    GradFn gradient_;
    HessVecFn hessian_vec_;
    std::optional<Matrix> quad_matrix_;
    std::optional<Vector> quad_linear_;
};

/// Linear operator K : R^n -> R^m together with its adjoint and an upper
/// estimate of the operator norm (largest singular value at construction).
class LinearCoupling {
public:
    explicit LinearCoupling(Matrix k);

    Index rows() const { return matrix_.rows(); }
    Index cols() const { return matrix_.cols(); }

    Vector apply(const Vector& x) const;
    Vector adjoint_apply(const Vector& y) const;
    double op_norm_estimate() const { return op_norm_; }
    const Matrix& matrix() const { return matrix_; }

private:
    Matrix matrix_;
    double op_norm_;
};

struct SaddlePair {
    Vector x;
    Vector y;

    double norm() const { return std::sqrt(x.squaredNorm() + y.squaredNorm()); }
};

/// A bilinear saddle problem min_x max_y f(x) + <Kx,y> - g(y), with optional
/// known saddle-point and minimal-norm saddle-point anchors. Anchors are
/// verified against the optimality system at construction.
class ProblemSpec {
public:
    ProblemSpec(SmoothConvexFn f, SmoothConvexFn g, LinearCoupling k,
                std::optional<SaddlePair> saddle_point = std::nullopt,
                std::optional<SaddlePair> min_norm_saddle = std::nullopt);

    const SmoothConvexFn& f() const { return f_; }
    const SmoothConvexFn& g() const { return g_; }
    const LinearCoupling& coupling() const { return k_; }

    Index primal_dim() const { return k_.cols(); }
    Index dual_dim() const { return k_.rows(); }

    const std::optional<SaddlePair>& saddle_point() const { return saddle_point_; }
    const std::optional<SaddlePair>& min_norm_saddle() const { return min_norm_saddle_; }

    /// L(x,y) = f(x) + <Kx,y> - g(y)
    double lagrangian(const Vector& x, const Vector& y) const;

    /// Residual of the optimality system at (x,y):
    /// max(|grad f(x) + K*y|, |Kx - grad g(y)|).
    double optimality_residual(const Vector& x, const Vector& y) const;

private:
    SmoothConvexFn f_;
    SmoothConvexFn g_;
    LinearCoupling k_;
    std::optional<SaddlePair> saddle_point_;
    std::optional<SaddlePair> min_norm_saddle_;
};

/// min_x max_y (m x1 + n x2)^2 + (m x1 + n x2)(j y1 + k y2) - (j y1 + k y2)^2.
/// With v = (m_coef, n_coef) and u = (j_coef, k_coef) this is f = (v'x)^2,
/// g = (u'y)^2, K = u v'. The saddle set is {v'x = 0, u'y = 0}; the origin is
/// its minimal-norm element.
ProblemSpec make_example_51(double m_coef, double n_coef, double j_coef, double k_coef);

/// Saddle formulation of min_x 0.5|Kx-b|^2 + eta|x|^2:
/// f = eta|x|^2, g = 0.5|y|^2 + <b,y>, coupling K. The unique saddle point is
/// computed from (K'K + 2 eta I) x* = K'b, y* = Kx* - b.
ProblemSpec make_example_52(Matrix k_matrix, Vector b, double eta);

/// A seeded Gaussian instance of the l2-regularized problem above, along
/// with Gaussian initial data. Draw order (all standard normal, one stream):
/// K row-major, then b, x0, y0, vx0, vy0.
struct RandomInstance {
    ProblemSpec problem;
    Matrix k_matrix;
    Vector b;
    double eta;
    std::uint64_t seed;
    Vector x0;
    Vector y0;
    Vector vx0;
    Vector vy0;

    /// Original objective 0.5|Kx-b|^2 + eta|x|^2 of the underlying problem.
    double objective(const Vector& x) const;
    double objective_at_solution() const;
};

RandomInstance make_random_instance(Index m, Index n, std::uint64_t seed, double eta = 1.0);

} // namespace pdflow
