#pragma once

#include <stdexcept>

#include "pdflow/problem.hpp"
#include "pdflow/types.hpp"

namespace pdflow {

/// Scalar parameters of the second-order primal-dual flow
///
///   x'' + (alpha/t^q) x' + gamma d/dt[Gx(t)] + t^s Gx(t) = 0
///   y'' + (alpha/t^q) y' - gamma d/dt[Gy(t)] - t^s Gy(t) = 0
///
/// where Gx(t) = grad_x Lt(x, y + theta y') and Gy(t) = grad_y Lt(x + theta x', y)
/// for the regularized Lagrangian Lt(x,y) = L(x,y) + (c/2t^p)(|x|^2 - |y|^2).
struct DynamicsParams {
    double alpha = 2.0; ///< viscous damping strength, > 1
    double q = 0.5;     ///< damping decay exponent, in (0,1)
    double s = 0.5;     ///< time scaling exponent, > 0
    double p = 1.0;     ///< Tikhonov decay exponent, > 0
    double c = 0.0;     ///< Tikhonov strength, >= 0
    double gamma = 0.0; ///< Hessian-driven damping strength, >= 0
    double t0 = 1.0;    ///< initial time, > (gamma q)^(1/(s+1)) when gamma > 0

    /// Throws std::invalid_argument naming the first violated invariant.
    void validate() const;

    /// (gamma q)^(1/(s+1)); the extrapolation denominator is positive for all
    /// t above this value.
    double theta_domain_floor() const;

    /// Tikhonov weight c/t^p.
    double tikhonov_weight(double t) const;
};

struct State {
    double t = 0.0;
    Vector x;
    Vector y;
    Vector vx;
    Vector vy;
};

/// Flattened first-order form [x | y | vx | vy] of length 2(n+m).
Vector pack_state(const State& state);
State unpack_state(double t, const Vector& phase, Index n, Index m);

/// Extrapolation coefficient
///   theta(t) = (t^{2q+s} - 2 gamma q t^{2q-1} + gamma t^q)
///              / ((alpha-1)(t^{q+s} - gamma q t^{q-1})).
/// Throws std::domain_error for t < t0.
double theta(const DynamicsParams& params, double t);

/// Analytic derivative of theta (quotient rule); kept exact because it enters
/// every right-hand-side evaluation.
double theta_dot(const DynamicsParams& params, double t);

/// Lt(x,y) = f(x) + <Kx,y> - g(y) + (c/2t^p)(|x|^2 - |y|^2).
double aug_lagrangian(const ProblemSpec& problem, const DynamicsParams& params, double t,
                      const Vector& x, const Vector& y);

/// grad_x Lt at (x, y_tilde): grad f(x) + (c/t^p) x + K* y_tilde.
Vector grad_x_lt(const ProblemSpec& problem, const DynamicsParams& params, double t,
                 const Vector& x, const Vector& y_tilde);

/// grad_y Lt at (x_tilde, y): K x_tilde - grad g(y) - (c/t^p) y.
Vector grad_y_lt(const ProblemSpec& problem, const DynamicsParams& params, double t,
                 const Vector& x_tilde, const Vector& y);

struct Accelerations {
    Vector ax;
    Vector ay;
};

/// Raised when the Schur system behind the Hessian-driven mass matrix cannot
/// be solved to tolerance.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& message, double condition_estimate)
        : std::runtime_error(message), condition_estimate_(condition_estimate) {}
    double condition_estimate() const { return condition_estimate_; }

private:
    double condition_estimate_;
};

/// Accelerations (x'', y'') of the flow at the given state.
///
/// Expanding the total time derivatives of the extrapolated gradients yields
/// the block system
///   [ I         gamma theta K* ] [x'']   [Fx]
///   [ -gamma theta K        I  ] [y''] = [Fy]
/// which is identity-plus-skew and always invertible. It is reduced to the
/// SPD Schur system (I + gamma^2 theta^2 K*K) x'' = Fx - gamma theta K* Fy,
/// solved densely for n <= 512 and by conjugate gradients above.
Accelerations accelerations(const ProblemSpec& problem, const DynamicsParams& params,
                            const State& state);

/// First-order right-hand side [vx | vy | ax | ay] for the integrator.
/// Throws std::invalid_argument on non-finite input and std::runtime_error on
/// non-finite output.
Vector phase_rhs(const ProblemSpec& problem, const DynamicsParams& params, double t,
                 const Vector& phase);

} // namespace pdflow
