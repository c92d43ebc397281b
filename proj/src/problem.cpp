#include "pdflow/problem.hpp"

#include <cmath>

#include "pdflow/rng.hpp"

namespace pdflow {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

void require_dim(const Vector& v, Index dim, const char* message) {
    if (v.size() != dim) throw std::invalid_argument(message);
}

} // namespace

SmoothConvexFn::SmoothConvexFn(Index dim, ValueFn value, GradFn gradient, HessVecFn hessian_vec)
    : dim_(dim),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_vec_(std::move(hessian_vec)) {
    require(dim_ >= 1, "SmoothConvexFn: dim must be positive");
    require(value_ && gradient_ && hessian_vec_, "SmoothConvexFn: missing callable");
}

SmoothConvexFn SmoothConvexFn::quadratic(Matrix q, Vector linear) {
    require(q.rows() == q.cols(), "SmoothConvexFn::quadratic: Q must be square");
    require(linear.size() == q.rows(), "SmoothConvexFn::quadratic: linear term size mismatch");
    require(q.isApprox(q.transpose(), 1e-12), "SmoothConvexFn::quadratic: Q must be symmetric");

    const Index dim = q.rows();
    auto value = [q, linear](const Vector& v) { return 0.5 * v.dot(q * v) + linear.dot(v); };
    auto grad = [q, linear](const Vector& v) -> Vector { return q * v + linear; };
    auto hess = [q](const Vector&, const Vector& dir) -> Vector { return q * dir; };

    SmoothConvexFn fn(dim, value, grad, hess);
    fn.quad_matrix_ = std::move(q);
    fn.quad_linear_ = std::move(linear);
    return fn;
}

double SmoothConvexFn::value(const Vector& v) const {
    require_dim(v, dim_, "SmoothConvexFn::value: dimension mismatch");
    return value_(v);
}

Vector SmoothConvexFn::gradient(const Vector& v) const {
    require_dim(v, dim_, "SmoothConvexFn::gradient: dimension mismatch");
    return gradient_(v);
}

Vector SmoothConvexFn::hessian_vec(const Vector& at, const Vector& dir) const {
    require_dim(at, dim_, "SmoothConvexFn::hessian_vec: dimension mismatch");
    require_dim(dir, dim_, "SmoothConvexFn::hessian_vec: dimension mismatch");
    return hessian_vec_(at, dir);
}

const Matrix& SmoothConvexFn::quadratic_matrix() const {
    if (!quad_matrix_) throw std::logic_error("SmoothConvexFn: not a quadratic");
    return *quad_matrix_;
}

const Vector& SmoothConvexFn::quadratic_linear() const {
    if (!quad_linear_) throw std::logic_error("SmoothConvexFn: not a quadratic");
    return *quad_linear_;
}

LinearCoupling::LinearCoupling(Matrix k) : matrix_(std::move(k)) {
    require(matrix_.rows() >= 1 && matrix_.cols() >= 1, "LinearCoupling: empty matrix");
    require(matrix_.allFinite(), "LinearCoupling: matrix entries must be finite");
    op_norm_ = matrix_.isZero(0.0)
                   ? 0.0
                   : Eigen::JacobiSVD<Matrix>(matrix_).singularValues()(0);
}

Vector LinearCoupling::apply(const Vector& x) const {
    require_dim(x, cols(), "LinearCoupling::apply: dimension mismatch");
    return matrix_ * x;
}

Vector LinearCoupling::adjoint_apply(const Vector& y) const {
    require_dim(y, rows(), "LinearCoupling::adjoint_apply: dimension mismatch");
    return matrix_.transpose() * y;
}

ProblemSpec::ProblemSpec(SmoothConvexFn f, SmoothConvexFn g, LinearCoupling k,
                         std::optional<SaddlePair> saddle_point,
                         std::optional<SaddlePair> min_norm_saddle)
    : f_(std::move(f)),
      g_(std::move(g)),
      k_(std::move(k)),
      saddle_point_(std::move(saddle_point)),
      min_norm_saddle_(std::move(min_norm_saddle)) {
    require(f_.dim() == k_.cols(), "ProblemSpec: f dimension must match coupling columns");
    require(g_.dim() == k_.rows(), "ProblemSpec: g dimension must match coupling rows");

    constexpr double kAnchorTol = 1e-8;
    for (const auto* anchor : {&saddle_point_, &min_norm_saddle_}) {
        if (!anchor->has_value()) continue;
        const SaddlePair& pair = **anchor;
        require_dim(pair.x, primal_dim(), "ProblemSpec: anchor x dimension mismatch");
        require_dim(pair.y, dual_dim(), "ProblemSpec: anchor y dimension mismatch");
        require(pair.x.allFinite() && pair.y.allFinite(), "ProblemSpec: anchor must be finite");
        if (optimality_residual(pair.x, pair.y) > kAnchorTol)
            throw std::invalid_argument("ProblemSpec: anchor fails the optimality system");
    }
}

double ProblemSpec::lagrangian(const Vector& x, const Vector& y) const {
    return f_.value(x) + k_.apply(x).dot(y) - g_.value(y);
}

double ProblemSpec::optimality_residual(const Vector& x, const Vector& y) const {
    const double rx = (f_.gradient(x) + k_.adjoint_apply(y)).norm();
    const double ry = (k_.apply(x) - g_.gradient(y)).norm();
    return std::max(rx, ry);
}

ProblemSpec make_example_51(double m_coef, double n_coef, double j_coef, double k_coef) {
    Vector v(2), u(2);
    v << m_coef, n_coef;
    u << j_coef, k_coef;

    SmoothConvexFn f = SmoothConvexFn::quadratic(2.0 * (v * v.transpose()), Vector::Zero(2));
    SmoothConvexFn g = SmoothConvexFn::quadratic(2.0 * (u * u.transpose()), Vector::Zero(2));
    LinearCoupling k(u * v.transpose());

    SaddlePair origin{Vector::Zero(2), Vector::Zero(2)};
    return ProblemSpec(std::move(f), std::move(g), std::move(k), origin, origin);
}

ProblemSpec make_example_52(Matrix k_matrix, Vector b, double eta) {
    require(eta > 0.0, "make_example_52: eta must be positive");
    require(b.size() == k_matrix.rows(), "make_example_52: b size must match K rows");

    const Index n = k_matrix.cols();
    const Index m = k_matrix.rows();

    SmoothConvexFn f =
        SmoothConvexFn::quadratic(2.0 * eta * Matrix::Identity(n, n), Vector::Zero(n));
    SmoothConvexFn g = SmoothConvexFn::quadratic(Matrix::Identity(m, m), b);

    // Normal equations of the underlying regularized least-squares problem;
    // positive definite for eta > 0.
    Matrix normal = k_matrix.transpose() * k_matrix + 2.0 * eta * Matrix::Identity(n, n);
    Vector x_star = normal.llt().solve(k_matrix.transpose() * b);
    Vector y_star = k_matrix * x_star - b;

    SaddlePair saddle{std::move(x_star), std::move(y_star)};
    LinearCoupling k(std::move(k_matrix));
    return ProblemSpec(std::move(f), std::move(g), std::move(k), saddle, saddle);
}

double RandomInstance::objective(const Vector& x) const {
    return 0.5 * (k_matrix * x - b).squaredNorm() + eta * x.squaredNorm();
}

double RandomInstance::objective_at_solution() const {
    return objective(problem.saddle_point()->x);
}

RandomInstance make_random_instance(Index m, Index n, std::uint64_t seed, double eta) {
    require(m >= 1 && n >= 1, "make_random_instance: dimensions must be positive");

    NormalSampler gauss(seed);
    Matrix k(m, n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) k(i, j) = gauss.next();

    Vector b(m), x0(n), y0(m), vx0(n), vy0(m);
    for (Index i = 0; i < m; ++i) b(i) = gauss.next();
    for (Index i = 0; i < n; ++i) x0(i) = gauss.next();
    for (Index i = 0; i < m; ++i) y0(i) = gauss.next();
    for (Index i = 0; i < n; ++i) vx0(i) = gauss.next();
    for (Index i = 0; i < m; ++i) vy0(i) = gauss.next();

    ProblemSpec problem = make_example_52(k, b, eta);
    return RandomInstance{std::move(problem), std::move(k), std::move(b), eta, seed,
                          std::move(x0),      std::move(y0), std::move(vx0), std::move(vy0)};
}

} // namespace pdflow
