#include "optics/quantum_mode.hpp"

#include <algorithm>
#include <cmath>

#include "optics/errors.hpp"

namespace optics {

namespace {

using cd = std::complex<double>;

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

CVector random_vector(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(static_cast<Eigen::Index>(dim));
    for (auto& c : v) c = cd(g(rng), g(rng));
    return v;
}

}  // namespace

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
    if (!amps_.allFinite()) throw DomainError("StateVector: amplitudes must be finite");
}

StateVector StateVector::basis(std::size_t dim, std::size_t level) {
    if (level >= dim) throw DomainError("StateVector::basis: level out of range");
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(level)) = 1.0;
    return StateVector(std::move(v));
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(amps_.squaredNorm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    const double n = amps_.norm();
    if (n == 0.0) throw DomainError("StateVector::normalized: zero vector");
    return StateVector(amps_ / n);
}

InnerProduct::InnerProduct(CMatrix weight) {
    if (weight.rows() != weight.cols()) throw DomainError("InnerProduct: weight must be square");
    const double asym = (weight - weight.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, weight.cwiseAbs().maxCoeff())) {
        throw DomainError("InnerProduct: weight must be Hermitian");
    }
    Eigen::LLT<CMatrix> llt(weight);
    if (llt.info() != Eigen::Success) throw DomainError("InnerProduct: weight must be positive definite");
    weight_ = std::move(weight);
}

InnerProduct InnerProduct::random_weighted(std::size_t dim, std::mt19937_64& rng) {
    CMatrix b(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index c = 0; c < b.cols(); ++c) b.col(c) = random_vector(dim, rng);
    CMatrix w = b.adjoint() * b + 0.5 * CMatrix::Identity(b.rows(), b.cols());
    w = 0.5 * (w + w.adjoint()).eval();
    return InnerProduct(std::move(w));
}

cd InnerProduct::operator()(const StateVector& x, const StateVector& y) const {
    require_same_dim(x.dim(), y.dim(), "inprod");
    if (!weight_) return x.amplitudes().dot(y.amplitudes());
    require_same_dim(x.dim(), static_cast<std::size_t>(weight_->rows()), "inprod");
    return x.amplitudes().dot(*weight_ * y.amplitudes());
}

cd inprod(const StateVector& x, const StateVector& y) { return InnerProduct{}(x, y); }

Operator::Operator(CMatrix matrix) : m_(std::move(matrix)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("Operator: matrix must be square");
    if (!m_.allFinite()) throw DomainError("Operator: entries must be finite");
}

Operator Operator::identity(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return Operator(CMatrix::Identity(d, d));
}

Operator Operator::annihilation(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    CMatrix a = CMatrix::Zero(d, d);
    for (Eigen::Index n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return Operator(std::move(a));
}

Operator Operator::number(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    CMatrix m = CMatrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n) m(n, n) = static_cast<double>(n);
    return Operator(std::move(m));
}

StateVector Operator::apply(const StateVector& x) const {
    require_same_dim(dim(), x.dim(), "Operator::apply");
    return StateVector(m_ * x.amplitudes());
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "operator product");
    return Operator(a.matrix() * b.matrix());
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "operator sum");
    return Operator(a.matrix() + b.matrix());
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "operator difference");
    return Operator(a.matrix() - b.matrix());
}

Operator operator*(cd s, const Operator& a) { return Operator(s * a.matrix()); }

bool is_linear_op(const ActionHook& op, std::size_t dim, std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (std::size_t i = 0; i < trials; ++i) {
        const CVector x = random_vector(dim, rng);
        const CVector y = random_vector(dim, rng);
        const cd a(g(rng), g(rng));

        const CVector sum_lhs = op(x + y);
        const CVector sum_rhs = op(x) + op(y);
        const double sum_scale = std::max({1.0, sum_lhs.norm(), sum_rhs.norm()});
        if ((sum_lhs - sum_rhs).norm() > 1e-10 * sum_scale) return false;

        const CVector scale_lhs = op(a * x);
        const CVector scale_rhs = a * op(x);
        const double scale_scale = std::max({1.0, scale_lhs.norm(), scale_rhs.norm()});
        if ((scale_lhs - scale_rhs).norm() > 1e-10 * scale_scale) return false;
    }
    return true;
}

bool is_linear_op(const Operator& op, std::size_t trials, std::uint64_t seed) {
    const CMatrix& m = op.matrix();
    return is_linear_op([&m](const CVector& v) -> CVector { return m * v; }, op.dim(), trials, seed);
}

double self_adjoint_residual(const Operator& op) {
    if (op.dim() == 0) return 0.0;
    return (op.matrix() - op.matrix().adjoint()).cwiseAbs().maxCoeff();
}

bool is_self_adjoint(const Operator& op, double tol) { return self_adjoint_residual(op) <= tol; }

cd expectation(const Operator& op, const StateVector& psi) {
    require_same_dim(op.dim(), psi.dim(), "expectation");
    if (!psi.is_normalized(1e-9)) throw NotNormalized("expectation: state is not normalized");
    return inprod(psi, op.apply(psi));
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "commutator");
    return a * b - b * a;
}

SingleMode make_single_mode(double omega, double hbar, std::size_t dim) {
    if (!(std::isfinite(omega) && omega > 0.0)) throw DomainError("make_single_mode: omega must be > 0");
    if (!(std::isfinite(hbar) && hbar > 0.0)) throw DomainError("make_single_mode: hbar must be > 0");
    if (dim < 2) throw DomainError("make_single_mode: dimension must be >= 2");

    const Operator a = Operator::annihilation(dim);
    const Operator a_dag(a.matrix().adjoint());
    const Operator q = cd(std::sqrt(hbar / (2.0 * omega))) * (a_dag + a);
    const Operator p = cd(0.0, std::sqrt(hbar * omega / 2.0)) * (a_dag - a);
    const Operator h = cd(omega * omega / 2.0) * (q * q) + cd(0.5) * (p * p);
    return {omega, hbar, dim, q, p, h};
}

std::vector<double> spectrum(const Operator& op) {
    const CMatrix& m = op.matrix();
    const auto d = m.rows();
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(d));
    if (d == 0) return values;

    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const CMatrix off = m - CMatrix(m.diagonal().asDiagonal());
    if (off.cwiseAbs().maxCoeff() <= 1e-14 * scale) {
        for (Eigen::Index i = 0; i < d; ++i) values.push_back(m(i, i).real());
    } else {
        const CMatrix herm = 0.5 * (m + m.adjoint());
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw DomainError("spectrum: eigensolver did not converge");
        for (Eigen::Index i = 0; i < d; ++i) values.push_back(solver.eigenvalues()(i));
    }
    std::sort(values.begin(), values.end());
    return values;
}

double ground_energy(const SingleMode& sm) { return spectrum(sm.h).front(); }

double commutator_deviation(const SingleMode& sm) {
    const CMatrix c = commutator(sm.q, sm.p).matrix();
    const auto lower = static_cast<Eigen::Index>(sm.dim - 1);
    const CMatrix target = cd(0.0, sm.hbar) * CMatrix::Identity(lower, lower);
    return (c.topLeftCorner(lower, lower) - target).cwiseAbs().maxCoeff();
}

}  // namespace optics
