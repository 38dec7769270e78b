#pragma once

// Truncated single-mode quantum field.
//
// States and operators live on the first D number states |0>, ..., |D-1>.
// Position and momentum are built from the annihilator a|n> = sqrt(n)|n-1>:
//   q = sqrt(hbar / (2 omega)) (a^+ + a),   p = j sqrt(hbar omega / 2) (a^+ - a),
//   H = (omega^2 / 2) q^2 + (1/2) p^2 = (hbar omega / 2)(a^+ a + a a^+).
// Truncation makes the top level of a a^+ vanish, so [q, p] = j hbar only on
// levels 0..D-2 (it is -(D-1) j hbar at the top), and H has hbar omega (D-1)/2
// as its last diagonal entry instead of hbar omega (D - 1/2).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace optics {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

class StateVector {
public:
    explicit StateVector(CVector amplitudes);
    static StateVector basis(std::size_t dim, std::size_t level);

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const CVector& amplitudes() const { return amps_; }
    // <psi, psi> = 1 within tol under the default pairing.
    bool is_normalized(double tol = 1e-12) const;
    StateVector normalized() const;

private:
    CVector amps_;
};

/// <x, y> = x^+ W y, conjugate-linear in x. W is Hermitian positive
/// definite; the identity when default-constructed.
class InnerProduct {
public:
    InnerProduct() = default;
    // Throws DomainError unless `weight` is Hermitian positive definite.
    explicit InnerProduct(CMatrix weight);

    static InnerProduct random_weighted(std::size_t dim, std::mt19937_64& rng);

    std::complex<double> operator()(const StateVector& x, const StateVector& y) const;
    bool is_weighted() const { return weight_.has_value(); }

private:
    std::optional<CMatrix> weight_;
};

std::complex<double> inprod(const StateVector& x, const StateVector& y);

class Operator {
public:
    explicit Operator(CMatrix matrix);
    static Operator identity(std::size_t dim);
    static Operator annihilation(std::size_t dim);
    static Operator number(std::size_t dim);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }
    StateVector apply(const StateVector& x) const;

private:
    CMatrix m_;
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(std::complex<double> s, const Operator& a);

/// A state map that need not be linear, for exercising the linearity predicate.
using ActionHook = std::function<CVector(const CVector&)>;

/// Checks op(x + y) = op x + op y and op(a x) = a op x on `trials` seeded
/// random vectors and complex scalars.
bool is_linear_op(const Operator& op, std::size_t trials, std::uint64_t seed);
bool is_linear_op(const ActionHook& op, std::size_t dim, std::size_t trials, std::uint64_t seed);

/// max |M - M^+| entrywise.
double self_adjoint_residual(const Operator& op);
bool is_self_adjoint(const Operator& op, double tol);

/// <psi, op psi>. Throws NotNormalized unless |<psi, psi> - 1| <= 1e-9.
std::complex<double> expectation(const Operator& op, const StateVector& psi);

/// AB - BA. Throws DimensionMismatch.
Operator commutator(const Operator& a, const Operator& b);

struct SingleMode {
    double omega = 1.0;
    double hbar = 1.0;
    std::size_t dim = 2;
    Operator q;
    Operator p;
    Operator h;
};

/// Throws DomainError unless omega > 0, hbar > 0, D >= 2.
SingleMode make_single_mode(double omega, double hbar, std::size_t dim);

/// Eigenvalues of a self-adjoint operator in ascending order. Uses the
/// diagonal directly when the off-diagonal part is negligible, otherwise a
/// Hermitian eigensolver.
std::vector<double> spectrum(const Operator& op);

double ground_energy(const SingleMode& sm);

/// max |[q, p] - j hbar I| over levels 0..D-2.
double commutator_deviation(const SingleMode& sm);

}  // namespace optics
