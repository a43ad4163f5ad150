#include "opcat/subspace.hpp"

#include <Eigen/QR>
#include <cmath>

namespace opcat {

namespace {

void check_ambient(const Subspace& m, const Subspace& n, const char* op) {
    if (m.ambient() != n.ambient())
        throw ShapeError(std::string(op) + ": ambient dimensions " + std::to_string(m.ambient()) +
                         " and " + std::to_string(n.ambient()) + " differ");
    if (m.field() != n.field())
        throw DomainError(std::string(op) + ": mixed fields");
}

// Multiply each basis column by a unit phase so its first significant entry
// is positive real.  Keeps golden files reproducible.
void phase_fix(Eigen::MatrixXcd& b, double eps) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
        for (Eigen::Index i = 0; i < b.rows(); ++i) {
            const double a = std::abs(b(i, j));
            if (a > eps) {
                b.col(j) *= std::conj(b(i, j)) / a;
                b(i, j) = Cx{std::abs(b(i, j)), 0.0};
                break;
            }
        }
    }
}

Eigen::MatrixXcd qr_basis(const Mat& vectors, Eigen::Index k) {
    const Eigen::Index n = vectors.rows();
    if (k == 0) return Eigen::MatrixXcd::Zero(n, 0);
    if (vectors.field() == Field::Real) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vectors.eigen().real());
        Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
        return q.cast<Cx>();
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(vectors.eigen());
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, k);
}

}  // namespace

Subspace Subspace::span(const Mat& vectors, const Tolerances& tol) {
    tol.validate();
    const Eigen::Index n = vectors.rows();
    if (n == 0) throw ShapeError("span: ambient dimension must be positive");
    const Eigen::Index k = vectors.rank(tol);  // SVD is the single rank oracle
    Eigen::MatrixXcd b = qr_basis(vectors, k);
    phase_fix(b, tol.eps_rank);
    Mat basis(vectors.field(), b);
    Mat proj = basis * basis.adjoint();
    return Subspace(std::move(basis), std::move(proj));
}

Subspace Subspace::zero(Field f, Eigen::Index ambient) {
    return Subspace(Mat::zero(f, ambient, 0), Mat::zero(f, ambient, ambient));
}

Subspace Subspace::full(Field f, Eigen::Index ambient) {
    return Subspace(Mat::identity(f, ambient), Mat::identity(f, ambient));
}

Subspace Subspace::line(const Mat& vector, const Tolerances& tol) {
    if (vector.cols() != 1) throw ShapeError("line: expected a single column vector");
    return span(vector, tol);
}

bool leq(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    check_ambient(m, n, "leq");
    const Mat& pm = m.projection();
    const Mat& pn = n.projection();
    return (pn * pm - pm).operator_norm() <= tol.eps_eq;
}

bool eq(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    check_ambient(m, n, "eq");
    return (m.projection() - n.projection()).operator_norm() <= tol.eps_eq;
}

Subspace orth_complement(const Subspace& m, const Tolerances& tol) {
    const Eigen::Index n = m.ambient(), k = m.dim();
    if (k == 0) return Subspace::full(m.field(), n);
    if (k == n) return Subspace::zero(m.field(), n);
    SvdResult d = svd_full(m.basis());
    // columns k..n-1 of the full U span the complement
    Eigen::MatrixXcd comp = d.u.eigen().rightCols(n - k);
    return Subspace::span(Mat(m.field(), comp), tol);
}

Subspace sum(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    check_ambient(m, n, "sum");
    Eigen::MatrixXcd stacked(m.ambient(), m.dim() + n.dim());
    stacked << m.basis().eigen(), n.basis().eigen();
    return Subspace::span(Mat(m.field(), stacked), tol);
}

Subspace intersect(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    check_ambient(m, n, "intersect");
    return orth_complement(sum(orth_complement(m, tol), orth_complement(n, tol), tol), tol);
}

Mat projection_onto(const Subspace& m) { return m.projection(); }

Subspace range_space(const Mat& t, const Tolerances& tol) {
    if (!t.is_square()) throw ShapeError("range_space: operator matrix must be square");
    return Subspace::span(t.adjoint(), tol);
}

Subspace kernel_space(const Mat& t, const Tolerances& tol) {
    if (!t.is_square()) throw ShapeError("kernel_space: operator matrix must be square");
    return orth_complement(Subspace::span(t, tol), tol);
}

}  // namespace opcat
