#pragma once

#include <Eigen/Dense>
#include <vector>

#include "opcat/field.hpp"

namespace opcat {

// ---------------------------------------------------------------------------
// Convention used throughout the library.
//
// Vectors of H = K^n act on the RIGHT of operator matrices: x maps to x*A.
// Composition "apply A, then B" is therefore the plain matrix product A*B.
// The adjoint is the conjugate transpose in either convention.  Under the
// right action the natural invariants of an operator t are
//
//     range_space(t)  = column span of adjoint(t)   (the row span, for real t)
//     kernel_space(t) = orthogonal complement of the column span of t
//
// and a subspace with orthonormal basis columns B has projection B*B^H.
// These choices keep the first-column membership patterns of principal
// left ideals literal and make every identity below hold exactly.
// ---------------------------------------------------------------------------

/// Dense matrix over K, the carrier for every operator.  Real-tagged
/// matrices keep all imaginary parts exactly zero.
class Mat {
public:
    Mat(Field field, Eigen::MatrixXcd entries);

    static Mat zero(Field f, Eigen::Index rows, Eigen::Index cols);
    static Mat identity(Field f, Eigen::Index n);
    static Mat from_real(Eigen::MatrixXd entries);

    Field field() const { return field_; }
    Eigen::Index rows() const { return m_.rows(); }
    Eigen::Index cols() const { return m_.cols(); }
    bool is_square() const { return m_.rows() == m_.cols(); }

    const Eigen::MatrixXcd& eigen() const { return m_; }
    Cx at(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
    Scalar scalar_at(Eigen::Index i, Eigen::Index j) const { return {field_, m_(i, j)}; }

    /// Semigroup product: apply *this, then rhs (right action of operators).
    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;

    /// Entrywise scale.  Complex factors on a real-tagged matrix are rejected.
    Mat scaled(Cx k) const;

    /// Conjugate transpose.
    Mat adjoint() const;

    /// Largest singular value.
    double operator_norm() const;

    /// Numerical rank: singular values above eps_rank relative to the largest.
    Eigen::Index rank(const Tolerances& tol = {}) const;

    /// Moore-Penrose pseudoinverse with the same rank cutoff.
    Mat pseudoinverse(const Tolerances& tol = {}) const;

    /// ||a - b|| <= eps * max(1, ||a||, ||b||) in operator norm.
    bool approx_eq(const Mat& other, double eps) const;

    /// Residual of the comparison above, normalised by the same scale.
    double rel_distance(const Mat& other) const;

private:
    Field field_;
    Eigen::MatrixXcd m_;

    void check_same_field(const Mat& other, const char* op) const;
};

struct SvdResult {
    Mat u;                   // orthonormal columns
    std::vector<double> s;   // descending, nonnegative
    Mat v;                   // orthonormal columns; a = u * diag(s) * v^H
};

/// Thin singular value decomposition.
SvdResult svd(const Mat& a);

/// Full-size factors (u square rows x rows, v square cols x cols).
SvdResult svd_full(const Mat& a);

inline Mat matmul(const Mat& a, const Mat& b) { return a * b; }
inline Mat adjoint(const Mat& a) { return a.adjoint(); }
inline double operator_norm(const Mat& a) { return a.operator_norm(); }
inline Mat pseudoinverse(const Mat& a, const Tolerances& tol = {}) { return a.pseudoinverse(tol); }

}  // namespace opcat
