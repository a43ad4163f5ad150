#pragma once

#include "opcat/mat.hpp"

namespace opcat {

/// A finite-dimensional subspace M of H = K^n, held as an orthonormal basis
/// (columns) plus the cached orthogonal projection P = basis * basis^H.
///
/// Subspace identity is projection identity: bases are non-canonical, the
/// projection is unique.  The zero subspace is a first-class value whose
/// basis is an n x 0 matrix.
class Subspace {
public:
    /// Orthonormalise the column span of `vectors`.  Rank decisions use
    /// eps_rank; the basis comes from column-pivoted Householder QR with a
    /// phase fix (first significant entry of each basis vector made positive
    /// real) so identical inputs yield identical files.
    static Subspace span(const Mat& vectors, const Tolerances& tol = {});

    static Subspace zero(Field f, Eigen::Index ambient);
    static Subspace full(Field f, Eigen::Index ambient);

    /// One-dimensional span of a single vector (given as an n x 1 matrix).
    static Subspace line(const Mat& vector, const Tolerances& tol = {});

    Field field() const { return basis_.field(); }
    Eigen::Index ambient() const { return basis_.rows(); }
    Eigen::Index dim() const { return basis_.cols(); }

    const Mat& basis() const { return basis_; }
    const Mat& projection() const { return proj_; }

private:
    Subspace(Mat basis, Mat proj) : basis_(std::move(basis)), proj_(std::move(proj)) {}
    Mat basis_;
    Mat proj_;
};

/// M <= N, i.e. M is contained in N:  ||P_N P_M - P_M|| <= eps_eq.
/// Projections are self-adjoint, so the product order does not matter.
bool leq(const Subspace& m, const Subspace& n, const Tolerances& tol = {});

/// Same subspace: ||P_M - P_N|| <= eps_eq.
bool eq(const Subspace& m, const Subspace& n, const Tolerances& tol = {});

Subspace orth_complement(const Subspace& m, const Tolerances& tol = {});
Subspace sum(const Subspace& m, const Subspace& n, const Tolerances& tol = {});
Subspace intersect(const Subspace& m, const Subspace& n, const Tolerances& tol = {});

Mat projection_onto(const Subspace& m);

/// Range of the operator t under the right action x -> x*t: the column span
/// of adjoint(t).  For real t this is literally the span of the rows.
Subspace range_space(const Mat& t, const Tolerances& tol = {});

/// Null space of the right action: { x : x*t = 0 }, the orthogonal
/// complement of the column span of t.
Subspace kernel_space(const Mat& t, const Tolerances& tol = {});

}  // namespace opcat
