#include "opcat/mat.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace opcat {

namespace {

std::string shape_str(const Mat& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

bool exactly_real(const Eigen::MatrixXcd& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j).imag() != 0.0) return false;
    return true;
}

}  // namespace

Mat::Mat(Field field, Eigen::MatrixXcd entries) : field_(field), m_(std::move(entries)) {
    if (field_ == Field::Real && !exactly_real(m_))
        throw DomainError("real-tagged matrix has a nonzero imaginary entry");
}

Mat Mat::zero(Field f, Eigen::Index rows, Eigen::Index cols) {
    return Mat(f, Eigen::MatrixXcd::Zero(rows, cols));
}

Mat Mat::identity(Field f, Eigen::Index n) {
    return Mat(f, Eigen::MatrixXcd::Identity(n, n));
}

Mat Mat::from_real(Eigen::MatrixXd entries) {
    return Mat(Field::Real, entries.cast<Cx>());
}

void Mat::check_same_field(const Mat& other, const char* op) const {
    if (field_ != other.field_)
        throw DomainError(std::string(op) + ": mixed fields (" + field_name(field_) + " vs " +
                          field_name(other.field_) + ")");
}

Mat Mat::operator*(const Mat& rhs) const {
    check_same_field(rhs, "matmul");
    if (cols() != rhs.rows())
        throw ShapeError("matmul: shapes " + shape_str(*this) + " and " + shape_str(rhs) +
                         " do not conform");
    return Mat(field_, m_ * rhs.m_);
}

Mat Mat::operator+(const Mat& rhs) const {
    check_same_field(rhs, "add");
    if (rows() != rhs.rows() || cols() != rhs.cols())
        throw ShapeError("add: shapes " + shape_str(*this) + " and " + shape_str(rhs) + " differ");
    return Mat(field_, m_ + rhs.m_);
}

Mat Mat::operator-(const Mat& rhs) const {
    check_same_field(rhs, "subtract");
    if (rows() != rhs.rows() || cols() != rhs.cols())
        throw ShapeError("subtract: shapes " + shape_str(*this) + " and " + shape_str(rhs) +
                         " differ");
    return Mat(field_, m_ - rhs.m_);
}

Mat Mat::scaled(Cx k) const {
    if (field_ == Field::Real && k.imag() != 0.0)
        throw DomainError("scale: complex factor on a real-tagged matrix");
    return Mat(field_, k * m_);
}

Mat Mat::adjoint() const { return Mat(field_, m_.adjoint()); }

double Mat::operator_norm() const {
    if (rows() == 0 || cols() == 0) return 0.0;
    if (field_ == Field::Real) {
        Eigen::JacobiSVD<Eigen::MatrixXd> s(m_.real());
        return s.singularValues().size() ? s.singularValues()(0) : 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> s(m_);
    return s.singularValues().size() ? s.singularValues()(0) : 0.0;
}

namespace {

void check_svd_converged(Eigen::ComputationInfo info, const Mat& a) {
    if (info != Eigen::Success)
        throw NumericError("svd failed to converge on a " + shape_str(a) + " " +
                           field_name(a.field()) + " matrix");
}

// Shared SVD driver.  Real-tagged input goes through the real kernel so the
// factors stay exactly real.
SvdResult svd_impl(const Mat& a, unsigned options) {
    const Eigen::Index r = a.rows(), c = a.cols();
    if (r == 0 || c == 0) {
        const bool full = options & Eigen::ComputeFullU;
        const Eigen::Index uc = full ? r : 0, vc = full ? c : 0;
        return {Mat(a.field(), Eigen::MatrixXcd::Identity(r, uc)),
                {},
                Mat(a.field(), Eigen::MatrixXcd::Identity(c, vc))};
    }
    if (a.field() == Field::Real) {
        Eigen::JacobiSVD<Eigen::MatrixXd> s(a.eigen().real(), options);
        check_svd_converged(s.info(), a);
        std::vector<double> sv(s.singularValues().data(),
                               s.singularValues().data() + s.singularValues().size());
        return {Mat::from_real(s.matrixU()), std::move(sv), Mat::from_real(s.matrixV())};
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> s(a.eigen(), options);
    check_svd_converged(s.info(), a);
    std::vector<double> sv(s.singularValues().data(),
                           s.singularValues().data() + s.singularValues().size());
    return {Mat(Field::Complex, s.matrixU()), std::move(sv), Mat(Field::Complex, s.matrixV())};
}

}  // namespace

SvdResult svd(const Mat& a) { return svd_impl(a, Eigen::ComputeThinU | Eigen::ComputeThinV); }

SvdResult svd_full(const Mat& a) { return svd_impl(a, Eigen::ComputeFullU | Eigen::ComputeFullV); }

Eigen::Index Mat::rank(const Tolerances& tol) const {
    if (rows() == 0 || cols() == 0) return 0;
    SvdResult d = svd(*this);
    if (d.s.empty() || d.s[0] == 0.0) return 0;
    const double cutoff = tol.eps_rank * d.s[0];
    Eigen::Index k = 0;
    while (k < static_cast<Eigen::Index>(d.s.size()) && d.s[k] > cutoff) ++k;
    return k;
}

Mat Mat::pseudoinverse(const Tolerances& tol) const {
    if (rows() == 0 || cols() == 0) return Mat(field_, Eigen::MatrixXcd::Zero(cols(), rows()));
    SvdResult d = svd(*this);
    const Eigen::Index m = static_cast<Eigen::Index>(d.s.size());
    Eigen::MatrixXcd sinv = Eigen::MatrixXcd::Zero(m, m);
    const double cutoff = d.s.empty() ? 0.0 : tol.eps_rank * d.s[0];
    for (Eigen::Index i = 0; i < m; ++i)
        if (d.s[i] > cutoff && d.s[i] > 0.0) sinv(i, i) = 1.0 / d.s[i];
    return Mat(field_, d.v.eigen() * sinv * d.u.eigen().adjoint());
}

bool Mat::approx_eq(const Mat& other, double eps) const {
    return rel_distance(other) <= eps;
}

double Mat::rel_distance(const Mat& other) const {
    check_same_field(other, "compare");
    if (rows() != other.rows() || cols() != other.cols())
        throw ShapeError("compare: shapes " + shape_str(*this) + " and " + shape_str(other) +
                         " differ");
    const double scale = std::max({1.0, operator_norm(), other.operator_norm()});
    return (*this - other).operator_norm() / scale;
}

}  // namespace opcat
