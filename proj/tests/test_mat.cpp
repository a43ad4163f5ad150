#include <doctest.h>

#include "opcat/sampling.hpp"
#include "oracles.hpp"

using namespace opcat;

namespace {
const Tolerances tol;
}

TEST_CASE("matmul matches hand examples and the naive oracle") {
    // shift composed with a scaled shift
    Mat a = oracle::real3x3({0, 1, 0, 0, 0, 0, 0, 0, 0});
    Mat b = oracle::real3x3({0, 0, 0, 0, 0, 3, 0, 0, 0});
    Mat expect = oracle::real3x3({0, 0, 3, 0, 0, 0, 0, 0, 0});
    CHECK((a * b).rel_distance(expect) == 0.0);

    Mat i3 = Mat::identity(Field::Real, 3);
    CHECK((i3 * b).rel_distance(b) == 0.0);

    // a first-column member composed with a first-row operator: the member
    // pattern of the principal left ideal of the axis projection
    Mat member = oracle::real3x3({2, 0, 0, -1, 0, 0, 5, 0, 0});
    Mat t = oracle::real3x3({0, 1, 1, 0, 0, 0, 0, 0, 0});
    Mat expect2 = oracle::real3x3({0, 2, 2, 0, -1, -1, 0, 5, 5});
    CHECK((member * t).rel_distance(expect2) == 0.0);
    CHECK((member * t).rel_distance(oracle::naive_matmul(member, t)) == 0.0);
}

TEST_CASE("matmul rejects shape and field mismatches") {
    Mat a = Mat::zero(Field::Real, 2, 3);
    Mat b = Mat::zero(Field::Real, 2, 3);
    CHECK_THROWS_AS(a * b, ShapeError);
    Mat c = Mat::zero(Field::Complex, 3, 2);
    CHECK_THROWS_AS(a * c, DomainError);
}

TEST_CASE("adjoint is the conjugate transpose and an involution") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 2, 0, 0;
    Mat a = Mat::from_real(m);
    CHECK(a.adjoint().at(1, 0) == Cx{2.0, 0.0});
    CHECK(a.adjoint().at(0, 1) == Cx{0.0, 0.0});

    Eigen::MatrixXcd c(2, 2);
    c << Cx{0, 1}, Cx{0, 0}, Cx{0, 0}, Cx{0, 0};
    Mat z(Field::Complex, c);
    CHECK(z.adjoint().at(0, 0) == Cx{0.0, -1.0});

    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Mat r = random_mat(rng, Field::Complex, 4, 3);
        CHECK(r.adjoint().adjoint().rel_distance(r) == 0.0);
        Mat s = random_mat(rng, Field::Complex, 3, 5);
        CHECK((r * s).adjoint().rel_distance(s.adjoint() * r.adjoint()) < 1e-14);
    }
}

TEST_CASE("svd reproduces frozen singular values") {
    Eigen::MatrixXd d(2, 2);
    d << 3, 0, 0, 1;
    auto s1 = svd(Mat::from_real(d)).s;
    REQUIRE(s1.size() == 2);
    CHECK(s1[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(s1[1] == doctest::Approx(1.0).epsilon(1e-14));

    Mat a = oracle::real3x3({0, 2, 0, 0, 0, 0, 0, 0, 0});
    auto s2 = svd(a).s;  // eigenvalues of adjoint(a)*a are 4, 0, 0
    REQUIRE(s2.size() == 3);
    CHECK(s2[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s2[1] == doctest::Approx(0.0).epsilon(1e-14));

    auto s3 = svd(Mat::zero(Field::Real, 3, 3)).s;
    for (double s : s3) CHECK(s == 0.0);

    // factors reconstruct the matrix
    Rng rng(11);
    Mat r = random_mat(rng, Field::Complex, 5, 3);
    auto d3 = svd(r);
    Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(3, 3);
    for (int i = 0; i < 3; ++i) sigma(i, i) = d3.s[static_cast<size_t>(i)];
    CHECK((d3.u.eigen() * sigma * d3.v.eigen().adjoint() - r.eigen()).norm() < 1e-12);
}

TEST_CASE("operator norm") {
    Mat a = oracle::real3x3({0, 2, 0, 0, 0, 0, 0, 0, 0});
    CHECK(a.operator_norm() == doctest::Approx(2.0).epsilon(1e-14));

    // projections of nonzero subspaces have norm one
    Rng rng(3);
    Subspace m = random_subspace(rng, Field::Real, 5, 3, tol);
    CHECK(m.projection().operator_norm() == doctest::Approx(1.0).epsilon(1e-12));

    // rank-one row operator: operator norm equals the Euclidean row norm
    Eigen::MatrixXd t(3, 3);
    t.setZero();
    t(0, 0) = 1;
    t(0, 1) = 2;
    t(0, 2) = 3;
    Mat ramp_row = Mat::from_real(t);
    CHECK(ramp_row.operator_norm() == doctest::Approx(std::sqrt(14.0)).epsilon(1e-14));
    CHECK(ramp_row.operator_norm() == doctest::Approx(oracle::frobenius(ramp_row)).epsilon(1e-14));
}

TEST_CASE("pseudoinverse satisfies the four identities") {
    Eigen::MatrixXd d(2, 2);
    d << 2, 0, 0, 0;
    Mat dp = Mat::from_real(d).pseudoinverse(tol);
    CHECK(dp.at(0, 0) == Cx{0.5, 0.0});
    CHECK(dp.at(1, 1) == Cx{0.0, 0.0});

    Mat a = oracle::real3x3({0, 2, 0, 0, 0, 0, 0, 0, 0});
    Mat p = a.pseudoinverse(tol);
    Mat expect = oracle::real3x3({0, 0, 0, 0.5, 0, 0, 0, 0, 0});
    CHECK(p.rel_distance(expect) < 1e-14);
    CHECK(oracle::penrose_residual(a, p) < 1e-14);

    Rng rng(13);
    for (Field f : {Field::Real, Field::Complex}) {
        for (int i = 0; i < 25; ++i) {
            Mat r = random_operator(rng, f, 5);
            CHECK(oracle::penrose_residual(r, r.pseudoinverse(tol)) < 1e-10);
        }
        // invertible case: the pseudoinverse is the inverse
        Mat g = random_mat(rng, f, 4, 4);
        while (g.rank(tol) < 4) g = random_mat(rng, f, 4, 4);
        CHECK((g * g.pseudoinverse(tol)).rel_distance(Mat::identity(f, 4)) < 1e-10);
    }
}

TEST_CASE("norm laws on random matrices") {
    Rng rng(17);
    for (Field f : {Field::Real, Field::Complex}) {
        for (int i = 0; i < 30; ++i) {
            Mat a = random_mat(rng, f, 4, 4);
            Mat b = random_mat(rng, f, 4, 4);
            CHECK((a * b).operator_norm() <=
                  a.operator_norm() * b.operator_norm() + tol.eps_eq);
            CHECK(a.adjoint().operator_norm() ==
                  doctest::Approx(a.operator_norm()).epsilon(1e-12));
            CHECK((a * (a.pseudoinverse(tol) * a)).rel_distance(a) < 1e-10);
        }
    }
}

TEST_CASE("real-tagged matrices stay exactly real") {
    Rng rng(19);
    Mat a = random_mat(rng, Field::Real, 6, 6);
    Mat b = random_mat(rng, Field::Real, 6, 6);
    for (const Mat& m : {a * b, a + b, a.adjoint(), a.pseudoinverse(tol)})
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) CHECK(m.at(i, j).imag() == 0.0);
    CHECK_THROWS_AS(a.scaled(Cx{0.0, 1.0}), DomainError);
}

TEST_CASE("scalar type") {
    Scalar s = Scalar::complex(1.0, -2.0);
    CHECK(conj(conj(s)).value == s.value);
    CHECK(Scalar::real(3.0).value.imag() == 0.0);
}
