#include <doctest.h>

#include <cmath>

#include "opcat/cone.hpp"
#include "opcat/sampling.hpp"
#include "oracles.hpp"

using namespace opcat;

namespace {
const Tolerances tol;

Subspace axis(Field f, Eigen::Index n, Eigen::Index k) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, 1);
    e(k, 0) = 1.0;
    return Subspace::line(Mat(f, e));
}

}  // namespace

TEST_CASE("cone components at frozen examples") {
    // a projection cone has the identity component at its vertex
    Rng rng(201);
    Subspace nfix = random_subspace(rng, Field::Real, 4, 2, tol);
    Cone pc(ConeFlavor::fh, nfix.projection(), tol);
    CHECK(eq(pc.vertex(), nfix, tol));
    CHECK(morphism_eq(cone_component_fh(pc, nfix, tol), map_identity(nfix), tol));

    // generator sending the first axis to three times the third one
    Mat t = oracle::real3x3({0, 0, 3, 0, 0, 0, 0, 0, 0});
    Cone c(ConeFlavor::fh, t, tol);
    CHECK(eq(c.vertex(), axis(Field::Real, 3, 2), tol));
    auto comp = cone_component_fh(c, axis(Field::Real, 3, 0), tol);
    CHECK(comp.t.rel_distance(t) < 1e-14);  // P_x * t = t here

    // the ramp truncation at the line of the n-th coordinate
    const int n = 5;
    Mat ramp = ramp_operator(Field::Real, n);
    Cone rc(ConeFlavor::left, ramp, tol);
    auto cn = cone_component_left(rc, axis(Field::Real, n, n - 1), tol);
    // the carrier maps e_n to n * e_1 and kills the other coordinates
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(n, n);
    expect(n - 1, 0) = static_cast<double>(n);
    CHECK(cn.t.rel_distance(Mat(Field::Real, expect)) < 1e-14);
    CHECK(eq(cn.dst, axis(Field::Real, n, 0), tol));
}

TEST_CASE("cone compatibility with inclusions") {
    Rng rng(203);
    for (Field field : {Field::Real, Field::Complex}) {
        for (int i = 0; i < 20; ++i) {
            Mat t = random_operator(rng, field, 6);
            for (ConeFlavor flavor : {ConeFlavor::fh, ConeFlavor::left, ConeFlavor::right}) {
                Cone c(flavor, t, tol);
                NestedPair p = random_nested_pair(rng, field, 6, tol);
                CHECK(cone_compatibility_check(c, p.inner, p.outer, tol));
            }
        }
    }

    // non-nested pairs are refused
    Mat t = oracle::real3x3({0, 0, 3, 0, 0, 0, 0, 0, 0});
    Cone c(ConeFlavor::fh, t, tol);
    CHECK_THROWS_AS(
        cone_compatibility_check(c, axis(Field::Real, 3, 0), axis(Field::Real, 3, 1), tol),
        DomainError);
}

TEST_CASE("cone product frozen example and identities") {
    Mat t1 = oracle::real3x3({0, 1, 0, 0, 0, 0, 0, 0, 0});
    Mat t2 = oracle::real3x3({0, 0, 0, 0, 0, 3, 0, 0, 0});
    Cone c1(ConeFlavor::left, t1, tol), c2(ConeFlavor::left, t2, tol);

    Cone prod = cone_product(c1, c2, tol);
    CHECK(prod.gen().rel_distance(oracle::real3x3({0, 0, 3, 0, 0, 0, 0, 0, 0})) < 1e-14);

    // pointwise evaluation at the first axis agrees with the generator route
    Subspace x = axis(Field::Real, 3, 0);
    auto pw = pointwise_product(c1, c2, x, tol);
    CHECK(pw.carrier.rel_distance(cone_component_carrier(prod, x)) < 1e-13);
    CHECK(eq(pw.dst, prod.vertex(), tol));

    // a projection covering the range acts as a right identity
    Cone pid(ConeFlavor::left, range_space(t1, tol).projection(), tol);
    CHECK(cone_product(c1, pid, tol).gen().rel_distance(t1) < 1e-14);

    // associativity on random triples, generator and pointwise routes
    Rng rng(207);
    for (int i = 0; i < 10; ++i) {
        Mat a = random_operator(rng, Field::Complex, 5);
        Mat b = random_operator(rng, Field::Complex, 5);
        Mat c3 = random_operator(rng, Field::Complex, 5);
        Cone ca(ConeFlavor::right, a, tol), cb(ConeFlavor::right, b, tol),
            cc(ConeFlavor::right, c3, tol);
        CHECK(cone_eq(cone_product(cone_product(ca, cb, tol), cc, tol),
                      cone_product(ca, cone_product(cb, cc, tol), tol), tol));
        Subspace m = random_subspace(rng, Field::Complex, 5, tol);
        CHECK(pointwise_product(cone_product(ca, cb, tol), cc, m, tol)
                  .carrier.rel_distance(
                      pointwise_product(ca, cone_product(cb, cc, tol), m, tol).carrier) < 1e-10);
    }
}

TEST_CASE("pointwise product equals generator product across flavors") {
    Rng rng(211);
    for (Field field : {Field::Real, Field::Complex}) {
        for (int i = 0; i < 15; ++i) {
            Mat t1 = random_operator(rng, field, 6);
            Mat t2 = random_operator(rng, field, 6);
            for (ConeFlavor flavor : {ConeFlavor::fh, ConeFlavor::left, ConeFlavor::right}) {
                Cone c1(flavor, t1, tol), c2(flavor, t2, tol);
                Cone prod = cone_product(c1, c2, tol);
                for (int j = 0; j < 4; ++j) {
                    Subspace m = random_subspace(rng, field, 6, tol);
                    auto pw = pointwise_product(c1, c2, m, tol);
                    CHECK(pw.carrier.rel_distance(cone_component_carrier(prod, m)) <= 1e-8);
                    CHECK(eq(pw.dst, prod.vertex(), tol));
                }
            }
        }
    }
}

TEST_CASE("cone reconstruction from sampled components") {
    Rng rng(213);
    for (Field field : {Field::Real, Field::Complex}) {
        for (ConeFlavor flavor : {ConeFlavor::fh, ConeFlavor::left, ConeFlavor::right}) {
            Mat t = random_operator(rng, field, 5);
            Cone c(flavor, t, tol);
            std::vector<Subspace> where;
            for (int k = 0; k < 5; ++k) where.push_back(axis(field, 5, k));
            where.push_back(Subspace::full(field, 5));

            if (flavor == ConeFlavor::fh) {
                std::vector<SubspaceMap> samples;
                for (const auto& w : where) samples.push_back(cone_component_fh(c, w, tol));
                CHECK(cone_from_fh_samples(samples, tol).gen().rel_distance(t) <= 1e-9);
            } else if (flavor == ConeFlavor::left) {
                std::vector<LeftMorphism> samples;
                for (const auto& w : where) samples.push_back(cone_component_left(c, w, tol));
                CHECK(cone_from_left_samples(samples, tol).gen().rel_distance(t) <= 1e-9);
            } else {
                std::vector<RightMorphism> samples;
                for (const auto& w : where) samples.push_back(cone_component_right(c, w, tol));
                CHECK(cone_from_right_samples(samples, tol).gen().rel_distance(t) <= 1e-9);
            }
        }
    }

    // the identity-projection cone reconstructs to the projection
    Subspace nfix = random_subspace(rng, Field::Real, 5, 3, tol);
    Cone pc(ConeFlavor::left, nfix.projection(), tol);
    std::vector<LeftMorphism> samples;
    for (int k = 0; k < 5; ++k)
        samples.push_back(cone_component_left(pc, axis(Field::Real, 5, k), tol));
    CHECK(cone_from_left_samples(samples, tol).gen().rel_distance(nfix.projection()) <= 1e-9);

    // a perturbed sample is rejected
    Mat t = random_operator(rng, Field::Real, 5, 2);
    Cone c(ConeFlavor::left, t, tol);
    std::vector<LeftMorphism> bad;
    for (int k = 0; k < 5; ++k) bad.push_back(cone_component_left(c, axis(Field::Real, 5, k), tol));
    bad.push_back(cone_component_left(c, Subspace::full(Field::Real, 5), tol));
    Mat noise = random_hom_carrier(rng, bad[1].src, c.vertex());
    while (noise.operator_norm() < 0.05) noise = random_hom_carrier(rng, bad[1].src, c.vertex());
    bad[1].t = bad[1].t + noise.scaled(1e-3 / noise.operator_norm());
    CHECK_THROWS_AS(cone_from_left_samples(bad, tol), ReconstructionError);

    // samples missing a full set of lines are rejected
    std::vector<LeftMorphism> sparse = {cone_component_left(c, axis(Field::Real, 5, 0), tol)};
    CHECK_THROWS_AS(cone_from_left_samples(sparse, tol), ReconstructionError);
}

TEST_CASE("cone norm of a frozen generator") {
    Mat t = oracle::real3x3({0, 2, 0, 0, 0, 0, 0, 0, 0});
    for (ConeFlavor flavor : {ConeFlavor::fh, ConeFlavor::left, ConeFlavor::right})
        CHECK(cone_norm(Cone(flavor, t, tol)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("bounded cone algebra") {
    Rng rng(217);
    for (Field field : {Field::Real, Field::Complex}) {
        Mat t1 = random_operator(rng, field, 5);
        Mat t2 = random_operator(rng, field, 5);

        BoundedCone l1 = bounded(Cone(ConeFlavor::left, t1, tol));
        CHECK(bounded_norm(l1) == doctest::Approx(t1.operator_norm()).epsilon(1e-13));

        // components never exceed the certificate, and attain it on the
        // column span of the generator
        for (int j = 0; j < 10; ++j) {
            Subspace m = random_subspace(rng, field, 5, tol);
            CHECK(cone_component_carrier(l1.cone, m).operator_norm() <=
                  l1.bound * (1 + 1e-12) + 1e-12);
        }
        CHECK(cone_component_carrier(l1.cone, Subspace::span(t1, tol)).operator_norm() ==
              doctest::Approx(l1.bound).epsilon(1e-12));

        // multiplicative through the generator product
        BoundedCone l2 = bounded(Cone(ConeFlavor::left, t2, tol));
        CHECK(bounded_multiply(l1, l2, tol).cone.gen().rel_distance(t1 * t2) < 1e-13);
        CHECK(bounded_add(l1, l2, tol).cone.gen().rel_distance(t1 + t2) < 1e-13);
    }

    // right flavor: scaling the operator by k scales components by conj(k)
    Mat t = random_operator(rng, Field::Complex, 4);
    const Cx k{0.3, -1.2};
    Cone right_k(ConeFlavor::right, t.scaled(k), tol);
    Cone right_plain(ConeFlavor::right, t, tol);
    Subspace m = random_subspace(rng, Field::Complex, 4, 2, tol);
    CHECK(cone_component_carrier(right_k, m)
              .rel_distance(cone_component_carrier(right_plain, m).scaled(std::conj(k))) < 1e-13);
    // and cone_scale compensates so that scaling commutes with the embedding
    CHECK(cone_eq(cone_scale(std::conj(k), right_plain, tol), right_k, tol));
}

TEST_CASE("norm profile of the ramp family") {
    auto family = [](int n) { return ramp_operator(Field::Real, n); };
    auto norms = boundedness_profile(family, {1, 3, 10});
    REQUIRE(norms.size() == 3);
    CHECK(norms[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(norms[1] == doctest::Approx(std::sqrt(14.0)).epsilon(1e-14));
    CHECK(norms[2] == doctest::Approx(std::sqrt(385.0)).epsilon(1e-14));
    CHECK(norms[0] < norms[1]);
    CHECK(norms[1] < norms[2]);

    CHECK_THROWS_AS(boundedness_profile(family, {0}), UsageError);
}

TEST_CASE("regularity transports to the cone semigroup") {
    Rng rng(219);
    for (int i = 0; i < 10; ++i) {
        Mat t = random_operator(rng, Field::Complex, 5);
        Mat w = t.pseudoinverse(tol);
        for (ConeFlavor flavor : {ConeFlavor::fh, ConeFlavor::left, ConeFlavor::right}) {
            Cone ct(flavor, t, tol), cw(flavor, w, tol);
            CHECK(cone_eq(cone_product(ct, cone_product(cw, ct, tol), tol), ct, tol));
        }
    }
}
