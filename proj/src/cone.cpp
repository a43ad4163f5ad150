#include "opcat/cone.hpp"

namespace opcat {

const char* flavor_name(ConeFlavor f) {
    switch (f) {
        case ConeFlavor::fh: return "fh";
        case ConeFlavor::left: return "left";
        case ConeFlavor::right: return "right";
    }
    return "?";
}

ConeFlavor flavor_from_name(const std::string& s) {
    if (s == "fh") return ConeFlavor::fh;
    if (s == "left") return ConeFlavor::left;
    if (s == "right") return ConeFlavor::right;
    throw UsageError("unknown cone flavor '" + s + "' (expected fh, left or right)");
}

Cone::Cone(ConeFlavor flavor, Mat gen, const Tolerances& tol)
    : flavor_(flavor), gen_(std::move(gen)), vertex_(range_space(gen_, tol)) {
    if (!gen_.is_square()) throw ShapeError("cone generator must be square");
}

Mat cone_component_carrier(const Cone& c, const Subspace& m) {
    if (m.ambient() != c.ambient()) throw ShapeError("cone component: ambient mismatch");
    Mat carrier = m.projection() * c.gen();
    return c.flavor() == ConeFlavor::right ? carrier.adjoint() : carrier;
}

SubspaceMap cone_component_fh(const Cone& c, const Subspace& m, const Tolerances& tol) {
    if (c.flavor() != ConeFlavor::fh) throw DomainError("cone component: flavor is not fh");
    return make_subspace_map(m, cone_component_carrier(c, m), c.vertex(), tol);
}

LeftMorphism cone_component_left(const Cone& c, const Subspace& m, const Tolerances& tol) {
    if (c.flavor() != ConeFlavor::left) throw DomainError("cone component: flavor is not left");
    return make_left_morphism(m, cone_component_carrier(c, m), c.vertex(), tol);
}

RightMorphism cone_component_right(const Cone& c, const Subspace& m, const Tolerances& tol) {
    if (c.flavor() != ConeFlavor::right) throw DomainError("cone component: flavor is not right");
    return make_right_morphism(m, cone_component_carrier(c, m), c.vertex(), tol);
}

bool cone_compatibility_check(const Cone& c, const Subspace& m, const Subspace& n,
                              const Tolerances& tol) {
    if (!leq(m, n, tol)) throw DomainError("cone compatibility: m is not contained in n");
    switch (c.flavor()) {
        case ConeFlavor::fh: {
            auto through_n = compose(map_inclusion(m, n, tol), cone_component_fh(c, n, tol), tol);
            return morphism_eq(through_n, cone_component_fh(c, m, tol), tol);
        }
        case ConeFlavor::left: {
            auto through_n = compose(inclusion(m, n, tol), cone_component_left(c, n, tol), tol);
            return morphism_eq(through_n, cone_component_left(c, m, tol), tol);
        }
        case ConeFlavor::right: {
            auto through_n =
                compose(right_inclusion(m, n, tol), cone_component_right(c, n, tol), tol);
            return morphism_eq(through_n, cone_component_right(c, m, tol), tol);
        }
    }
    return false;
}

namespace {

void check_pair(const Cone& a, const Cone& b, const char* who) {
    if (a.flavor() != b.flavor()) throw DomainError(std::string(who) + ": mixed cone flavors");
    if (a.ambient() != b.ambient()) throw ShapeError(std::string(who) + ": ambient mismatch");
    if (a.field() != b.field()) throw DomainError(std::string(who) + ": mixed fields");
}

}  // namespace

Cone cone_product(const Cone& c1, const Cone& c2, const Tolerances& tol) {
    check_pair(c1, c2, "cone product");
    return Cone(c1.flavor(), c1.gen() * c2.gen(), tol);
}

PointwiseProduct pointwise_product(const Cone& c1, const Cone& c2, const Subspace& m,
                                   const Tolerances& tol) {
    check_pair(c1, c2, "pointwise cone product");
    switch (c1.flavor()) {
        case ConeFlavor::fh: {
            auto first = cone_component_fh(c1, m, tol);
            auto second = epimorphic_component(cone_component_fh(c2, c1.vertex(), tol), tol);
            auto composite = compose(first, second, tol);
            return {composite.t, composite.dst};
        }
        case ConeFlavor::left: {
            auto first = cone_component_left(c1, m, tol);
            auto second = epimorphic_component(cone_component_left(c2, c1.vertex(), tol), tol);
            auto composite = compose(first, second, tol);
            return {composite.t, composite.dst};
        }
        case ConeFlavor::right: {
            auto first = cone_component_right(c1, m, tol);
            auto second = epimorphic_component(cone_component_right(c2, c1.vertex(), tol), tol);
            auto composite = compose(first, second, tol);
            return {composite.t, composite.dst};
        }
    }
    throw DomainError("pointwise cone product: unknown flavor");
}

Cone cone_add(const Cone& c1, const Cone& c2, const Tolerances& tol) {
    check_pair(c1, c2, "cone add");
    return Cone(c1.flavor(), c1.gen() + c2.gen(), tol);
}

Cone cone_scale(Cx k, const Cone& c, const Tolerances& tol) {
    const Cx factor = c.flavor() == ConeFlavor::right ? std::conj(k) : k;
    return Cone(c.flavor(), c.gen().scaled(factor), tol);
}

double cone_norm(const Cone& c) { return c.gen().operator_norm(); }

bool cone_eq(const Cone& c1, const Cone& c2, const Tolerances& tol) {
    return c1.flavor() == c2.flavor() && c1.gen().approx_eq(c2.gen(), tol.eps_eq) &&
           eq(c1.vertex(), c2.vertex(), tol);
}

BoundedCone bounded(Cone c) {
    double b = cone_norm(c);
    return {std::move(c), b};
}

BoundedCone bounded_add(const BoundedCone& a, const BoundedCone& b, const Tolerances& tol) {
    return bounded(cone_add(a.cone, b.cone, tol));
}

BoundedCone bounded_scale(Cx k, const BoundedCone& a, const Tolerances& tol) {
    return bounded(cone_scale(k, a.cone, tol));
}

BoundedCone bounded_multiply(const BoundedCone& a, const BoundedCone& b, const Tolerances& tol) {
    return bounded(cone_product(a.cone, b.cone, tol));
}

double bounded_norm(const BoundedCone& a) { return a.bound; }

// -- reconstruction --------------------------------------------------------------

namespace {

struct RawSample {
    Subspace at;
    Mat left_carrier;  // carrier in left convention: P_at * gen
    Subspace vertex;
};

std::string object_str(const Subspace& s) {
    return "dim-" + std::to_string(s.dim()) + " subspace of K^" + std::to_string(s.ambient());
}

Cone reconstruct(ConeFlavor flavor, const std::vector<RawSample>& samples, const Tolerances& tol) {
    if (samples.empty()) throw ReconstructionError("no samples supplied");
    const Eigen::Index n = samples.front().at.ambient();
    const Field field = samples.front().at.field();
    for (const auto& s : samples) {
        if (s.at.ambient() != n || s.vertex.ambient() != n)
            throw ShapeError("cone reconstruction: ambient mismatch between samples");
        if (!eq(s.vertex, samples.front().vertex, tol))
            throw ReconstructionError("samples disagree on the vertex");
    }

    // The generator is recovered from the one-dimensional samples: at the
    // line spanned by the unit vector b, the carrier equals b b^H * gen, so
    // b^H * carrier = b^H * gen.
    std::vector<const RawSample*> lines;
    for (const auto& s : samples)
        if (s.at.dim() == 1) lines.push_back(&s);
    if (lines.empty()) throw ReconstructionError("samples contain no one-dimensional subspaces");

    Eigen::MatrixXcd x(static_cast<Eigen::Index>(lines.size()), n);
    Eigen::MatrixXcd r(static_cast<Eigen::Index>(lines.size()), n);
    for (size_t i = 0; i < lines.size(); ++i) {
        const Eigen::MatrixXcd b = lines[i]->at.basis().eigen();
        x.row(static_cast<Eigen::Index>(i)) = b.adjoint();
        r.row(static_cast<Eigen::Index>(i)) = b.adjoint() * lines[i]->left_carrier.eigen();
    }
    Mat xm(field, x);
    if (xm.rank(tol) < n)
        throw ReconstructionError("one-dimensional samples do not span the ambient space");
    Mat gen = xm.pseudoinverse(tol) * Mat(field, r);

    Cone cone(flavor, gen, tol);
    if (!eq(cone.vertex(), samples.front().vertex, tol))
        throw ReconstructionError("reconstructed generator has a different vertex than the samples");

    for (const auto& s : samples) {
        const Mat expected = s.at.projection() * gen;
        if (!expected.approx_eq(s.left_carrier, tol.eps_eq))
            throw ReconstructionError("sample at " + object_str(s.at) +
                                      " is inconsistent with the reconstructed generator " +
                                      "(residual " +
                                      std::to_string(expected.rel_distance(s.left_carrier)) + ")");
    }
    return cone;
}

}  // namespace

Cone cone_from_fh_samples(const std::vector<SubspaceMap>& samples, const Tolerances& tol) {
    std::vector<RawSample> raw;
    raw.reserve(samples.size());
    for (const auto& s : samples) raw.push_back({s.src, s.t, s.dst});
    return reconstruct(ConeFlavor::fh, raw, tol);
}

Cone cone_from_left_samples(const std::vector<LeftMorphism>& samples, const Tolerances& tol) {
    std::vector<RawSample> raw;
    raw.reserve(samples.size());
    for (const auto& s : samples) raw.push_back({s.src, s.t, s.dst});
    return reconstruct(ConeFlavor::left, raw, tol);
}

Cone cone_from_right_samples(const std::vector<RightMorphism>& samples, const Tolerances& tol) {
    std::vector<RawSample> raw;
    raw.reserve(samples.size());
    for (const auto& s : samples) raw.push_back({s.src, s.t.adjoint(), s.dst});
    return reconstruct(ConeFlavor::right, raw, tol);
}

// -- norm growth ---------------------------------------------------------------------

std::vector<double> boundedness_profile(const std::function<Mat(int)>& family,
                                        const std::vector<int>& dims) {
    std::vector<double> norms;
    norms.reserve(dims.size());
    for (int n : dims) {
        if (n < 1) throw UsageError("boundedness profile: dimensions must be positive");
        norms.push_back(family(n).operator_norm());
    }
    return norms;
}

Mat ramp_operator(Field f, int n) {
    if (n < 1) throw UsageError("ramp operator: dimension must be positive");
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) t(k, 0) = Cx(static_cast<double>(k + 1), 0.0);
    return Mat(f, t);
}

}  // namespace opcat
