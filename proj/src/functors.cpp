#include "opcat/functors.hpp"

namespace opcat {

namespace {

std::string object_str(const Subspace& s) {
    return "dim-" + std::to_string(s.dim()) + " subspace of K^" + std::to_string(s.ambient());
}

}  // namespace

DualMap make_dual_map(const Subspace& m, const Mat& d, const Subspace& n, const Tolerances& tol) {
    if (!d.is_square() || d.rows() != m.ambient() || m.ambient() != n.ambient())
        throw ShapeError("dual map: carrier shape does not match the ambient space");
    if (m.field() != d.field() || d.field() != n.field())
        throw DomainError("dual map: mixed fields");
    const Mat pn_d = n.projection() * d;
    if (!pn_d.approx_eq(d, tol.eps_eq))
        throw DomainError("dual map: carrier does not land in the dual of dst (" + object_str(n) +
                          ")");
    const Mat d_pm = d * m.projection();
    if (!d_pm.approx_eq(d, tol.eps_eq))
        throw DomainError("dual map: carrier does not vanish off the dual of src (" +
                          object_str(m) + ")");
    return {m, d * m.projection(), n};
}

DualMap dual_identity(const Subspace& m) { return {m, m.projection(), m}; }

DualMap compose(const DualMap& f, const DualMap& g, const Tolerances& tol) {
    if (!eq(f.dst_base, g.src_base, tol))
        throw CompositionError("compose: dst of the first dual map (" + object_str(f.dst_base) +
                               ") does not match src of the second (" + object_str(g.src_base) +
                               ")");
    return {f.src_base, g.d * f.d, g.dst_base};
}

bool morphism_eq(const DualMap& f, const DualMap& g, const Tolerances& tol) {
    return eq(f.src_base, g.src_base, tol) && eq(f.dst_base, g.dst_base, tol) &&
           f.d.approx_eq(g.d, tol.eps_eq);
}

bool is_inclusion(const DualMap& f, const Tolerances& tol) {
    return leq(f.src_base, f.dst_base, tol) &&
           f.d.approx_eq(f.src_base.projection(), tol.eps_eq);
}

DualMap hom_add(const DualMap& f, const DualMap& g, const Tolerances& tol) {
    if (!eq(f.src_base, g.src_base, tol) || !eq(f.dst_base, g.dst_base, tol))
        throw DomainError("hom-set mismatch between dual maps");
    return {f.src_base, f.d + g.d, f.dst_base};
}

DualMap hom_scale(Cx k, const DualMap& f) { return {f.src_base, f.d.scaled(k), f.dst_base}; }

double hom_norm(const DualMap& f) { return f.d.operator_norm(); }

// -- functors -----------------------------------------------------------------

SubspaceMap left_to_map(const LeftMorphism& f) { return {f.src, f.t, f.dst}; }

Subspace left_to_map_object(const LeftObject& x) { return x.m; }

LeftMorphism map_to_left(const SubspaceMap& f) { return {f.src, f.t, f.dst}; }

LeftObject map_to_left_object(const Subspace& m) { return {m}; }

LeftMorphism restrict_to_left(const Subspace& m, const Mat& ambient, const Subspace& n,
                              const Tolerances& tol) {
    return make_left_morphism(m, m.projection() * ambient * n.projection(), n, tol);
}

DualMap map_to_dual(const SubspaceMap& f) {
    return {f.src, f.dst.projection() * f.t.adjoint() * f.src.projection(), f.dst};
}

DualObject map_to_dual_object(const Subspace& m) { return {m}; }

DualMap right_to_dual(const RightMorphism& f) { return {f.src, f.t, f.dst}; }

DualObject right_to_dual_object(const RightObject& x) { return {x.m}; }

RightMorphism left_to_right(const LeftMorphism& f) { return {f.src, f.t.adjoint(), f.dst}; }

RightObject left_to_right_object(const LeftObject& x) { return {x.m}; }

LeftMorphism right_to_left(const RightMorphism& f) { return {f.src, f.t.adjoint(), f.dst}; }

}  // namespace opcat
