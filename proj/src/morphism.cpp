#include "opcat/morphism.hpp"

namespace opcat {

namespace {

std::string object_str(const Subspace& s) {
    return "dim-" + std::to_string(s.dim()) + " subspace of K^" + std::to_string(s.ambient());
}

void check_operator_shape(const Subspace& m, const Mat& t, const Subspace& n, const char* who) {
    if (!t.is_square() || t.rows() != m.ambient())
        throw ShapeError(std::string(who) + ": carrier must be " + std::to_string(m.ambient()) +
                         "x" + std::to_string(m.ambient()));
    if (m.ambient() != n.ambient())
        throw ShapeError(std::string(who) + ": src and dst live in different ambient spaces");
    if (m.field() != t.field() || t.field() != n.field())
        throw DomainError(std::string(who) + ": mixed fields");
}

// Validation shared by left morphisms and subspace maps.
void validate_left(const Subspace& m, const Mat& t, const Subspace& n, const Tolerances& tol,
                   const char* who) {
    check_operator_shape(m, t, n, who);
    if (!leq(range_space(t, tol), n, tol))
        throw DomainError(std::string(who) + ": range(t) is not contained in dst (" +
                          object_str(n) + ")");
    if (!leq(orth_complement(m, tol), kernel_space(t, tol), tol))
        throw DomainError(std::string(who) + ": complement(src) is not contained in kernel(t), src " +
                          object_str(m));
}

void validate_right(const Subspace& m, const Mat& t, const Subspace& n, const Tolerances& tol,
                    const char* who) {
    check_operator_shape(m, t, n, who);
    if (!leq(range_space(t, tol), m, tol))
        throw DomainError(std::string(who) + ": range(t) is not contained in src (" +
                          object_str(m) + ")");
    if (!leq(orth_complement(n, tol), kernel_space(t, tol), tol))
        throw DomainError(std::string(who) + ": complement(dst) is not contained in kernel(t), dst " +
                          object_str(n));
}

void check_composable(const Subspace& fd, const Subspace& gs, const Tolerances& tol) {
    if (!eq(fd, gs, tol))
        throw CompositionError("compose: dst of the first morphism (" + object_str(fd) +
                               ") does not match src of the second (" + object_str(gs) + ")");
}

void check_homset(const Subspace& fs, const Subspace& fd, const Subspace& gs, const Subspace& gd,
                  const Tolerances& tol) {
    if (!eq(fs, gs, tol) || !eq(fd, gd, tol))
        throw DomainError("hom-set mismatch: (" + object_str(fs) + " -> " + object_str(fd) +
                          ") vs (" + object_str(gs) + " -> " + object_str(gd) + ")");
}

}  // namespace

// -- construction -------------------------------------------------------------

LeftMorphism make_left_morphism(const Subspace& m, const Mat& t, const Subspace& n,
                                const Tolerances& tol) {
    validate_left(m, t, n, tol, "left morphism");
    return {m, m.projection() * t, n};
}

RightMorphism make_right_morphism(const Subspace& m, const Mat& t, const Subspace& n,
                                  const Tolerances& tol) {
    validate_right(m, t, n, tol, "right morphism");
    return {m, t * m.projection(), n};
}

SubspaceMap make_subspace_map(const Subspace& m, const Mat& t, const Subspace& n,
                              const Tolerances& tol) {
    validate_left(m, t, n, tol, "subspace map");
    return {m, m.projection() * t, n};
}

LeftMorphism left_identity(const Subspace& m) { return {m, m.projection(), m}; }
RightMorphism right_identity(const Subspace& m) { return {m, m.projection(), m}; }
SubspaceMap map_identity(const Subspace& m) { return {m, m.projection(), m}; }

// -- composition and equality ---------------------------------------------------

LeftMorphism compose(const LeftMorphism& f, const LeftMorphism& g, const Tolerances& tol) {
    check_composable(f.dst, g.src, tol);
    return {f.src, f.t * g.t, g.dst};
}

RightMorphism compose(const RightMorphism& f, const RightMorphism& g, const Tolerances& tol) {
    check_composable(f.dst, g.src, tol);
    return {f.src, g.t * f.t, g.dst};
}

SubspaceMap compose(const SubspaceMap& f, const SubspaceMap& g, const Tolerances& tol) {
    check_composable(f.dst, g.src, tol);
    return {f.src, f.t * g.t, g.dst};
}

template <typename M>
static bool morphism_eq_impl(const M& f, const M& g, const Tolerances& tol) {
    return eq(f.src, g.src, tol) && eq(f.dst, g.dst, tol) && f.t.approx_eq(g.t, tol.eps_eq);
}

bool morphism_eq(const LeftMorphism& f, const LeftMorphism& g, const Tolerances& tol) {
    return morphism_eq_impl(f, g, tol);
}
bool morphism_eq(const RightMorphism& f, const RightMorphism& g, const Tolerances& tol) {
    return morphism_eq_impl(f, g, tol);
}
bool morphism_eq(const SubspaceMap& f, const SubspaceMap& g, const Tolerances& tol) {
    return morphism_eq_impl(f, g, tol);
}

// -- order structure -------------------------------------------------------------

namespace {
void require_leq(const Subspace& m, const Subspace& n, const Tolerances& tol, const char* who) {
    if (!leq(m, n, tol))
        throw DomainError(std::string(who) + ": " + object_str(m) + " is not contained in " +
                          object_str(n));
}
}  // namespace

LeftMorphism inclusion(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    require_leq(m, n, tol, "inclusion");
    return {m, m.projection(), n};
}

RightMorphism right_inclusion(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    require_leq(m, n, tol, "inclusion");
    return {m, m.projection(), n};
}

SubspaceMap map_inclusion(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    require_leq(m, n, tol, "inclusion");
    return {m, m.projection(), n};
}

LeftMorphism retraction_of(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    require_leq(m, n, tol, "retraction");
    return {n, m.projection(), m};
}

RightMorphism right_retraction_of(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    require_leq(m, n, tol, "retraction");
    return {n, m.projection(), m};
}

SubspaceMap map_retraction_of(const Subspace& m, const Subspace& n, const Tolerances& tol) {
    require_leq(m, n, tol, "retraction");
    return {n, m.projection(), m};
}

template <typename M>
static bool is_inclusion_impl(const M& f, const Tolerances& tol) {
    return leq(f.src, f.dst, tol) && f.t.approx_eq(f.src.projection(), tol.eps_eq);
}

bool is_inclusion(const LeftMorphism& f, const Tolerances& tol) { return is_inclusion_impl(f, tol); }
bool is_inclusion(const RightMorphism& f, const Tolerances& tol) { return is_inclusion_impl(f, tol); }
bool is_inclusion(const SubspaceMap& f, const Tolerances& tol) { return is_inclusion_impl(f, tol); }

// A retraction is any right inverse of the inclusion of dst into src, not
// just the norm-1 one.
bool is_retraction(const LeftMorphism& f, const Tolerances& tol) {
    return leq(f.dst, f.src, tol) &&
           (f.dst.projection() * f.t).approx_eq(f.dst.projection(), tol.eps_eq);
}

bool is_retraction(const RightMorphism& f, const Tolerances& tol) {
    return leq(f.dst, f.src, tol) &&
           (f.t * f.dst.projection()).approx_eq(f.dst.projection(), tol.eps_eq);
}

bool is_retraction(const SubspaceMap& f, const Tolerances& tol) {
    return leq(f.dst, f.src, tol) &&
           (f.dst.projection() * f.t).approx_eq(f.dst.projection(), tol.eps_eq);
}

// -- isomorphisms and factorization ------------------------------------------------

template <typename M>
static bool is_iso_left_impl(const M& f, const Tolerances& tol) {
    return eq(kernel_space(f.t, tol), orth_complement(f.src, tol), tol) &&
           eq(range_space(f.t, tol), f.dst, tol);
}

bool is_isomorphism(const LeftMorphism& f, const Tolerances& tol) {
    return is_iso_left_impl(f, tol);
}
bool is_isomorphism(const SubspaceMap& f, const Tolerances& tol) {
    return is_iso_left_impl(f, tol);
}

bool is_isomorphism(const RightMorphism& f, const Tolerances& tol) {
    return eq(kernel_space(f.t, tol), orth_complement(f.dst, tol), tol) &&
           eq(range_space(f.t, tol), f.src, tol);
}

namespace {

// Intermediate objects of a normal factorization: U is the complement of the
// kernel (the column span of the carrier), V the range.
struct FactorSpaces {
    Subspace u;
    Subspace v;
};

FactorSpaces factor_spaces(const Mat& t, const Tolerances& tol) {
    return {Subspace::span(t, tol), range_space(t, tol)};
}

}  // namespace

NormalFactorization<LeftMorphism> normal_factorize(const LeftMorphism& f, const Tolerances& tol) {
    auto [u_space, v_space] = factor_spaces(f.t, tol);
    return {make_left_morphism(f.src, u_space.projection(), u_space, tol),
            make_left_morphism(u_space, f.t, v_space, tol),
            make_left_morphism(v_space, v_space.projection(), f.dst, tol)};
}

NormalFactorization<RightMorphism> normal_factorize(const RightMorphism& f, const Tolerances& tol) {
    auto [u_space, v_space] = factor_spaces(f.t, tol);
    return {make_right_morphism(f.src, v_space.projection(), v_space, tol),
            make_right_morphism(v_space, f.t, u_space, tol),
            make_right_morphism(u_space, u_space.projection(), f.dst, tol)};
}

NormalFactorization<SubspaceMap> normal_factorize(const SubspaceMap& f, const Tolerances& tol) {
    auto [u_space, v_space] = factor_spaces(f.t, tol);
    return {make_subspace_map(f.src, u_space.projection(), u_space, tol),
            make_subspace_map(u_space, f.t, v_space, tol),
            make_subspace_map(v_space, v_space.projection(), f.dst, tol)};
}

LeftMorphism epimorphic_component(const LeftMorphism& f, const Tolerances& tol) {
    auto nf = normal_factorize(f, tol);
    return compose(nf.q, nf.u, tol);
}

RightMorphism epimorphic_component(const RightMorphism& f, const Tolerances& tol) {
    auto nf = normal_factorize(f, tol);
    return compose(nf.q, nf.u, tol);
}

SubspaceMap epimorphic_component(const SubspaceMap& f, const Tolerances& tol) {
    auto nf = normal_factorize(f, tol);
    return compose(nf.q, nf.u, tol);
}

// -- normed hom-set structure ---------------------------------------------------------

template <typename M>
static M hom_add_impl(const M& f, const M& g, const Tolerances& tol) {
    check_homset(f.src, f.dst, g.src, g.dst, tol);
    return {f.src, f.t + g.t, f.dst};
}

LeftMorphism hom_add(const LeftMorphism& f, const LeftMorphism& g, const Tolerances& tol) {
    return hom_add_impl(f, g, tol);
}
RightMorphism hom_add(const RightMorphism& f, const RightMorphism& g, const Tolerances& tol) {
    return hom_add_impl(f, g, tol);
}
SubspaceMap hom_add(const SubspaceMap& f, const SubspaceMap& g, const Tolerances& tol) {
    return hom_add_impl(f, g, tol);
}

LeftMorphism hom_scale(Cx k, const LeftMorphism& f) { return {f.src, f.t.scaled(k), f.dst}; }
RightMorphism hom_scale(Cx k, const RightMorphism& f) { return {f.src, f.t.scaled(k), f.dst}; }
SubspaceMap hom_scale(Cx k, const SubspaceMap& f) { return {f.src, f.t.scaled(k), f.dst}; }

double hom_norm(const LeftMorphism& f) { return f.t.operator_norm(); }
double hom_norm(const RightMorphism& f) { return f.t.operator_norm(); }
double hom_norm(const SubspaceMap& f) { return f.t.operator_norm(); }

// -- principal ideal order ---------------------------------------------------------------

bool principal_left_leq(const Mat& a, const Mat& b, const Tolerances& tol) {
    if (a.rows() != b.rows() || !a.is_square() || !b.is_square())
        throw ShapeError("principal_left_leq: operators must be square with equal ambient");
    return leq(range_space(a, tol), range_space(b, tol), tol);
}

bool principal_right_leq(const Mat& a, const Mat& b, const Tolerances& tol) {
    if (a.rows() != b.rows() || !a.is_square() || !b.is_square())
        throw ShapeError("principal_right_leq: operators must be square with equal ambient");
    return leq(kernel_space(b, tol), kernel_space(a, tol), tol);
}

}  // namespace opcat
