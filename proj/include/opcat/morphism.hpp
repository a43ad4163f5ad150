#pragma once

#include "opcat/subspace.hpp"

namespace opcat {

// ---------------------------------------------------------------------------
// The three concrete categories on the operator side.
//
//   left   objects are principal left ideals S*P_M, morphisms (M, t, N)
//          act by right multiplication A -> A*t and require
//          complement(M) <= kernel(t) and range(t) <= N.
//   right  objects are principal right ideals P_M*S, morphisms (M, t, N)
//          act by left multiplication A -> t*A and require
//          complement(N) <= kernel(t) and range(t) <= M.
//   maps   objects are the subspaces themselves; a morphism canonically
//          encodes the linear map M -> N through the same carrier as `left`.
//
// Composition is written left-to-right everywhere: compose(f, g) applies f
// first.  On carriers that is t_f * t_g for left/maps and t_g * t_f for
// right.  Morphism identity is matrix identity of the canonical carriers
// together with object identity.
// ---------------------------------------------------------------------------

/// Object of the left ideal category, identified by its subspace.
struct LeftObject {
    Subspace m;
};

/// Object of the right ideal category.
struct RightObject {
    Subspace m;
};

struct LeftMorphism {
    Subspace src;
    Mat t;
    Subspace dst;
};

struct RightMorphism {
    Subspace src;
    Mat t;
    Subspace dst;
};

/// Morphism of the category of subspaces and linear maps.  Shares the
/// canonical carrier representation of LeftMorphism.
struct SubspaceMap {
    Subspace src;
    Mat t;
    Subspace dst;
};

/// Retraction, isomorphism, inclusion with compose(compose(q,u),j) equal to
/// the factored morphism.
template <typename M>
struct NormalFactorization {
    M q;
    M u;
    M j;
};

// -- construction -----------------------------------------------------------

/// Validates complement(M) <= kernel(t) and range(t) <= N, then stores the
/// canonical carrier P_M * t.  Throws DomainError naming the failed inclusion.
LeftMorphism make_left_morphism(const Subspace& m, const Mat& t, const Subspace& n,
                                const Tolerances& tol = {});

/// Mirror image: validates complement(N) <= kernel(t) and range(t) <= M,
/// canonical carrier t * P_M.
RightMorphism make_right_morphism(const Subspace& m, const Mat& t, const Subspace& n,
                                  const Tolerances& tol = {});

/// Same constraints and carrier as make_left_morphism.
SubspaceMap make_subspace_map(const Subspace& m, const Mat& t, const Subspace& n,
                              const Tolerances& tol = {});

LeftMorphism left_identity(const Subspace& m);
RightMorphism right_identity(const Subspace& m);
SubspaceMap map_identity(const Subspace& m);

// -- composition and equality ------------------------------------------------

LeftMorphism compose(const LeftMorphism& f, const LeftMorphism& g, const Tolerances& tol = {});
RightMorphism compose(const RightMorphism& f, const RightMorphism& g, const Tolerances& tol = {});
SubspaceMap compose(const SubspaceMap& f, const SubspaceMap& g, const Tolerances& tol = {});

bool morphism_eq(const LeftMorphism& f, const LeftMorphism& g, const Tolerances& tol = {});
bool morphism_eq(const RightMorphism& f, const RightMorphism& g, const Tolerances& tol = {});
bool morphism_eq(const SubspaceMap& f, const SubspaceMap& g, const Tolerances& tol = {});

// -- order structure ----------------------------------------------------------

/// Inclusion morphism for m <= n; carrier P_m.  Throws DomainError otherwise.
LeftMorphism inclusion(const Subspace& m, const Subspace& n, const Tolerances& tol = {});
RightMorphism right_inclusion(const Subspace& m, const Subspace& n, const Tolerances& tol = {});
SubspaceMap map_inclusion(const Subspace& m, const Subspace& n, const Tolerances& tol = {});

/// The unique norm-1 retraction of inclusion(m, n): the morphism (n, P_m, m).
/// Other retractions exist (idempotent carriers with range m below n) but
/// all of them have norm strictly greater than 1.
LeftMorphism retraction_of(const Subspace& m, const Subspace& n, const Tolerances& tol = {});
RightMorphism right_retraction_of(const Subspace& m, const Subspace& n, const Tolerances& tol = {});
SubspaceMap map_retraction_of(const Subspace& m, const Subspace& n, const Tolerances& tol = {});

bool is_inclusion(const LeftMorphism& f, const Tolerances& tol = {});
bool is_inclusion(const RightMorphism& f, const Tolerances& tol = {});
bool is_inclusion(const SubspaceMap& f, const Tolerances& tol = {});

bool is_retraction(const LeftMorphism& f, const Tolerances& tol = {});
bool is_retraction(const RightMorphism& f, const Tolerances& tol = {});
bool is_retraction(const SubspaceMap& f, const Tolerances& tol = {});

// -- isomorphisms and normal factorization ------------------------------------

/// Left / maps: kernel(t) equals complement(src) and range(t) equals dst.
bool is_isomorphism(const LeftMorphism& f, const Tolerances& tol = {});
bool is_isomorphism(const SubspaceMap& f, const Tolerances& tol = {});
/// Right: kernel(t) equals complement(dst) and range(t) equals src.
bool is_isomorphism(const RightMorphism& f, const Tolerances& tol = {});

/// f = compose(compose(q, u), j) through the intermediate subspaces
/// U = complement(kernel(t)) and V = range(t).  The zero morphism factors
/// through the zero subspace.
NormalFactorization<LeftMorphism> normal_factorize(const LeftMorphism& f,
                                                   const Tolerances& tol = {});
NormalFactorization<RightMorphism> normal_factorize(const RightMorphism& f,
                                                    const Tolerances& tol = {});
NormalFactorization<SubspaceMap> normal_factorize(const SubspaceMap& f, const Tolerances& tol = {});

/// The q-u part of the factorization; dst is range(t) (left/maps) or
/// complement(kernel(t)) (right).
LeftMorphism epimorphic_component(const LeftMorphism& f, const Tolerances& tol = {});
RightMorphism epimorphic_component(const RightMorphism& f, const Tolerances& tol = {});
SubspaceMap epimorphic_component(const SubspaceMap& f, const Tolerances& tol = {});

// -- normed hom-set structure --------------------------------------------------

LeftMorphism hom_add(const LeftMorphism& f, const LeftMorphism& g, const Tolerances& tol = {});
RightMorphism hom_add(const RightMorphism& f, const RightMorphism& g, const Tolerances& tol = {});
SubspaceMap hom_add(const SubspaceMap& f, const SubspaceMap& g, const Tolerances& tol = {});

LeftMorphism hom_scale(Cx k, const LeftMorphism& f);
RightMorphism hom_scale(Cx k, const RightMorphism& f);
SubspaceMap hom_scale(Cx k, const SubspaceMap& f);

double hom_norm(const LeftMorphism& f);
double hom_norm(const RightMorphism& f);
double hom_norm(const SubspaceMap& f);

// -- principal ideal order ------------------------------------------------------

/// S*a contained in S*b, decided by range containment.
bool principal_left_leq(const Mat& a, const Mat& b, const Tolerances& tol = {});

/// a*S contained in b*S, decided by kernel containment (kernel(b) <= kernel(a)).
bool principal_right_leq(const Mat& a, const Mat& b, const Tolerances& tol = {});

}  // namespace opcat
