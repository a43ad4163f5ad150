#pragma once

#include "opcat/morphism.hpp"

namespace opcat {

/// Object of the category of dual subspaces: the space of functionals
/// { <.,m> : m in base }.  Finite dimension makes the Riesz correspondence
/// lossless, so the object is carried by its base subspace plus this tag.
struct DualObject {
    Subspace base;
};

/// Morphism between dual subspaces, carried by the matrix of its action in
/// Riesz coordinates.  For a map base(M) -> base(N) the carrier d satisfies
/// P_N * d = d and d * P_M = d; composition multiplies carriers on the left,
/// like the right ideal category.
struct DualMap {
    Subspace src_base;
    Mat d;
    Subspace dst_base;
};

DualMap make_dual_map(const Subspace& m, const Mat& d, const Subspace& n,
                      const Tolerances& tol = {});
DualMap dual_identity(const Subspace& m);
DualMap compose(const DualMap& f, const DualMap& g, const Tolerances& tol = {});
bool morphism_eq(const DualMap& f, const DualMap& g, const Tolerances& tol = {});
bool is_inclusion(const DualMap& f, const Tolerances& tol = {});

DualMap hom_add(const DualMap& f, const DualMap& g, const Tolerances& tol = {});
DualMap hom_scale(Cx k, const DualMap& f);
double hom_norm(const DualMap& f);

// ---------------------------------------------------------------------------
// The four structure-preserving functors between the categories.  Each is
// bijective on objects and, on hom-sets, a linear or conjugate-linear
// isometry; the verification suites exercise exactly those properties.
// ---------------------------------------------------------------------------

/// Left ideal category -> subspace maps: S*P_M goes to M, a morphism keeps
/// its canonical carrier.  Linear isometry on hom-sets.
SubspaceMap left_to_map(const LeftMorphism& f);
Subspace left_to_map_object(const LeftObject& x);

/// Subspace maps -> left ideal category, inverse of left_to_map on canonical
/// carriers.
LeftMorphism map_to_left(const SubspaceMap& f);
LeftObject map_to_left_object(const Subspace& m);

/// The same functor applied to an arbitrary ambient matrix standing for the
/// map M -> N: projects to the canonical carrier P_M * t * P_N.
LeftMorphism restrict_to_left(const Subspace& m, const Mat& ambient, const Subspace& n,
                              const Tolerances& tol = {});

/// Subspace maps -> dual maps: M goes to its dual, the carrier to
/// P_N * adjoint(t) * P_M.  Conjugate-linear isometry on hom-sets.
DualMap map_to_dual(const SubspaceMap& f);
DualObject map_to_dual_object(const Subspace& m);

/// Right ideal category -> dual maps: P_M*S goes to the dual of M and the
/// carrier transfers unchanged.  Linear isometry on hom-sets.
DualMap right_to_dual(const RightMorphism& f);
DualObject right_to_dual_object(const RightObject& x);

/// Left ideal category -> right ideal category through the adjoint:
/// S*P_M goes to P_M*S, the carrier to adjoint(t).  Conjugate-linear
/// isometry on hom-sets.
RightMorphism left_to_right(const LeftMorphism& f);
RightObject left_to_right_object(const LeftObject& x);

/// Inverse of left_to_right.
LeftMorphism right_to_left(const RightMorphism& f);

}  // namespace opcat
