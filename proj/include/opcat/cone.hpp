#pragma once

#include <functional>
#include <vector>

#include "opcat/functors.hpp"

namespace opcat {

/// Which category a cone lives in.  The names are also the wire format.
enum class ConeFlavor { fh, left, right };

const char* flavor_name(ConeFlavor f);
ConeFlavor flavor_from_name(const std::string& s);

/// A normal cone represented by its generating operator.  The component at a
/// subspace M is computed on demand:
///
///   fh / left   carrier P_M * gen,            M -> range(gen)
///   right       carrier adjoint(P_M * gen),   M -> range(gen)
///
/// The vertex is range(gen) for every flavor.  A right-flavor cone with
/// generator T stands for the cone the adjoint transport produces from the
/// left-flavor cone of T, which is why its carriers are adjoints.
class Cone {
public:
    Cone(ConeFlavor flavor, Mat gen, const Tolerances& tol = {});

    ConeFlavor flavor() const { return flavor_; }
    const Mat& gen() const { return gen_; }
    const Subspace& vertex() const { return vertex_; }
    Field field() const { return gen_.field(); }
    Eigen::Index ambient() const { return gen_.rows(); }

private:
    ConeFlavor flavor_;
    Mat gen_;
    Subspace vertex_;
};

/// Component carrier at m, before typing (see the table above).
Mat cone_component_carrier(const Cone& c, const Subspace& m);

SubspaceMap cone_component_fh(const Cone& c, const Subspace& m, const Tolerances& tol = {});
LeftMorphism cone_component_left(const Cone& c, const Subspace& m, const Tolerances& tol = {});
RightMorphism cone_component_right(const Cone& c, const Subspace& m, const Tolerances& tol = {});

/// Compatibility law for m <= n: including m into n and then taking the
/// component at n equals the component at m.  Requires leq(m, n).
bool cone_compatibility_check(const Cone& c, const Subspace& m, const Subspace& n,
                              const Tolerances& tol = {});

/// Semigroup product; the generator of the product is gen1 * gen2 and agrees
/// with the pointwise product at every subspace.
Cone cone_product(const Cone& c1, const Cone& c2, const Tolerances& tol = {});

/// Result of evaluating the pointwise product at one subspace.
struct PointwiseProduct {
    Mat carrier;
    Subspace dst;
};

/// Pointwise product at m: the component of the first cone at m composed
/// with the epimorphic component of the second cone's component at the first
/// vertex.  This is the independent route the suites compare against
/// cone_product.
PointwiseProduct pointwise_product(const Cone& c1, const Cone& c2, const Subspace& m,
                                   const Tolerances& tol = {});

/// Linear structure transported through the generators.  Scaling a
/// right-flavor cone by k multiplies its generator by conj(k), so that the
/// component carriers scale by k.
Cone cone_add(const Cone& c1, const Cone& c2, const Tolerances& tol = {});
Cone cone_scale(Cx k, const Cone& c, const Tolerances& tol = {});

/// Uniform bound on the component norms, attained where the projection acts
/// as the identity on the generator's column span: the generator norm.
double cone_norm(const Cone& c);

bool cone_eq(const Cone& c1, const Cone& c2, const Tolerances& tol = {});

/// A cone together with its boundedness certificate.
struct BoundedCone {
    Cone cone;
    double bound;
};

BoundedCone bounded(Cone c);
BoundedCone bounded_add(const BoundedCone& a, const BoundedCone& b, const Tolerances& tol = {});
BoundedCone bounded_scale(Cx k, const BoundedCone& a, const Tolerances& tol = {});
BoundedCone bounded_multiply(const BoundedCone& a, const BoundedCone& b,
                             const Tolerances& tol = {});
double bounded_norm(const BoundedCone& a);

// -- reconstruction -------------------------------------------------------------

/// Rebuild the unique generator from sampled components.  The samples must
/// contain the lines of a basis of the ambient space; every sample is then
/// checked against the reconstructed cone and the common vertex, and a
/// ReconstructionError reports any inconsistency.
Cone cone_from_fh_samples(const std::vector<SubspaceMap>& samples, const Tolerances& tol = {});
Cone cone_from_left_samples(const std::vector<LeftMorphism>& samples, const Tolerances& tol = {});
Cone cone_from_right_samples(const std::vector<RightMorphism>& samples, const Tolerances& tol = {});

// -- norm growth of a generator family -------------------------------------------

/// Norms of family(n) for each requested dimension.
std::vector<double> boundedness_profile(const std::function<Mat(int)>& family,
                                        const std::vector<int>& dims);

/// Truncation to K^n of the operator sending the k-th basis vector to
/// k times the first one; its norm sqrt(1^2 + ... + n^2) diverges with n.
Mat ramp_operator(Field f, int n);

}  // namespace opcat
