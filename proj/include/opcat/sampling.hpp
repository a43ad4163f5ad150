#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "opcat/morphism.hpp"

namespace opcat {

/// Deterministic random stream.  The uniform and Gaussian mappings are spelt
/// out here instead of using std distributions so that reports generated from
/// the same seed are byte-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform();

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);

    /// Standard Gaussian (Box-Muller).
    double gauss();

    /// Gaussian scalar of the field (complex: independent re and im).
    Cx scalar(Field f);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Per-sample seed: hash of (master seed, suite name, sample index), so
/// results do not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::string_view suite, std::uint64_t index);

/// Gaussian matrix.
Mat random_mat(Rng& rng, Field f, Eigen::Index rows, Eigen::Index cols);

/// Square operator of the given rank (product of two Gaussian factors).
Mat random_operator(Rng& rng, Field f, Eigen::Index n, Eigen::Index rank);

/// Operator with rank drawn uniformly from 1..n.
Mat random_operator(Rng& rng, Field f, Eigen::Index n);

/// Random subspace of the given dimension.
Subspace random_subspace(Rng& rng, Field f, Eigen::Index ambient, Eigen::Index dim,
                         const Tolerances& tol = {});

/// Random subspace with dimension uniform in 0..ambient.
Subspace random_subspace(Rng& rng, Field f, Eigen::Index ambient, const Tolerances& tol = {});

/// Random pair m <= n with n of dimension at least min_dim.
struct NestedPair {
    Subspace inner;
    Subspace outer;
};
NestedPair random_nested_pair(Rng& rng, Field f, Eigen::Index ambient, const Tolerances& tol = {});

/// Random subspace of a given outer space.
Subspace random_subspace_of(Rng& rng, const Subspace& outer, Eigen::Index dim,
                            const Tolerances& tol = {});

/// Random valid morphisms: src and dst drawn at random, the carrier is a
/// random operator squeezed between the two projections (with an inner rank
/// drawn at random, so proper factorizations occur).
LeftMorphism random_left_morphism(Rng& rng, Field f, Eigen::Index ambient,
                                  const Tolerances& tol = {});
RightMorphism random_right_morphism(Rng& rng, Field f, Eigen::Index ambient,
                                    const Tolerances& tol = {});
SubspaceMap random_subspace_map(Rng& rng, Field f, Eigen::Index ambient,
                                const Tolerances& tol = {});

/// Carrier for the hom-set of (m, n): P_m * G * P_n for Gaussian G.
Mat random_hom_carrier(Rng& rng, const Subspace& m, const Subspace& n);

}  // namespace opcat
