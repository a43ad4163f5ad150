#include "opcat/sampling.hpp"

#include <cmath>

namespace opcat {

double Rng::uniform() {
    // 53 random bits mapped to [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw UsageError("uniform_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
}

double Rng::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Cx Rng::scalar(Field f) {
    if (f == Field::Real) return Cx(gauss(), 0.0);
    return Cx(gauss() * M_SQRT1_2, gauss() * M_SQRT1_2);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view suite, std::uint64_t index) {
    return splitmix64(splitmix64(master ^ fnv1a(suite)) ^ index);
}

Mat random_mat(Rng& rng, Field f, Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.scalar(f);
    return Mat(f, std::move(m));
}

Mat random_operator(Rng& rng, Field f, Eigen::Index n, Eigen::Index rank) {
    if (rank < 0 || rank > n) throw UsageError("random_operator: rank out of range");
    if (rank == 0) return Mat::zero(f, n, n);
    return random_mat(rng, f, n, rank) * random_mat(rng, f, rank, n);
}

Mat random_operator(Rng& rng, Field f, Eigen::Index n) {
    return random_operator(rng, f, n, rng.uniform_int(1, static_cast<int>(n)));
}

Subspace random_subspace(Rng& rng, Field f, Eigen::Index ambient, Eigen::Index dim,
                         const Tolerances& tol) {
    if (dim == 0) return Subspace::zero(f, ambient);
    return Subspace::span(random_mat(rng, f, ambient, dim), tol);
}

Subspace random_subspace(Rng& rng, Field f, Eigen::Index ambient, const Tolerances& tol) {
    return random_subspace(rng, f, ambient, rng.uniform_int(0, static_cast<int>(ambient)), tol);
}

NestedPair random_nested_pair(Rng& rng, Field f, Eigen::Index ambient, const Tolerances& tol) {
    const int outer_dim = rng.uniform_int(1, static_cast<int>(ambient));
    Subspace outer = random_subspace(rng, f, ambient, outer_dim, tol);
    const int inner_dim = rng.uniform_int(0, outer_dim);
    return {random_subspace_of(rng, outer, inner_dim, tol), std::move(outer)};
}

Subspace random_subspace_of(Rng& rng, const Subspace& outer, Eigen::Index dim,
                            const Tolerances& tol) {
    if (dim > outer.dim()) throw UsageError("random_subspace_of: dim exceeds the outer dimension");
    if (dim == 0) return Subspace::zero(outer.field(), outer.ambient());
    Mat coeff = random_mat(rng, outer.field(), outer.dim(), dim);
    return Subspace::span(outer.basis() * coeff, tol);
}

Mat random_hom_carrier(Rng& rng, const Subspace& m, const Subspace& n) {
    const Eigen::Index inner = std::min(m.dim(), n.dim());
    const Eigen::Index r = inner == 0 ? 0 : rng.uniform_int(0, static_cast<int>(inner));
    Mat g = random_operator(rng, m.field(), m.ambient(), r);
    return m.projection() * g * n.projection();
}

LeftMorphism random_left_morphism(Rng& rng, Field f, Eigen::Index ambient,
                                  const Tolerances& tol) {
    Subspace m = random_subspace(rng, f, ambient, tol);
    Subspace n = random_subspace(rng, f, ambient, tol);
    return make_left_morphism(m, random_hom_carrier(rng, m, n), n, tol);
}

RightMorphism random_right_morphism(Rng& rng, Field f, Eigen::Index ambient,
                                    const Tolerances& tol) {
    Subspace m = random_subspace(rng, f, ambient, tol);
    Subspace n = random_subspace(rng, f, ambient, tol);
    // right constraints mirror the left: squeeze between P_n on the left and
    // P_m on the right
    const Eigen::Index inner = std::min(m.dim(), n.dim());
    const Eigen::Index r = inner == 0 ? 0 : rng.uniform_int(0, static_cast<int>(inner));
    Mat g = random_operator(rng, f, ambient, r);
    return make_right_morphism(m, n.projection() * g * m.projection(), n, tol);
}

SubspaceMap random_subspace_map(Rng& rng, Field f, Eigen::Index ambient, const Tolerances& tol) {
    Subspace m = random_subspace(rng, f, ambient, tol);
    Subspace n = random_subspace(rng, f, ambient, tol);
    return make_subspace_map(m, random_hom_carrier(rng, m, n), n, tol);
}

}  // namespace opcat
