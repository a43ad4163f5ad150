#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace opcat {

/// Scalar field of the ambient space: the reals or the complex numbers.
/// Real data is stored in the same complex carrier with imaginary part
/// exactly zero, so both fields run through one code path.
enum class Field { Real, Complex };

inline const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

using Cx = std::complex<double>;

/// A tagged scalar. Real-tagged values keep imag == 0 exactly.
struct Scalar {
    Field field = Field::Real;
    Cx value{0.0, 0.0};

    static Scalar real(double re) { return {Field::Real, Cx{re, 0.0}}; }
    static Scalar complex(double re, double im) { return {Field::Complex, Cx{re, im}}; }
};

inline Scalar conj(const Scalar& s) { return {s.field, std::conj(s.value)}; }

/// Numerical thresholds. Both are relative to the largest singular value
/// involved in the quantity under test.
///   eps_rank  cutoff deciding numerical rank from singular values
///   eps_eq    tolerance for matrix / subspace / morphism equality
struct Tolerances {
    double eps_rank = 1e-10;
    double eps_eq = 1e-8;

    void validate() const;
};

// ---------------------------------------------------------------------------
// Error types. Operations throw; the CLI maps them onto its exit codes.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dimension mismatch between matrix or subspace operands.
struct ShapeError : Error {
    using Error::Error;
};

/// A constraint required by a constructor or operation failed
/// (for morphisms the message names the failed inclusion).
struct DomainError : Error {
    using Error::Error;
};

/// Attempt to compose morphisms whose objects do not match.
struct CompositionError : Error {
    using Error::Error;
};

/// Cone reconstruction received mutually inconsistent samples.
struct ReconstructionError : Error {
    using Error::Error;
};

/// Numerical routine failed to converge or produced invalid output.
struct NumericError : Error {
    using Error::Error;
};

/// Invalid configuration or command-line usage.
struct UsageError : Error {
    using Error::Error;
};

inline void Tolerances::validate() const {
    if (!(0.0 < eps_rank && eps_rank <= eps_eq && eps_eq < 1.0))
        throw UsageError("tolerances must satisfy 0 < eps_rank <= eps_eq < 1, got eps_rank=" +
                         std::to_string(eps_rank) + " eps_eq=" + std::to_string(eps_eq));
}

}  // namespace opcat
