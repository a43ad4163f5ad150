#include "opcat/io.hpp"

#include <fstream>

namespace opcat::io {

namespace {

Field field_from_json(const json& j) {
    const std::string f = j.at("field").get<std::string>();
    if (f == "real") return Field::Real;
    if (f == "complex") return Field::Complex;
    throw DomainError("matrix file: unknown field '" + f + "'");
}

}  // namespace

json matrix_to_json(const Mat& a) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            entries.push_back({a.at(i, j).real(), a.at(i, j).imag()});
    return {{"field", field_name(a.field())},
            {"rows", a.rows()},
            {"cols", a.cols()},
            {"entries", entries}};
}

Mat matrix_from_json(const json& j) {
    const Field f = field_from_json(j);
    const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
    const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
    if (rows < 0 || cols < 0) throw DomainError("matrix file: negative dimensions");
    const json& entries = j.at("entries");
    if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
        throw DomainError("matrix file: expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(entries.size()));
    Eigen::MatrixXcd m(rows, cols);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index jj = 0; jj < cols; ++jj, ++k) {
            const json& e = entries[k];
            if (!e.is_array() || e.size() != 2)
                throw DomainError("matrix file: entries must be [re, im] pairs");
            m(i, jj) = Cx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return Mat(f, std::move(m));  // the Mat constructor rejects real-tagged complex data
}

json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Subspace subspace_from_json(const json& j, const Tolerances& tol) {
    return Subspace::span(matrix_from_json(j), tol);
}

namespace {

json morphism_json(const char* kind, const Subspace& src, const Mat& t, const Subspace& dst) {
    return {{"kind", kind},
            {"src", subspace_to_json(src)},
            {"t", matrix_to_json(t)},
            {"dst", subspace_to_json(dst)}};
}

}  // namespace

json morphism_to_json(const LeftMorphism& f) { return morphism_json("left", f.src, f.t, f.dst); }
json morphism_to_json(const RightMorphism& f) { return morphism_json("right", f.src, f.t, f.dst); }
json morphism_to_json(const SubspaceMap& f) { return morphism_json("fh", f.src, f.t, f.dst); }
json morphism_to_json(const DualMap& f) {
    return morphism_json("dual", f.src_base, f.d, f.dst_base);
}

AnyMorphism morphism_from_json(const json& j, const Tolerances& tol) {
    const std::string kind = j.at("kind").get<std::string>();
    const Subspace src = subspace_from_json(j.at("src"), tol);
    const Subspace dst = subspace_from_json(j.at("dst"), tol);
    const Mat t = matrix_from_json(j.at("t"));
    if (kind == "left") return make_left_morphism(src, t, dst, tol);
    if (kind == "right") return make_right_morphism(src, t, dst, tol);
    if (kind == "fh") return make_subspace_map(src, t, dst, tol);
    if (kind == "dual") return make_dual_map(src, t, dst, tol);
    throw DomainError("morphism file: unknown kind '" + kind + "'");
}

LeftMorphism left_morphism_from_json(const json& j, const Tolerances& tol) {
    auto any = morphism_from_json(j, tol);
    if (auto* f = std::get_if<LeftMorphism>(&any)) return *f;
    throw DomainError("morphism file: expected kind 'left'");
}

RightMorphism right_morphism_from_json(const json& j, const Tolerances& tol) {
    auto any = morphism_from_json(j, tol);
    if (auto* f = std::get_if<RightMorphism>(&any)) return *f;
    throw DomainError("morphism file: expected kind 'right'");
}

json cone_to_json(const Cone& c) {
    return {{"flavor", flavor_name(c.flavor())}, {"gen", matrix_to_json(c.gen())}};
}

Cone cone_from_json(const json& j, const Tolerances& tol) {
    return Cone(flavor_from_name(j.at("flavor").get<std::string>()),
                matrix_from_json(j.at("gen")), tol);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

}  // namespace opcat::io
