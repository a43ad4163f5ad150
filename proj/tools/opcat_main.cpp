// opcat: load matrices, subspaces, morphisms and cones from JSON files, run
// single operations on them, or execute the seeded verification suites.
//
// Exit codes: 0 success / all properties hold, 1 a property or constraint
// failed, 2 usage error.

#include <CLI11.hpp>
#include <iostream>

#include "opcat/suites.hpp"

namespace {

using opcat::io::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

opcat::Field parse_field(const std::string& s) {
    if (s == "real") return opcat::Field::Real;
    if (s == "complex") return opcat::Field::Complex;
    throw opcat::UsageError("unknown field '" + s + "' (expected real or complex)");
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        opcat::io::save_json(out_path, j);
}

struct Options {
    std::string field = "real";
    int dim = 6;
    int samples = 200;
    std::uint64_t seed = 0;
    double eps_eq = 1e-8;
    double eps_rank = 1e-10;
    std::vector<std::string> suites;
    bool all_suites = false;
    std::vector<int> profile_dims;
    std::vector<std::string> inputs;
    std::string out;
    std::string functor;

    opcat::Tolerances tol() const {
        opcat::Tolerances t{eps_rank, eps_eq};
        t.validate();
        return t;
    }

    const std::string& input(size_t i, size_t need) const {
        if (inputs.size() != need)
            throw opcat::UsageError("expected " + std::to_string(need) + " input file(s), got " +
                                    std::to_string(inputs.size()));
        return inputs[i];
    }
};

int cmd_run_suite(const Options& opt) {
    opcat::SuiteConfig cfg;
    cfg.field = parse_field(opt.field);
    cfg.ambient_dim = opt.dim;
    cfg.samples = opt.samples;
    cfg.seed = opt.seed;
    cfg.tol = opt.tol();
    if (!opt.all_suites) cfg.suites = opt.suites;
    if (!opt.profile_dims.empty()) cfg.profile_dims = opt.profile_dims;

    opcat::VerificationReport report = opcat::run_suites(cfg);
    emit(opcat::report_to_json(report), opt.out);
    if (!opt.out.empty()) {
        for (const auto& r : report.results)
            std::cerr << (r.pass ? "pass " : "FAIL ") << r.name
                      << "  max_residual=" << r.max_residual << "\n";
    }
    return report.all_pass ? 0 : kExitFail;
}

int cmd_factorize(const Options& opt) {
    const auto tol = opt.tol();
    auto any = opcat::io::morphism_from_json(opcat::io::load_json(opt.input(0, 1)), tol);

    json q, u, j;
    double residual = 0.0;
    auto pack = [&](const auto& f) {
        auto nf = normal_factorize(f, tol);
        residual = compose(compose(nf.q, nf.u, tol), nf.j, tol).t.rel_distance(f.t);
        q = opcat::io::morphism_to_json(nf.q);
        u = opcat::io::morphism_to_json(nf.u);
        j = opcat::io::morphism_to_json(nf.j);
    };
    if (auto* f = std::get_if<opcat::LeftMorphism>(&any)) {
        pack(*f);
    } else if (auto* fr = std::get_if<opcat::RightMorphism>(&any)) {
        pack(*fr);
    } else if (auto* fm = std::get_if<opcat::SubspaceMap>(&any)) {
        pack(*fm);
    } else {
        throw opcat::DomainError(
            "factorize: dual maps are not factorized; pass a left, right or fh morphism");
    }

    if (opt.out.empty()) {
        std::cout << json{{"q", q}, {"u", u}, {"j", j}, {"residual", residual}}.dump(2) << '\n';
    } else {
        opcat::io::save_json(opt.out + ".q.json", q);
        opcat::io::save_json(opt.out + ".u.json", u);
        opcat::io::save_json(opt.out + ".j.json", j);
        std::cout << json{{"residual", residual},
                          {"files",
                           {opt.out + ".q.json", opt.out + ".u.json", opt.out + ".j.json"}}}
                         .dump(2)
                  << '\n';
    }
    if (residual > opt.eps_eq) {
        std::cerr << "factorize: reconstruction residual " << residual << " exceeds " << opt.eps_eq
                  << "\n";
        return kExitFail;
    }
    return 0;
}

int cmd_compose(const Options& opt) {
    const auto tol = opt.tol();
    auto a = opcat::io::morphism_from_json(opcat::io::load_json(opt.input(0, 2)), tol);
    auto b = opcat::io::morphism_from_json(opcat::io::load_json(opt.input(1, 2)), tol);
    if (a.index() != b.index())
        throw opcat::DomainError("compose: the two morphisms have different kinds");
    json out = std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            return opcat::io::morphism_to_json(compose(f, std::get<T>(b), tol));
        },
        a);
    emit(out, opt.out);
    return 0;
}

int cmd_norm(const Options& opt) {
    const auto tol = opt.tol();
    const json j = opcat::io::load_json(opt.input(0, 1));
    double norm = 0.0;
    if (j.contains("entries")) {
        norm = opcat::io::matrix_from_json(j).operator_norm();
    } else if (j.contains("kind")) {
        auto any = opcat::io::morphism_from_json(j, tol);
        norm = std::visit([](const auto& f) { return hom_norm(f); }, any);
    } else if (j.contains("flavor")) {
        norm = opcat::cone_norm(opcat::io::cone_from_json(j, tol));
    } else {
        throw opcat::DomainError("norm: file is not a matrix, morphism or cone");
    }
    emit(json{{"norm", norm}}, opt.out);
    return 0;
}

int cmd_cone_product(const Options& opt) {
    const auto tol = opt.tol();
    opcat::Cone c1 = opcat::io::cone_from_json(opcat::io::load_json(opt.input(0, 2)), tol);
    opcat::Cone c2 = opcat::io::cone_from_json(opcat::io::load_json(opt.input(1, 2)), tol);
    emit(opcat::io::cone_to_json(opcat::cone_product(c1, c2, tol)), opt.out);
    return 0;
}

int cmd_functor_apply(const Options& opt) {
    const auto tol = opt.tol();
    const std::string& name = opt.functor;
    auto any = opcat::io::morphism_from_json(opcat::io::load_json(opt.input(0, 1)), tol);

    auto wrong_kind = [&]() -> opcat::DomainError {
        return opcat::DomainError("functor-apply: input morphism kind does not match functor '" +
                                  name + "'");
    };

    json out;
    if (name == "left-to-maps") {
        auto* f = std::get_if<opcat::LeftMorphism>(&any);
        if (!f) throw wrong_kind();
        out = opcat::io::morphism_to_json(left_to_map(*f));
    } else if (name == "maps-to-left") {
        auto* f = std::get_if<opcat::SubspaceMap>(&any);
        if (!f) throw wrong_kind();
        out = opcat::io::morphism_to_json(map_to_left(*f));
    } else if (name == "maps-to-dual") {
        auto* f = std::get_if<opcat::SubspaceMap>(&any);
        if (!f) throw wrong_kind();
        out = opcat::io::morphism_to_json(map_to_dual(*f));
    } else if (name == "right-to-dual") {
        auto* f = std::get_if<opcat::RightMorphism>(&any);
        if (!f) throw wrong_kind();
        out = opcat::io::morphism_to_json(right_to_dual(*f));
    } else if (name == "left-to-right") {
        auto* f = std::get_if<opcat::LeftMorphism>(&any);
        if (!f) throw wrong_kind();
        out = opcat::io::morphism_to_json(left_to_right(*f));
    } else if (name == "right-to-left") {
        auto* f = std::get_if<opcat::RightMorphism>(&any);
        if (!f) throw wrong_kind();
        out = opcat::io::morphism_to_json(right_to_left(*f));
    } else {
        throw opcat::UsageError(
            "unknown functor '" + name +
            "'; available: left-to-maps maps-to-left maps-to-dual right-to-dual "
            "left-to-right right-to-left");
    }
    emit(out, opt.out);
    return 0;
}

int cmd_regularity_witness(const Options& opt) {
    const auto tol = opt.tol();
    opcat::Mat t = opcat::io::matrix_from_json(opcat::io::load_json(opt.input(0, 1)));
    opcat::Mat w = t.pseudoinverse(tol);
    const double residual = (t * w * t).rel_distance(t);
    emit(json{{"witness", opcat::io::matrix_to_json(w)}, {"residual", residual}}, opt.out);
    if (residual > opt.eps_eq) {
        std::cerr << "regularity-witness: residual " << residual << " exceeds " << opt.eps_eq
                  << "\n";
        return kExitFail;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for the ideal categories of finite-rank operators"};
    app.require_subcommand(1);

    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field", opt.field, "scalar field: real or complex");
        cmd->add_option("--dim", opt.dim, "ambient dimension");
        cmd->add_option("--seed", opt.seed, "master seed");
        cmd->add_option("--samples", opt.samples, "samples per property");
        cmd->add_option("--eps", opt.eps_eq, "equality tolerance");
        cmd->add_option("--eps-rank", opt.eps_rank, "rank cutoff tolerance");
        cmd->add_option("--in", opt.inputs, "input file(s)");
        cmd->add_option("--out", opt.out, "output file (or prefix for factorize)");
    };

    CLI::App* run = app.add_subcommand("run_suite", "run verification suites");
    add_common(run);
    run->add_flag("--all", opt.all_suites, "run every suite");
    run->add_option("--suites", opt.suites, "comma-separated suite names")->delimiter(',');
    run->add_option("--dims", opt.profile_dims, "dimensions for the norm profile")->delimiter(',');
    run->callback([&] { handler = cmd_run_suite; });

    CLI::App* fac = app.add_subcommand("factorize", "normal factorization of a morphism file");
    add_common(fac);
    fac->callback([&] { handler = cmd_factorize; });

    CLI::App* comp = app.add_subcommand("compose", "compose two morphism files");
    add_common(comp);
    comp->callback([&] { handler = cmd_compose; });

    CLI::App* nrm = app.add_subcommand("norm", "norm of a matrix, morphism or cone file");
    add_common(nrm);
    nrm->callback([&] { handler = cmd_norm; });

    CLI::App* cp = app.add_subcommand("cone-product", "product of two cone files");
    add_common(cp);
    cp->callback([&] { handler = cmd_cone_product; });

    CLI::App* fa = app.add_subcommand("functor-apply", "apply a category functor to a morphism");
    add_common(fa);
    fa->add_option("--name", opt.functor, "functor name")->required();
    fa->callback([&] { handler = cmd_functor_apply; });

    CLI::App* rw = app.add_subcommand("regularity-witness",
                                      "pseudoinverse witness for an operator matrix file");
    add_common(rw);
    rw->callback([&] { handler = cmd_regularity_witness; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return handler ? handler(opt) : kExitUsage;
    } catch (const opcat::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const opcat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
