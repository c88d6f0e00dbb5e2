// Command-line front end: one subcommand per verified statement.

#include "slh/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

struct Flags {
    std::string tol = "1e-9";
    std::uint64_t max_boxes = 1000000;
    bool edges_only = false;
    bool faces_only = false;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::uint64_t samples = 1000000;
    std::uint64_t majorization_samples = 10000;
    bool boundary = false;
    std::string functional;
    int n = 3;
    int terms = 8;
    double alpha = 0;
    int membership_extremal = 3;
    int t_steps = 20;
    double radius = 0.95;
    bool json = false;
    bool text = false;
    bool timing = false;
    std::string dump_poly;
};

void add_output(CLI::App* sub, Flags& f) {
    sub->add_flag("--json", f.json, "Emit the report as JSON");
    sub->add_flag("--text", f.text, "Emit the report as an aligned table (default)");
    sub->add_flag("--timing", f.timing, "Include per-claim runtimes");
    sub->add_option("--dump-poly", f.dump_poly, "Write the surrogate polynomials to FILE");
}

void add_box(CLI::App* sub, Flags& f) {
    sub->add_option("--tol", f.tol, "Certification tolerance (rational or decimal)");
    sub->add_option("--max-boxes", f.max_boxes, "Subdivision budget per maximization")->check(CLI::PositiveNumber);
}

void add_sampling(CLI::App* sub, Flags& f) {
    sub->add_option("--seed", f.seed, "Random seed");
    sub->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void dump_polys(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    using namespace slh;
    for (auto tag : {FunctionalTag::H3_1, FunctionalTag::H2_3}) {
        FunctionalId id{tag};
        out << "# " << (tag == FunctionalTag::H3_1 ? "G" : "F") << "(p, x, y)\n";
        write_ratpoly(out, bound_surrogate(id).surrogate);
    }
    for (auto tag : {FunctionalTag::H3_1, FunctionalTag::H2_3, FunctionalTag::ZALCMAN_3}) {
        FunctionalId id{tag};
        out << "# " << id.name() << " raw expansion in p, p2, p3, p4\n";
        write_ratpoly(out, raw_p_expansion(id));
    }
}

void write_report_dir(const slh::VerificationReport& rep, const std::string& name, bool json) {
    const char* dir = std::getenv("SLH_REPORT_DIR");
    if (!dir || !*dir) return;
    std::filesystem::create_directories(dir);
    std::string file = name;
    for (auto& ch : file)
        if (ch == ' ' || ch == '/') ch = '_';
    std::ofstream out(std::filesystem::path(dir) / (file + (json ? ".json" : ".txt")));
    out << (json ? rep.to_json().dump(2) + "\n" : rep.to_text());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and certified checks of coefficient bounds for the lemniscate starlike class"};
    app.require_subcommand(1);
    Flags f;

    std::string target;
    auto* verify = app.add_subcommand("verify", "Verify one statement");
    verify->add_option("target", target, "h31, h23, zalcman or identities")
        ->required()
        ->check(CLI::IsMember({"h31", "h23", "zalcman", "identities"}));
    add_box(verify, f);
    add_sampling(verify, f);
    add_output(verify, f);
    verify->add_flag("--edges-only", f.edges_only, "Only the twelve edge maxima");
    verify->add_flag("--faces-only", f.faces_only, "Only the six face maxima");
    verify->add_option("--majorization-samples", f.majorization_samples, "Exact majorization sample count");

    std::string which = "both";
    auto* edges = app.add_subcommand("edges", "Certified edge maxima of G and F");
    auto* faces = app.add_subcommand("faces", "Certified face maxima of G and F");
    for (auto* sub : {edges, faces}) {
        sub->add_option("--functional", which, "h31, h23 or both")->check(CLI::IsMember({"h31", "h23", "both"}));
        add_box(sub, f);
        add_output(sub, f);
    }

    auto* roots = app.add_subcommand("roots", "Root isolation for the quoted univariate polynomials");
    add_output(roots, f);

    auto* extremal = app.add_subcommand("extremal", "Coefficients of z f'/f = sqrt(1 + z^n)");
    extremal->add_option("--n", f.n, "Exponent n")->check(CLI::PositiveNumber);
    extremal->add_option("--terms", f.terms, "Truncation order")->check(CLI::PositiveNumber);
    add_output(extremal, f);

    auto* membership = app.add_subcommand("membership", "Grid membership checks");
    auto* alpha_opt = membership->add_option("--alpha", f.alpha, "Extra alpha for z/(1 - alpha z)");
    membership->add_option("--extremal", f.membership_extremal, "Exponent n of the extremal function")
        ->check(CLI::PositiveNumber);
    add_output(membership, f);

    auto* convolution = app.add_subcommand("convolution", "Convolution kernel and nonvanishing checks");
    convolution->add_option("--t-steps", f.t_steps, "t grid is 2k/K for k = 1..K-1")->check(CLI::Range(2, 100000));
    convolution->add_option("--radius", f.radius, "Largest |z| on the grid")->check(CLI::Range(0.0, 0.99));
    add_output(convolution, f);

    auto* oracle = app.add_subcommand("oracle", "Randomized falsification of the sharp bounds");
    oracle->add_option("--functional", f.functional, "h31, h23, zalcman or hankel:q,n (default: the three bounds)");
    oracle->add_option("--samples", f.samples, "Sample count")->check(CLI::PositiveNumber);
    oracle->add_flag("--boundary", f.boundary, "Also sample disk parameters on the unit circle");
    add_sampling(oracle, f);
    add_output(oracle, f);

    auto* all = app.add_subcommand("all", "Every check");
    add_box(all, f);
    add_sampling(all, f);
    add_output(all, f);
    all->add_option("--samples", f.samples, "Oracle sample count")->check(CLI::PositiveNumber);
    all->add_flag("--boundary", f.boundary, "Also sample disk parameters on the unit circle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    slh::VerifyOptions opts;
    slh::VerificationReport rep;
    try {
        opts.tol = slh::parse_rational(f.tol);
        if (opts.tol <= 0) throw std::invalid_argument("--tol must be positive");
        opts.max_boxes = f.max_boxes;
        opts.edges_only = f.edges_only;
        opts.faces_only = f.faces_only;
        opts.seed = f.seed;
        opts.jobs = f.jobs;
        opts.samples = f.samples;
        opts.majorization_samples = f.majorization_samples;
        opts.boundary = f.boundary;
        if (!f.functional.empty()) opts.oracle_functionals = {slh::parse_functional(f.functional)};
        opts.extremal_n = f.n;
        opts.extremal_terms = f.terms;
        if (alpha_opt->count() > 0) opts.alpha = f.alpha;
        opts.membership_extremal = f.membership_extremal;
        opts.t_steps = f.t_steps;
        opts.radius = f.radius;
        if (!f.dump_poly.empty()) dump_polys(f.dump_poly);

        auto ids = [&]() -> std::vector<slh::FunctionalId> {
            if (which == "h31") return {{slh::FunctionalTag::H3_1}};
            if (which == "h23") return {{slh::FunctionalTag::H2_3}};
            return {{slh::FunctionalTag::H3_1}, {slh::FunctionalTag::H2_3}};
        };

        if (verify->parsed()) {
            if (target == "h31") rep = slh::verify_bound({slh::FunctionalTag::H3_1}, opts);
            else if (target == "h23") rep = slh::verify_bound({slh::FunctionalTag::H2_3}, opts);
            else if (target == "zalcman") rep = slh::verify_zalcman(opts);
            else rep = slh::verify_identities(opts);
        } else if (edges->parsed()) {
            rep.command = "edges";
            for (const auto& id : ids()) rep.append(slh::verify_edges(id, opts));
        } else if (faces->parsed()) {
            rep.command = "faces";
            for (const auto& id : ids()) rep.append(slh::verify_faces(id, opts));
        } else if (roots->parsed()) {
            rep = slh::verify_roots(opts);
        } else if (extremal->parsed()) {
            rep = slh::verify_extremal(f.n, f.terms);
        } else if (membership->parsed()) {
            rep = slh::verify_membership(opts);
        } else if (convolution->parsed()) {
            rep = slh::verify_convolution(opts);
        } else if (oracle->parsed()) {
            rep = slh::verify_oracle(opts);
        } else {
            rep = slh::verify_all(opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    rep.settings = opts.settings();
    rep.timing = f.timing;
    if (f.json) std::cout << rep.to_json().dump(2) << "\n";
    else std::cout << rep.to_text();
    write_report_dir(rep, rep.command, f.json);
    return rep.exit_code();
}
