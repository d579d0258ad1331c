// cactus5: enumeration, transformation graph, verification and numeric
// classification of generic degree-5 cacti.
//
// Exit codes: 0 success, 1 failed verification, 2 usage error, 3 data or
// genericity error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cactus5/boundary.hpp"
#include "cactus5/canonical.hpp"
#include "cactus5/io.hpp"
#include "cactus5/monodromy.hpp"
#include "cactus5/numeric.hpp"
#include "cactus5/ribbon.hpp"
#include "cactus5/transforms.hpp"
#include "cactus5/verify.hpp"

namespace {

using namespace cactus5;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(Errc::BadInput, "cannot open output file: " + out_path);
    out << text;
}

Equivalence parse_equivalence(const std::string& s) {
    if (s == "fixed") return Equivalence::fixed_labels;
    if (s == "rotated") return Equivalence::with_rotation;
    throw Error(Errc::BadInput, "equivalence must be 'fixed' or 'rotated'");
}

FaceOrientation parse_orientation(const std::string& s) {
    if (s == "right") return FaceOrientation::right;
    return FaceOrientation::left; // "left" and "auto"
}

std::string graph_text(const RibbonGraph& g, FaceOrientation o) {
    std::ostringstream out;
    out << g.n_white() << " white + " << g.n_black() << " black vertices, " << g.n_edges() << " edges, genus "
        << genus(g, o) << "\n";
    auto wd = g.white_degrees();
    auto bd = g.black_degrees();
    out << "white degrees:";
    for (int d : wd) out << " " << d;
    out << "\nblack degrees:";
    for (int d : bd) out << " " << d;
    out << "\nfaces (" << (o == FaceOrientation::left ? "left" : "right") << "):\n";
    for (const auto& f : faces(g, o)) out << "  len " << f.length() << ": " << walk_to_string(g, f) << "\n";
    return out.str();
}

PolynomialSpec read_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::BadInput, "cannot open polynomial file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_polynomial_text(buf.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-5 plane cactus toolkit"};
    app.set_version_flag("--version", "1.0.0");

    std::string family = "first", equivalence = "rotated", orientation = "auto";
    std::string format = "text", out_path, input_path;
    int degree = 5, index = -1, samples = 100, steps = 64;
    unsigned long long seed = cactus5::kDefaultSampleSeed;
    double tol_scale = 1.0;
    bool use_fixture = false;

    CLI::App* verify = app.add_subcommand("verify", "run every library self-check");
    verify->add_option("--samples", samples, "random polynomials to classify");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--mesh", steps, "continuation steps per probe");
    verify->add_option("--tol", tol_scale, "tolerance scale factor");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list cactus classes of one family");
    enumerate->add_option("--family", family, "first|second")->required();
    enumerate->add_option("--degree", degree, "polynomial degree (first family only)");
    enumerate->add_option("--equivalence", equivalence, "fixed|rotated");
    enumerate->add_option("--format", format, "text|json");
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* graph = app.add_subcommand("graph", "transformation ribbon graph");
    graph->add_option("--format", format, "text|dot|json");
    graph->add_option("--orientation", orientation, "left|right|auto");
    graph->add_flag("--fixture", use_fixture, "use the hand-tabulated reference graph");
    graph->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* classify = app.add_subcommand("classify", "classify a quintic given by coefficients");
    classify->add_option("input", input_path, "file with six 're,im' lines, highest degree first")->required();
    classify->add_option("--mesh", steps, "continuation steps per probe");
    classify->add_option("--tol", tol_scale, "tolerance scale factor");
    classify->add_option("--format", format, "text|json");
    classify->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* render = app.add_subcommand("render", "render one cactus class");
    render->add_option("--family", family, "first|second")->required();
    render->add_option("--index", index, "atlas index")->required();
    render->add_option("--degree", degree, "polynomial degree (first family only)");
    render->add_option("--equivalence", equivalence, "fixed|rotated");
    render->add_option("--format", format, "text|dot|json|tikz");
    render->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* sample = app.add_subcommand("sample", "classify random polynomials");
    sample->add_option("--count", samples, "number of samples");
    sample->add_option("--seed", seed, "rng seed");
    sample->add_option("--mesh", steps, "continuation steps per probe");
    sample->add_option("--tol", tol_scale, "tolerance scale factor");
    sample->add_option("--format", format, "text|json");
    sample->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* oracle = app.add_subcommand("oracle", "transposition-tuple cross-check");
    oracle->add_option("--degree", degree, "3..6");
    oracle->add_option("--format", format, "text|json");
    oracle->add_option("--out", out_path, "output file (default stdout)");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    using namespace cactus5;
    try {
        MeshControl mesh;
        mesh.steps = steps;
        Tolerances tol;
        tol.residual *= tol_scale;
        tol.genericity *= tol_scale;
        tol.collision *= tol_scale;

        if (app.got_subcommand(verify)) {
            VerifyReport report = run_verification(samples, seed, mesh, tol);
            std::cout << verify_report_to_text(report);
            return report.all_pass ? 0 : 1;
        }

        if (app.got_subcommand(enumerate)) {
            Equivalence eq = parse_equivalence(equivalence);
            if (family != "first" && family != "second")
                throw Error(Errc::BadInput, "family must be 'first' or 'second'");
            Atlas atlas = family == "second" ? enumerate_second(eq) : enumerate_first(degree, eq);
            if (format == "json")
                emit(atlas_to_json(atlas).dump(2) + "\n", out_path);
            else if (format == "text")
                emit(atlas_to_text(atlas), out_path);
            else
                throw Error(Errc::UnknownFormat, "enumerate supports text|json");
            return 0;
        }

        if (app.got_subcommand(graph)) {
            RibbonGraph g = use_fixture ? fixture_graph() : atlas_graph();
            if (format == "text")
                emit(graph_text(g, parse_orientation(orientation)), out_path);
            else
                emit(export_graph(g, format), out_path);
            return 0;
        }

        if (app.got_subcommand(classify)) {
            PolynomialSpec p = read_polynomial(input_path);
            Classification cl = classify_polynomial(p, mesh, tol);
            if (format == "json") {
                emit(classification_to_json(cl).dump(2) + "\n", out_path);
            } else if (format == "text") {
                std::ostringstream outs;
                outs << (cl.kind == CaseKind::quadrangle ? "first" : "second") << " #" << cl.atlas_index << "  "
                     << cl.shape << "  key " << key_to_hex(cl.canonical_key) << "\n";
                emit(outs.str(), out_path);
            } else {
                throw Error(Errc::UnknownFormat, "classify supports text|json");
            }
            return 0;
        }

        if (app.got_subcommand(render)) {
            Equivalence eq = parse_equivalence(equivalence);
            if (family == "first") {
                Atlas atlas = enumerate_first(degree, eq);
                emit(render_first(atlas.at(index).first(), format), out_path);
            } else if (family == "second") {
                Atlas atlas = enumerate_second(eq);
                emit(render_second(atlas.at(index).second(), format), out_path);
            } else {
                throw Error(Errc::BadInput, "family must be 'first' or 'second'");
            }
            return 0;
        }

        if (app.got_subcommand(sample)) {
            SampleTable table = sample_classes(samples, seed, mesh, tol);
            if (format == "json") {
                emit(sample_table_to_json(table).dump(2) + "\n", out_path);
            } else if (format == "text") {
                std::ostringstream outs;
                outs << table.stable << "/" << table.count << " stable (seed " << table.seed << ")\n";
                for (const auto& [k, v] : table.by_class) outs << "  " << k << ": " << v << "\n";
                for (const auto& [k, v] : table.failures) outs << "  failure " << k << ": " << v << "\n";
                emit(outs.str(), out_path);
            } else {
                throw Error(Errc::UnknownFormat, "sample supports text|json");
            }
            return 0;
        }

        if (app.got_subcommand(oracle)) {
            OracleReport report = oracle_report(degree);
            if (format == "json")
                emit(oracle_report_to_json(report).dump(2) + "\n", out_path);
            else if (format == "text")
                emit(oracle_report_to_text(report), out_path);
            else
                throw Error(Errc::UnknownFormat, "oracle supports text|json");
            return report.agree ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
