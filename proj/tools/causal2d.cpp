#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "causal/automorphism.hpp"
#include "causal/document.hpp"
#include "causal/errors.hpp"
#include "causal/gen.hpp"
#include "causal/verify.hpp"

namespace {

using namespace causal;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return ss.str();
}

// Empty path means stdout.
void spill(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failure on " + path);
}

HElement load(const std::string& path) { return doc::parse_helement(slurp(path)); }

Event parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw ParseError("bad point \"" + text + "\": expected x,y");
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

struct Opts {
    std::string path;
    std::string path_b;
    std::string out;
    std::string point;
    std::string f_path;
    std::string g_path;
    int grid = 21;
    std::vector<std::string> range{"-10", "10"};
    long long trials = 200;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string expect_fail;
};

verify::GridSpec grid_spec(const Opts& o) {
    return {Rational::parse(o.range.at(0)), Rational::parse(o.range.at(1)), o.grid};
}

int cmd_validate(const Opts& o) {
    const HElement a = load(o.path);
    std::cout << "ok: " << a.orientation() << " pair, phi " << a.phi().fn().size()
              << " breakpoints, psi " << a.psi().fn().size() << " breakpoints\n";
    return 0;
}

int cmd_eval(const Opts& o) {
    const Event img = apply(load(o.path), parse_point(o.point));
    std::cout << img.x << " " << img.y << "\n";
    return 0;
}

int cmd_compose(const Opts& o) {
    spill(o.out, doc::serialize(canonicalize(star(load(o.path), load(o.path_b)))));
    return 0;
}

int cmd_invert(const Opts& o) {
    spill(o.out, doc::serialize(canonicalize(star_inverse(load(o.path)))));
    return 0;
}

int cmd_to_fg(const Opts& o) {
    const FGPair p = to_fg(load(o.path));
    spill(o.out, doc::serialize(validate_fg(canonicalize(p.f()), canonicalize(p.g()))));
    return 0;
}

int cmd_from_fg(const Opts& o) {
    const FGPair p =
        validate_fg(doc::parse_homeo(slurp(o.f_path)), doc::parse_function(slurp(o.g_path)));
    spill(o.out, doc::serialize(canonicalize(from_fg(p))));
    return 0;
}

int cmd_check(const Opts& o) {
    const HElement a = load(o.path);
    const verify::GridSpec grid = grid_spec(o);
    const verify::PointMap map = [&a](const Event& e) { return apply(a, e); };
    const auto causal_rep = verify::check_causal_preservation(map, grid);
    const auto chrono_rep = verify::check_chronological_preservation(map, grid);
    int failures = 0;
    for (const auto* rep : {&causal_rep, &chrono_rep}) {
        verify::print_report(std::cout, *rep,
                             rep == &causal_rep ? "causal-preservation"
                                                : "chronological-preservation")
            << "\n";
        if (rep->passed) continue;
        ++failures;
        const auto& w = *rep->first_counterexample;
        std::cout << "  first counterexample: pair " << w.pair_index << ", p=" << w.p
                  << " q=" << w.q << " map to " << w.fp << " " << w.fq << "; the " << w.relation
                  << " relation " << (w.expected ? "held" : "did not hold") << " before and "
                  << (w.actual ? "held" : "did not hold") << " after\n";
    }
    return failures == 0 ? 0 : 1;
}

int cmd_fuzz(const Opts& o) {
    if (o.expect_fail == "naive") {
        const verify::NaiveCounterexample nc = verify::naive_counterexample();
        std::cout << "componentwise composition is not the group operation:\n"
                  << "  a = " << nc.a << "\n  b = " << nc.b << "\n  at " << nc.witness
                  << " the product maps to " << nc.star_image
                  << " but componentwise composition gives " << nc.componentwise_image << "\n";
        return 1;
    }

    gen::GenParams params;
    params.seed = o.seed;
    const auto axioms = verify::check_group_axioms(params, o.trials);
    verify::print_report(std::cout, axioms, "group-axioms") << "\n";

    const auto cases = verify::check_pi_homomorphism_cases(params, o.trials / 4);
    verify::print_report(std::cout, cases, "parity-cases") << "\n";

    bool equiv_ok = true;
    long long equiv_trials = 0;
    const verify::GridSpec grid{-10, 10, 11};
    for (long long i = 0; i < o.trials / 4 && equiv_ok; ++i) {
        const FGPair p = gen::gen_fg(gen::derive(params, static_cast<std::uint64_t>(i)));
        const auto rep = verify::check_theorem_equivalence(p, grid);
        equiv_trials += rep.trials;
        equiv_ok = rep.passed;
    }
    std::cout << (equiv_ok ? "pass" : "FAIL")
              << "  representation-equivalence  trials=" << equiv_trials << "\n";

    return axioms.passed && cases.passed && equiv_ok ? 0 : 1;
}

std::string render_csv(const HElement& a, const verify::GridSpec& grid) {
    std::ostringstream out;
    out << "x,y,x',y'\n";
    for (const Event& e : grid.events()) {
        const Event img = apply(a, e);
        out << e.x << "," << e.y << "," << img.x << "," << img.y << "\n";
    }
    return out.str();
}

struct Segment {
    Event a, b;
};

// Null lattice over the grid square and its image. An automorphism carries
// each line of constant u or v onto another such line, so image segments are
// straight and their endpoint images determine them exactly. Rationals hit
// the byte stream only through to_decimal, y axis flipped for SVG.
std::string render_svg(const HElement& h, const verify::GridSpec& grid) {
    const Rational lo = grid.t_min, hi = grid.t_max;
    std::vector<Segment> src, img_u, img_v;
    for (const Rational& t : grid.axis()) {
        const Rational cu = Rational(2) * t; // u = x + y on [2 lo, 2 hi]
        const Rational x1 = std::max(lo, cu - hi), x2 = std::min(hi, cu - lo);
        if (x1 < x2) {
            const Segment s{{x1, cu - x1}, {x2, cu - x2}};
            src.push_back(s);
            img_u.push_back({apply(h, s.a), apply(h, s.b)});
        }
        const Rational cv = Rational(2) * t - (lo + hi); // v = x - y on [lo-hi, hi-lo]
        const Rational y1 = std::max(lo, lo - cv), y2 = std::min(hi, hi - cv);
        if (y1 < y2) {
            const Segment s{{cv + y1, y1}, {cv + y2, y2}};
            src.push_back(s);
            img_v.push_back({apply(h, s.a), apply(h, s.b)});
        }
    }

    Rational min_x = lo, max_x = hi, min_y = lo, max_y = hi;
    for (const auto* list : {&img_u, &img_v})
        for (const Segment& s : *list)
            for (const Event* e : {&s.a, &s.b}) {
                min_x = std::min(min_x, e->x);
                max_x = std::max(max_x, e->x);
                min_y = std::min(min_y, e->y);
                max_y = std::max(max_y, e->y);
            }
    const Rational pad = (max_x - min_x + max_y - min_y) / Rational(40);
    min_x -= pad;
    max_x += pad;
    min_y -= pad;
    max_y += pad;
    const Rational width = max_x - min_x, height = max_y - min_y;
    const std::string stroke = doc::to_decimal((width + height) / Rational(800));

    std::ostringstream out;
    const auto dec = [](const Rational& r) { return doc::to_decimal(r); };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << dec(min_x) << " "
        << dec(-max_y) << " " << dec(width) << " " << dec(height) << "\">\n";
    const auto group = [&](const std::vector<Segment>& segs, const char* color) {
        out << "  <g fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke
            << "\">\n";
        for (const Segment& s : segs)
            out << "    <line x1=\"" << dec(s.a.x) << "\" y1=\"" << dec(-s.a.y) << "\" x2=\""
                << dec(s.b.x) << "\" y2=\"" << dec(-s.b.y) << "\"/>\n";
        out << "  </g>\n";
    };
    group(src, "#bbbbbb");
    group(img_u, "#1f77b4");
    group(img_v, "#d62728");
    out << "</svg>\n";
    return out.str();
}

int cmd_export(const Opts& o) {
    const HElement a = load(o.path);
    const verify::GridSpec grid = grid_spec(o);
    spill(o.out, o.format == "svg" ? render_svg(a, grid) : render_csv(a, grid));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact piecewise-linear causal automorphisms of the two-dimensional plane"};
    app.require_subcommand(1);

    Opts o;

    CLI::App* validate = app.add_subcommand("validate", "parse a document and check every invariant");
    validate->add_option("path", o.path, "automorphism document")->required();

    CLI::App* eval = app.add_subcommand("eval", "apply an automorphism to one event");
    eval->add_option("path", o.path, "automorphism document")->required();
    eval->add_option("--point", o.point, "event as x,y with exact rational parts")->required();

    CLI::App* compose = app.add_subcommand("compose", "group product of two automorphisms");
    compose->add_option("path_a", o.path, "left factor document")->required();
    compose->add_option("path_b", o.path_b, "right factor document")->required();
    compose->add_option("-o,--output", o.out, "target file, stdout when omitted");

    CLI::App* invert = app.add_subcommand("invert", "group inverse of an automorphism");
    invert->add_option("path", o.path, "automorphism document")->required();
    invert->add_option("-o,--output", o.out, "target file, stdout when omitted");

    CLI::App* tofg = app.add_subcommand("to-fg", "standard-form pair of an automorphism");
    tofg->add_option("path", o.path, "automorphism document")->required();
    tofg->add_option("-o,--output", o.out, "target file, stdout when omitted");

    CLI::App* fromfg = app.add_subcommand("from-fg", "automorphism from a standard-form pair");
    fromfg->add_option("--f", o.f_path, "monotone component document")->required();
    fromfg->add_option("--g", o.g_path, "companion component document")->required();
    fromfg->add_option("-o,--output", o.out, "target file, stdout when omitted");

    CLI::App* check = app.add_subcommand("check", "grid oracle for both order relations");
    check->add_option("path", o.path, "automorphism document")->required();
    check->add_option("--grid", o.grid, "axis points per side")->check(CLI::Range(1, 1000));
    check->add_option("--range", o.range, "axis interval, two exact rationals")->expected(2);

    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded property suites over random elements");
    fuzz->add_option("--trials", o.trials, "triples per suite")->check(CLI::Range(0LL, 1000000LL));
    fuzz->add_option("--seed", o.seed, "base seed");
    fuzz->add_option("--expect-fail", o.expect_fail, "demonstrate a known-bad construction")
        ->check(CLI::IsMember({"naive"}));

    CLI::App* exp = app.add_subcommand("export", "grid table or lattice figure");
    exp->add_option("path", o.path, "automorphism document")->required();
    exp->add_option("--format", o.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    exp->add_option("--grid", o.grid, "axis points per side")->check(CLI::Range(1, 1000));
    exp->add_option("--range", o.range, "axis interval, two exact rationals")->expected(2);
    exp->add_option("-o,--output", o.out, "target file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(o);
        if (eval->parsed()) return cmd_eval(o);
        if (compose->parsed()) return cmd_compose(o);
        if (invert->parsed()) return cmd_invert(o);
        if (tofg->parsed()) return cmd_to_fg(o);
        if (fromfg->parsed()) return cmd_from_fg(o);
        if (check->parsed()) return cmd_check(o);
        if (fuzz->parsed()) return cmd_fuzz(o);
        if (exp->parsed()) return cmd_export(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.column;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
