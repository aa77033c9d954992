// coupon-kit: batch CLI over the generators, solver, factor finder and
// constructive coloring engine. Status lines go to stdout, diagnostics to
// stderr; exit 0 = ran, 1 = a check failed, 2 = usage error, 3 = I/O or
// parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "couponkit/extend.hpp"
#include "couponkit/factors.hpp"
#include "couponkit/generators.hpp"
#include "couponkit/graph.hpp"
#include "couponkit/io.hpp"
#include "couponkit/solver.hpp"

namespace ck = couponkit;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ck::Graph read_graph(const std::string& path) {
    if (path == "-") return ck::parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return ck::parse_graph(in);
}

ck::Coloring read_coloring(const std::string& path) {
    if (path == "-") return ck::parse_coloring(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return ck::parse_coloring(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
}

struct Args {
    std::vector<std::string> positional;
    std::string out_path = "-";
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    int r = 0;
    int n = 0;
    bool fix_first = false;
    bool enumerate = false;
};

Args parse_flags(int argc, char** argv, int start) {
    Args a;
    auto value = [&](int& i, const std::string& flag) -> std::string {
        if (i + 1 >= argc) throw UsageError("missing value for " + flag);
        return argv[++i];
    };
    for (int i = start; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok == "-o") a.out_path = value(i, tok);
        else if (tok == "--budget") a.budget = std::stoull(value(i, tok));
        else if (tok == "--seed") a.seed = std::stoull(value(i, tok));
        else if (tok == "--r") a.r = std::stoi(value(i, tok));
        else if (tok == "--n") a.n = std::stoi(value(i, tok));
        else if (tok == "--fix-first") a.fix_first = true;
        else if (tok == "--enumerate") a.enumerate = true;
        else if (!tok.empty() && tok[0] == '-' && tok != "-")
            throw UsageError("unknown flag '" + tok + "'");
        else a.positional.push_back(tok);
    }
    return a;
}

std::string input_of(const Args& a) {
    if (a.positional.empty()) return "-";
    if (a.positional.size() > 1) throw UsageError("unexpected argument '" + a.positional[1] + "'");
    return a.positional[0];
}

int cmd_gen(const Args& a) {
    if (a.positional.empty()) throw UsageError("gen: missing graph name");
    const std::string& name = a.positional[0];
    int size = name == "remark" ? a.r : a.n;
    ck::Graph g = [&] {
        try {
            return ck::named(name, size, a.seed);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    write_text(a.out_path, ck::format_graph(g));
    return 0;
}

int cmd_solve(const Args& a) {
    ck::Graph g = read_graph(input_of(a));
    if (a.enumerate) {
        ck::EnumerationResult r = ck::enumerate_min_bad(g);
        std::cout << (r.min_bad == 0 ? "s SAT" : "s UNSAT") << "\n";
        if (r.min_bad == 0) std::cout << ck::format_coloring(r.achiever);
        std::cout << "d nodes " << r.scanned << "\n";
        std::cout << "d props 0\n";
        std::cout << "d minbad " << r.min_bad << "\n";
        return 0;
    }
    ck::SolveOptions opts;
    opts.fix_first = a.fix_first;
    opts.decision_budget = a.budget;
    ck::SolveResult r = ck::decide(g, opts);
    switch (r.status) {
        case ck::SolveStatus::kSat: std::cout << "s SAT\n"; break;
        case ck::SolveStatus::kUnsat: std::cout << "s UNSAT\n"; break;
        case ck::SolveStatus::kUnknown: std::cout << "s UNKNOWN\n"; break;
    }
    if (r.witness) std::cout << ck::format_coloring(*r.witness);
    std::cout << "d nodes " << r.stats.decisions << "\n";
    std::cout << "d props " << r.stats.propagations << "\n";
    return 0;
}

int cmd_color(const Args& a) {
    ck::Graph g = read_graph(input_of(a));
    try {
        ck::Coloring c = ck::color_cubic_with_c4(g);
        std::cout << "s COLORED\n" << ck::format_coloring(c);
    } catch (const std::invalid_argument& e) {
        std::cout << "s REJECTED " << e.what() << "\n";
    }
    return 0;
}

int cmd_verify(const Args& a) {
    if (a.positional.size() != 2) throw UsageError("verify: expected <graph> <coloring>");
    ck::Graph g = read_graph(a.positional[0]);
    ck::Coloring c = read_coloring(a.positional[1]);
    if (c.size() != g.n()) {
        std::cout << "s REJECTED coloring length " << c.size() << " does not match n=" << g.n()
                  << "\n";
        return 0;
    }
    ck::CouponReport rep = ck::verify_coupon(g, c);
    std::cout << (rep.is_coupon ? "s COUPON" : "s NOT-COUPON") << "\n";
    std::cout << "d bad " << rep.bad_vertices.size() << "\n";
    if (!rep.bad_vertices.empty()) {
        std::cout << "bad";
        for (int v : rep.bad_vertices) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_factor(const Args& a) {
    ck::Graph g = read_graph(input_of(a));
    auto f = ck::one_two_factor(g);
    if (!f) {
        std::cout << "s NONE\n";
        return 0;
    }
    for (const auto& comp : f->components) {
        std::cout << (comp.is_edge() ? "E" : "C");
        for (int v : comp.vertices) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_doublecover(const Args& a) {
    ck::Graph g = read_graph(input_of(a));
    write_text(a.out_path, ck::format_graph(ck::double_cover(g).graph));
    return 0;
}

int cmd_analyze(const Args& a) {
    ck::Graph g = read_graph(input_of(a));
    int gi = ck::girth(g);
    std::cout << "n " << g.n() << "\n";
    std::cout << "m " << g.m() << "\n";
    std::cout << "cubic " << (ck::validate_cubic(g).ok ? "yes" : "no") << "\n";
    std::cout << "connected " << (ck::is_connected(g) ? "yes" : "no") << "\n";
    std::cout << "bipartite " << (ck::is_bipartite(g).parts ? "yes" : "no") << "\n";
    if (gi == ck::kInfiniteGirth) std::cout << "girth inf\n";
    else std::cout << "girth " << gi << "\n";
    std::cout << "has_c3 " << (ck::find_cycle(g, 3) ? "yes" : "no") << "\n";
    std::cout << "has_c4 " << (ck::find_cycle(g, 4) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_verify_lemmas() {
    bool all_ok = true;
    ck::Graph h = ck::heawood();
    ck::EnumerationResult enumr = ck::enumerate_min_bad(h);
    if (enumr.min_bad == 2) std::cout << "ok lemma1\n";
    else {
        std::cout << "FAIL lemma1\n";
        all_ok = false;
    }
    for (auto [u, v] : h.edges()) {
        std::vector<std::pair<int, int>> rest;
        for (auto e : h.edges())
            if (e != std::make_pair(u, v)) rest.push_back(e);
        ck::PortedGraph hm{ck::Graph::from_edges(h.n(), rest), {{"u", u}, {"v", v}}};
        ck::Lemma2Report rep = ck::check_lemma2(hm, h);
        if (rep.ok && rep.qualifying > 0)
            std::cout << "ok lemma2 e=" << u << "-" << v << "\n";
        else {
            std::cout << "FAIL lemma2 e=" << u << "-" << v << "\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

const char* kUsage =
    "usage: coupon-kit <subcommand> [input|-] [flags]\n"
    "  gen <name> [--r N] [--n N] [--seed S] [-o PATH]\n"
    "  solve [input|-] [--budget N] [--fix-first] [--enumerate]\n"
    "  color [input|-]\n"
    "  verify <graph> <coloring>\n"
    "  factor [input|-]\n"
    "  doublecover [input|-] [-o PATH]\n"
    "  analyze [input|-]\n"
    "  verify-lemmas\n";

}  // namespace

int main(int argc, char** argv) {
    try {
        if (argc < 2) throw UsageError("missing subcommand");
        std::string cmd = argv[1];
        Args a = parse_flags(argc, argv, 2);
        if (cmd == "gen") return cmd_gen(a);
        if (cmd == "solve") return cmd_solve(a);
        if (cmd == "color") return cmd_color(a);
        if (cmd == "verify") return cmd_verify(a);
        if (cmd == "factor") return cmd_factor(a);
        if (cmd == "doublecover") return cmd_doublecover(a);
        if (cmd == "analyze") return cmd_analyze(a);
        if (cmd == "verify-lemmas") return cmd_verify_lemmas();
        throw UsageError("unknown subcommand '" + cmd + "'");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << kUsage;
        return 2;
    } catch (const ck::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
