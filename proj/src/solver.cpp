#include "couponkit/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace couponkit {

namespace {

struct BudgetExceeded {};

// Backtracking search state. For every vertex v and color c the clause
// "some neighbor of v has color c" is tracked by two counters:
//   sat[v][c]      neighbors already colored c
//   possible[v][c] neighbors colored c or still unset
// possible hitting 0 is a conflict; possible == 1 with sat == 0 forces the
// single remaining unset neighbor.
class Searcher {
public:
    Searcher(const Graph& g, const SolveOptions& opts) : g_(g), opts_(opts) {
        const int n = g.n();
        color_.assign(n, -1);
        for (int c = 0; c < 2; ++c) {
            sat_[c].assign(n, 0);
            possible_[c].assign(n, 0);
        }
        for (int v = 0; v < n; ++v) possible_[0][v] = possible_[1][v] = g.degree(v);
        trail_.reserve(n);
    }

    SolveResult run() {
        SolveResult res;
        auto t0 = std::chrono::steady_clock::now();
        bool sat = false;
        try {
            sat = setup() && search();
        } catch (const BudgetExceeded&) {
            res.status = SolveStatus::kUnknown;
            finish(res, t0);
            return res;
        }
        res.status = sat ? SolveStatus::kSat : SolveStatus::kUnsat;
        if (sat) {
            Coloring w(g_.n());
            for (int v = 0; v < g_.n(); ++v) w.set(v, color_[v]);
            if (!verify_coupon(g_, w).is_coupon)
                throw std::logic_error("decide: witness failed verification");
            res.witness = std::move(w);
        }
        finish(res, t0);
        return res;
    }

    SolveStats stats;

private:
    void finish(SolveResult& res, std::chrono::steady_clock::time_point t0) {
        stats.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        res.stats = stats;
    }

    bool setup() {
        if (opts_.fix_first && g_.n() > 0) {
            if (!assign(0, 0)) return false;
        }
        // Degree-1 vertices make both of their clauses unit from the start.
        for (int v = 0; v < g_.n(); ++v)
            for (int c = 0; c < 2; ++c)
                if (sat_[c][v] == 0 && possible_[c][v] == 1) units_.emplace_back(v, c);
        return propagate();
    }

    bool assign(int u, int a) {
        color_[u] = static_cast<signed char>(a);
        trail_.push_back(u);
        bool ok = true;  // counters must be updated for every neighbor so undo stays exact
        for (int v : g_.neighbors(u)) {
            ++sat_[a][v];
            int& p = possible_[1 - a][v];
            --p;
            if (sat_[1 - a][v] == 0) {
                if (p == 0) ok = false;
                else if (p == 1) units_.emplace_back(v, 1 - a);
            }
        }
        return ok;
    }

    bool propagate() {
        while (!units_.empty()) {
            auto [v, c] = units_.back();
            units_.pop_back();
            if (sat_[c][v] > 0) continue;       // satisfied meanwhile
            if (possible_[c][v] == 0) return false;
            int target = -1;
            for (int w : g_.neighbors(v))
                if (color_[w] == -1) {
                    target = w;
                    break;
                }
            ++stats.propagations;
            if (!assign(target, c)) return false;
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            int u = trail_.back();
            trail_.pop_back();
            int a = color_[u];
            color_[u] = -1;
            for (int v : g_.neighbors(u)) {
                --sat_[a][v];
                ++possible_[1 - a][v];
            }
        }
        units_.clear();
    }

    // Undecided vertex appearing in the most nearly-violated clauses
    // (unsatisfied with two candidate neighbors left); ties to smallest id.
    int pick_branch() const {
        std::vector<int> score(g_.n(), 0);
        for (int v = 0; v < g_.n(); ++v)
            for (int c = 0; c < 2; ++c)
                if (sat_[c][v] == 0 && possible_[c][v] == 2)
                    for (int w : g_.neighbors(v))
                        if (color_[w] == -1) ++score[w];
        int best = -1;
        for (int v = 0; v < g_.n(); ++v) {
            if (color_[v] != -1) continue;
            if (best == -1 || score[v] > score[best]) best = v;
        }
        return best;
    }

    bool search() {
        int v = pick_branch();
        if (v == -1) return true;
        for (int val = 0; val < 2; ++val) {
            ++stats.decisions;
            if (opts_.decision_budget && stats.decisions > opts_.decision_budget)
                throw BudgetExceeded{};
            size_t mark = trail_.size();
            if (assign(v, val) && propagate() && search()) return true;
            undo_to(mark);
        }
        return false;
    }

    const Graph& g_;
    const SolveOptions& opts_;
    std::vector<signed char> color_;
    std::vector<int> sat_[2];
    std::vector<int> possible_[2];
    std::vector<int> trail_;
    std::vector<std::pair<int, int>> units_;
};

}  // namespace

SolveResult decide(const Graph& g, const SolveOptions& opts) {
    if (g.n() > 0 && g.min_degree() == 0)
        throw std::invalid_argument("decide: graph has an isolated vertex");
    if (g.n() == 0) {
        SolveResult res;
        res.status = SolveStatus::kSat;
        res.witness = Coloring(0);
        return res;
    }
    return Searcher(g, opts).run();
}

EnumerationResult enumerate_min_bad(const Graph& g, int limit_n) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("enumerate_min_bad: empty graph");
    if (n > limit_n) throw std::invalid_argument("enumerate_min_bad: n exceeds limit");

    // Walk the half-space with color(0) = 0 in Gray-code order, maintaining
    // per-vertex neighbor color counts. The complement of each coloring has
    // the same bad count, so the histogram doubles at the end and the
    // lexicographically smallest minimizer has color(0) = 0 anyway.
    std::vector<signed char> colors(n, 0);
    std::vector<int> cnt[2];
    cnt[0].assign(n, 0);
    cnt[1].assign(n, 0);
    for (int v = 0; v < n; ++v) cnt[0][v] = g.degree(v);
    auto is_bad = [&](int v) { return cnt[0][v] == 0 || cnt[1][v] == 0; };
    int bad = 0;
    for (int v = 0; v < n; ++v)
        if (is_bad(v)) ++bad;

    EnumerationResult out;
    out.histogram.assign(n + 1, 0);
    out.min_bad = bad + 1;  // forces the first coloring to register

    auto lex_less = [&](const std::vector<signed char>& a, const Coloring& b) {
        for (int v = 0; v < n; ++v) {
            if (a[v] != b.get(v)) return a[v] < b.get(v);
        }
        return false;
    };
    auto record = [&] {
        ++out.scanned;
        out.histogram[bad] += 2;
        if (bad < out.min_bad) {
            out.min_bad = bad;
            Coloring c(n);
            for (int v = 0; v < n; ++v) c.set(v, colors[v]);
            out.achiever = c;
        } else if (bad == out.min_bad && lex_less(colors, out.achiever)) {
            Coloring c(n);
            for (int v = 0; v < n; ++v) c.set(v, colors[v]);
            out.achiever = c;
        }
    };
    auto flip = [&](int v) {
        int old = colors[v];
        colors[v] = static_cast<signed char>(1 - old);
        for (int w : g.neighbors(v)) {
            bool was = is_bad(w);
            --cnt[old][w];
            ++cnt[1 - old][w];
            bool now = is_bad(w);
            bad += static_cast<int>(now) - static_cast<int>(was);
        }
    };

    record();
    const std::uint64_t steps = n >= 2 ? (1ULL << (n - 1)) : 1;
    for (std::uint64_t i = 1; i < steps; ++i) {
        flip(std::countr_zero(i) + 1);
        record();
    }
    return out;
}

Lemma2Report check_lemma2(const PortedGraph& h_minus_e, const Graph& full_h) {
    const Graph& h = h_minus_e.graph;
    const int u = h_minus_e.port("u");
    const int v = h_minus_e.port("v");
    const int n = h.n();
    if (n != full_h.n() || h.m() + 1 != full_h.m() || !full_h.has_edge(u, v) || h.has_edge(u, v))
        throw std::invalid_argument("check_lemma2: h_minus_e is not full_h minus edge {u,v}");
    for (auto e : h.edges())
        if (!full_h.has_edge(e.first, e.second))
            throw std::invalid_argument("check_lemma2: h_minus_e has an edge outside full_h");
    if (n > 24) throw std::invalid_argument("check_lemma2: graph too large to enumerate");

    Lemma2Report rep;
    rep.ok = true;
    std::vector<signed char> colors(n, 0);
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        for (int i = 0; i < n; ++i) colors[i] = static_cast<signed char>((bits >> i) & 1);
        bool qualifies = true;
        for (int w = 0; w < n && qualifies; ++w) {
            if (w == u || w == v) continue;
            bool saw[2] = {false, false};
            for (int x : h.neighbors(w)) saw[colors[x]] = true;
            qualifies = saw[0] && saw[1];
        }
        if (!qualifies) continue;
        ++rep.qualifying;
        bool holds = true;
        for (int w : h.neighbors(v)) holds = holds && colors[w] == colors[u];
        for (int w : h.neighbors(u)) holds = holds && colors[w] == colors[v];
        if (!holds && rep.ok) {
            rep.ok = false;
            Coloring c(n);
            for (int i = 0; i < n; ++i) c.set(i, colors[i]);
            rep.counterexample = std::move(c);
        }
    }
    return rep;
}

TdsSolveResult decide_equiv_tds(const Graph& g, const SolveOptions& opts) {
    SolveResult inner = decide(g, opts);
    TdsSolveResult out;
    out.status = inner.status;
    out.stats = inner.stats;
    if (inner.status == SolveStatus::kSat)
        out.pair = tds_pair_from_coloring(g, *inner.witness);
    return out;
}

}  // namespace couponkit
