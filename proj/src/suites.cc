#include <fw/repsets.hh>
#include <fw/rewrite.hh>
#include <fw/solvers_fw.hh>
#include <fw/solvers_mcw.hh>
#include <fw/suites.hh>

#include <functional>
#include <sstream>

using std::string;
using std::vector;

namespace fw
{
    namespace
    {
        constexpr std::size_t kept_failures = 5;

        auto mix(std::uint64_t seed, std::uint64_t i) -> std::uint64_t
        {
            return seed * 1000003ULL + i;
        }

        auto join_lines(const vector<string> & parts) -> string
        {
            string out;
            for (auto & p : parts)
                out += (out.empty() ? "" : "; ") + p;
            return out;
        }

        auto solver_config(Dialect d, std::uint64_t seed, int k) -> GenConfig
        {
            GenConfig c;
            c.dialect = d;
            c.seed = seed;
            c.k = k;
            auto & w = c.weights;
            if (d == Dialect::Multi) {
                c.budget = 45;
                c.max_leaves = 9;
                w.join = 3;
                w.relabel = 1;
                w.binary = 0.5;
                w.link = 6;
                w.multi_introduce = 0.5;
            }
            else {
                // fusing shrinks the graph, so allow more leaves
                c.budget = 60;
                c.max_leaves = 14;
                w.join = 8;
                w.binary = 2;
                w.fuse = 4;
                w.link = 3;
            }
            return c;
        }

        auto render(const Expression & e) -> string
        {
            return dialect_name(e.dialect) + " k=" + std::to_string(e.k) + " " + serialize_expression(e);
        }
    }

    auto SuiteReport::record(const string & failure) -> void
    {
        if (failure.empty()) {
            ++passed;
            return;
        }
        ++failed;
        if (failures.size() < kept_failures)
            failures.push_back(failure);
    }

    auto roundtrip_corpus(int count, std::uint64_t seed) -> vector<Expression>
    {
        vector<Expression> out;
        for (int i = 0; i < count; ++i) {
            GenConfig c;
            c.dialect = Dialect::Fuse;
            c.seed = mix(seed, i);
            c.k = 1 + i % 4;
            c.budget = 30;
            c.weights.join = 5;
            out.push_back(gen_expression(c));
        }
        return out;
    }

    auto solver_corpus(Dialect d, int count, std::uint64_t seed, int max_k, bool connected) -> vector<Expression>
    {
        vector<Expression> out;
        for (int attempt = 0; int(out.size()) < count; ++attempt) {
            if (attempt > 500 * count)
                throw std::logic_error("solver corpus: generator keeps missing the size window");
            // one label cannot make an edge, so connected corpora start at two
            int low = connected && max_k >= 2 ? 2 : 1;
            int k = low + int(out.size()) % (max_k - low + 1);
            auto e = gen_expression(solver_config(d, mix(seed, attempt), k));
            auto g = evaluate(e);
            if (g.size() < 3 || g.size() > 9 || (connected && ! is_connected(g)))
                continue;
            out.push_back(std::move(e));
        }
        return out;
    }

    auto check_roundtrip(const Expression & e) -> RoundtripFindings
    {
        RoundtripFindings f;
        auto g = evaluate(e);
        int n = g.size(), m = int(g.edges.size());

        try {
            auto back = parse_expression(serialize_expression(e), e.dialect, e.k);
            if (! structurally_equal(back, e))
                f.roundtrip.push_back("serialize/parse changes the expression");
        }
        catch (const DomainError & ex) {
            f.roundtrip.push_back(string("reparse failed: ") + ex.what());
        }

        try {
            auto rg = fuse_to_reduced_glue(e);
            if (! graphs_equal(evaluate(rg), g))
                f.roundtrip.push_back("reduced glue evaluates to a different graph");
            if (auto why = check_reduced(rg); ! why.empty())
                f.roundtrip.push_back("glue output not reduced: " + why);
            if (rg.size() > glue_size_bound(e.k, n, m))
                f.bounds.push_back("reduced glue has " + std::to_string(rg.size()) + " nodes, bound "
                    + std::to_string(glue_size_bound(e.k, n, m)));
        }
        catch (const std::exception & ex) {
            f.roundtrip.push_back(string("glue pipeline threw: ") + ex.what());
        }

        try {
            auto mu = fuse_to_multi(e);
            if (! same_shape(evaluate(mu), g))
                f.multi.push_back("multi expression has different vertices or edges");
            if (mu.k > e.k + 1 || (labels_used(mu) >> (e.k + 1)) != 0)
                f.multi.push_back("multi expression uses more than k+1 labels");
            auto nm = normalize_multi(mu);
            if (! graphs_equal(evaluate(nm), evaluate(mu)))
                f.multi.push_back("normalizing changes the graph");
            if (auto why = check_normalized_multi(nm); ! why.empty())
                f.multi.push_back("not normalized: " + why);
            if (nm.size() > multi_size_bound(nm.k, n))
                f.bounds.push_back("normalized multi has " + std::to_string(nm.size()) + " nodes, bound "
                    + std::to_string(multi_size_bound(nm.k, n)));
        }
        catch (const std::exception & ex) {
            f.multi.push_back(string("multi pipeline threw: ") + ex.what());
        }

        for (auto * list : {&f.roundtrip, &f.bounds, &f.multi})
            for (auto & s : *list)
                s += " [" + render(e) + "]";
        return f;
    }

    auto check_solver(Problem p, const Expression & e, const CheckOptions & opts) -> string
    {
        auto g = evaluate(e);
        long long got = 0, want = 0;
        SolveStats stats;
        string extra;
        try {
            switch (p) {
                case Problem::MaxCut:
                    got = solve_max_cut(as_reduced_glue(e), &stats);
                    want = brute_max_cut(g);
                    break;
                case Problem::Eds:
                    got = solve_eds(as_reduced_glue(e), &stats);
                    want = brute_eds(g);
                    if (stats.identity_violations)
                        extra = "glue labels with s + r > 1";
                    break;
                case Problem::Hc:
                    got = solve_hamiltonian_cycle(e, &stats);
                    want = brute_hamiltonian(g);
                    if (stats.family_bound_violations)
                        extra = "family over the size bound";
                    break;
                case Problem::Ds:
                    got = solve_dominating_set(e, &stats);
                    want = brute_ds(g);
                    break;
                case Problem::QColor:
                    got = (long long) solve_q_coloring_count(e, opts.q, &stats);
                    want = brute_q_colorings(g, opts.q);
                    break;
                case Problem::Chromatic:
                    got = solve_chromatic_number(e, &stats);
                    want = brute_chromatic(g);
                    break;
                case Problem::Cvc:
                case Problem::Cds: {
                    want = p == Problem::Cvc ? brute_cvc(g) : brute_cds(g);
                    auto run = [&](std::uint64_t seed) -> long long {
                        CutCountContext ctx;
                        ctx.seed = seed;
                        ctx.trials = opts.trials;
                        auto r = p == Problem::Cvc ? solve_cvc(e, ctx, &stats) : solve_cds(e, ctx, &stats);
                        return r ? *r : -1;
                    };
                    auto too_small = [&](long long x) { return x >= 0 && (want < 0 || x < want); };
                    got = run(opts.seed);
                    if (too_small(got))
                        return problem_name(p) + ": reported " + std::to_string(got) + " below the optimum "
                            + std::to_string(want) + " [" + render(e) + "]";
                    if (got != want) {
                        got = run(opts.seed ^ 0x9e3779b97f4a7c15ULL);
                        if (too_small(got))
                            return problem_name(p) + ": rerun reported " + std::to_string(got)
                                + " below the optimum " + std::to_string(want) + " [" + render(e) + "]";
                    }
                    break;
                }
            }
        }
        catch (const std::exception & ex) {
            return problem_name(p) + " threw: " + ex.what() + " [" + render(e) + "]";
        }
        if (got != want)
            return problem_name(p) + ": got " + std::to_string(got) + ", oracle " + std::to_string(want) + " ["
                + render(e) + "]";
        if (! extra.empty())
            return problem_name(p) + ": " + extra + " [" + render(e) + "]";
        return "";
    }

    auto check_representativity(const LabeledGraph & g, int max_blue) -> string
    {
        auto family = all_maximal_packings(g);
        auto reduced = reduce_family(family, g);
        double bound = reduce_bound(g.size(), g.k);
        if (double(reduced.size()) > bound)
            return "reduced family of " + std::to_string(reduced.size()) + " exceeds the bound";

        // only the auxiliary multigraphs matter for trail existence
        auto shadows = [&](const vector<PathPacking> & ps) {
            std::set<std::map<std::pair<Label, Label>, int>> seen;
            vector<AuxMultigraph> out;
            for (auto & p : ps) {
                auto aux = aux_multigraph(g, p);
                if (seen.insert(aux.edges).second)
                    out.push_back(aux);
            }
            return out;
        };
        auto full = shadows(family), kept = shadows(reduced);

        vector<std::pair<Label, Label>> pairs;
        for (Label a = 1; a <= g.k; ++a)
            for (Label b = a; b <= g.k; ++b)
                pairs.push_back({a, b});
        AuxMultigraph blue;
        blue.k = g.k;
        string problem;
        auto any_trail = [&](const vector<AuxMultigraph> & reds) {
            for (auto & r : reds)
                if (rb_trail_exists(r, blue))
                    return true;
            return false;
        };
        std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
            if (! problem.empty())
                return;
            if (any_trail(full) != any_trail(kept)) {
                problem = "blue {" + blue.dump() + "}: trail existence changes after reduction";
                return;
            }
            if (left == 0)
                return;
            for (std::size_t q = from; q < pairs.size(); ++q) {
                blue.add(pairs[q].first, pairs[q].second);
                rec(q, left - 1);
                if (--blue.edges[pairs[q]] == 0)
                    blue.edges.erase(pairs[q]);
            }
        };
        rec(0, max_blue);
        if (! problem.empty())
            return problem + " [" + write_graph(g) + "]";
        return "";
    }

    auto suite_names() -> vector<string>
    {
        return {"roundtrip", "solvers", "repsets"};
    }

    auto run_suite(const string & name, int trials, std::uint64_t seed) -> SuiteReport
    {
        if (trials < 1)
            throw DomainError("a suite needs at least one trial");
        SuiteReport report;
        report.suite = name;
        if (name == "roundtrip") {
            for (auto & e : roundtrip_corpus(trials, seed)) {
                auto f = check_roundtrip(e);
                vector<string> all = f.roundtrip;
                all.insert(all.end(), f.bounds.begin(), f.bounds.end());
                all.insert(all.end(), f.multi.begin(), f.multi.end());
                report.record(join_lines(all));
            }
        }
        else if (name == "solvers") {
            auto fuse = solver_corpus(Dialect::Fuse, trials, seed);
            auto multi = solver_corpus(Dialect::Multi, trials, seed + 1);
            auto fuse_conn = solver_corpus(Dialect::Fuse, trials, seed + 2, 3, true);
            auto multi_conn = solver_corpus(Dialect::Multi, trials, seed + 3, 3, true);
            for (int t = 0; t < trials; ++t) {
                CheckOptions opts;
                opts.q = 2 + t % 2;
                opts.seed = mix(seed, t);
                for (auto p : {Problem::MaxCut, Problem::Eds, Problem::Hc})
                    report.record(check_solver(p, fuse[t], opts));
                auto & any = t % 2 ? multi[t] : fuse[t];
                for (auto p : {Problem::Ds, Problem::QColor, Problem::Chromatic, Problem::Cvc})
                    report.record(check_solver(p, any, opts));
                report.record(check_solver(Problem::Cds, t % 2 ? multi_conn[t] : fuse_conn[t], opts));
            }
        }
        else if (name == "repsets") {
            for (int t = 0; t < trials; ++t) {
                Rng rng(mix(seed, t));
                int n = int(rng.uniform(2, 7));
                int k = int(rng.uniform(1, 3));
                report.record(check_representativity(random_graph(rng, n, 0.5, k)));
            }
        }
        else
            throw DomainError("unknown suite " + name + " (roundtrip, solvers, repsets)");
        return report;
    }
}
