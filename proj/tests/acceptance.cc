// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "shapes.hh"

#include <fw/oracle.hh>
#include <fw/rewrite.hh>
#include <fw/solvers_fw.hh>
#include <fw/solvers_mcw.hh>
#include <fw/suites.hh>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace fw;

namespace
{
    constexpr std::uint64_t seed = 2024;

    struct Outcome
    {
        SuiteReport report;
        std::string detail;
    };

    int failures = 0;

    auto run(int number, const std::string & title, const std::function<Outcome()> & body) -> void
    {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        }
        catch (const std::exception & ex) {
            o.report.record(std::string("threw: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = o.report.ok() && o.report.passed > 0;
        failures += ! ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << number << " " << title << ": " << o.report.passed << " ok, "
                  << o.report.failed << " failed" << (o.detail.empty() ? "" : ", " + o.detail) << " ("
                  << std::fixed << std::setprecision(1) << secs << " s)\n";
        for (auto & f : o.report.failures)
            std::cout << "    " << f << "\n";
    }

    // Criteria 1-3 share one corpus and one pass over it.
    struct RoundtripRun
    {
        SuiteReport roundtrip, bounds, multi;
        double worst_glue = 0, worst_multi = 0;
    };

    auto roundtrip_run() -> const RoundtripRun &
    {
        static RoundtripRun r = [] {
            RoundtripRun out;
            for (auto & e : roundtrip_corpus(200, seed)) {
                auto f = check_roundtrip(e);
                auto join = [](const std::vector<std::string> & v) { return v.empty() ? std::string() : v[0]; };
                out.roundtrip.record(join(f.roundtrip));
                out.bounds.record(join(f.bounds));
                out.multi.record(join(f.multi));

                auto g = evaluate(e);
                int n = g.size(), m = int(g.edges.size());
                auto rg = fuse_to_reduced_glue(e);
                auto nm = normalize_multi(fuse_to_multi(e));
                out.worst_glue = std::max(out.worst_glue, double(rg.size()) / double(glue_size_bound(e.k, n, m)));
                out.worst_multi = std::max(out.worst_multi, double(nm.size()) / double(multi_size_bound(nm.k, n)));
            }
            return out;
        }();
        return r;
    }

    auto ratio(double x) -> std::string
    {
        std::ostringstream os;
        os << std::setprecision(3) << x;
        return os.str();
    }

    auto spot_values() -> Outcome
    {
        Outcome o;
        auto expect = [&](const std::string & what, long long got, long long want) {
            o.report.record(got == want ? ""
                                        : what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
        };
        auto x = [](const char * text) { return shapes::clique(text); };
        CutCountContext ctx;
        ctx.seed = seed;
        ctx.trials = 10;
        auto or_none = [](std::optional<int> r) { return r ? *r : -1; };

        expect("MaxCut(C5)", solve_max_cut(as_reduced_glue(x(shapes::c5))), 4);
        expect("chromatic(C5)", solve_chromatic_number(x(shapes::c5)), 3);
        expect("qcolor(K3, 3)", (long long) solve_q_coloring_count(x(shapes::k3), 3), 6);
        expect("EDS(P4)", solve_eds(as_reduced_glue(x(shapes::p4))), 1);
        expect("HC(K3)", solve_hamiltonian_cycle(x(shapes::k3)), 1);
        expect("HC(K1,3)", solve_hamiltonian_cycle(x(shapes::k13)), 0);
        expect("DS(K1,4)", solve_dominating_set(x(shapes::k14)), 1);
        expect("CVC(P3)", or_none(solve_cvc(x(shapes::p3), ctx)), 1);
        expect("CDS(P4)", or_none(solve_cds(x(shapes::p4), ctx)), 2);
        return o;
    }
}

int main()
{
    std::cout << "seed " << seed << "\n";

    run(1, "reduced glue round trip, 200 fuse expressions", [] {
        return Outcome{roundtrip_run().roundtrip, ""};
    });
    run(2, "size bounds (C1 = " + std::to_string(glue_size_constant) + ", C2 = " + std::to_string(multi_size_constant)
            + ")",
        [] {
            auto & r = roundtrip_run();
            return Outcome{r.bounds, "worst ratios " + ratio(r.worst_glue) + " glue, " + ratio(r.worst_multi) + " multi"};
        });
    run(3, "fuse_to_multi uses k+1 labels and keeps the graph", [] {
        return Outcome{roundtrip_run().multi, ""};
    });

    run(4, "exact solvers against brute force, 100 instances each", [] {
        Outcome o;
        auto fuse = solver_corpus(Dialect::Fuse, 100, seed);
        auto multi = solver_corpus(Dialect::Multi, 100, seed + 1);
        for (auto & e : fuse)
            for (auto p : {Problem::MaxCut, Problem::Eds, Problem::Hc})
                o.report.record(check_solver(p, e));
        for (auto & e : multi) {
            o.report.record(check_solver(Problem::Ds, e));
            o.report.record(check_solver(Problem::Chromatic, e));
            for (int q : {2, 3}) {
                CheckOptions opts;
                opts.q = q;
                o.report.record(check_solver(Problem::QColor, e, opts));
            }
        }
        o.detail = "maxcut, eds, hc on fuse; ds, chromatic, qcolor q=2,3 on multi";
        return o;
    });

    run(5, "cut and count, 50 instances each, 10 trials, one rerun", [] {
        Outcome o;
        auto multi = solver_corpus(Dialect::Multi, 50, seed + 2);
        auto connected = solver_corpus(Dialect::Multi, 50, seed + 3, 3, true);
        for (int i = 0; i < 50; ++i) {
            CheckOptions opts;
            opts.trials = 10;
            opts.seed = seed + i;
            o.report.record(check_solver(Problem::Cvc, multi[i], opts));
            o.report.record(check_solver(Problem::Cds, connected[i], opts));
        }
        return o;
    });

    run(6, "representativity, 30 graphs, blue multigraphs up to 4 edges", [] {
        return Outcome{run_suite("repsets", 30, seed), ""};
    });

    run(7, "spot values", spot_values);

    return failures ? 1 : 0;
}
