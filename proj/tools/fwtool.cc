// fwtool: command line front end for the fw library.
//
// Exit codes: 0 success, 1 domain error (bad input, failed check, guard
// tripped), 2 usage error.

#include <fw/oracle.hh>
#include <fw/rewrite.hh>
#include <fw/solvers_fw.hh>
#include <fw/solvers_mcw.hh>
#include <fw/suites.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using std::string;

namespace
{
    const std::vector<string> problems = {"maxcut", "eds", "hc", "ds", "qcolor", "chromatic", "cvc", "cds"};
    const std::vector<string> dialects = {"clique", "fuse", "glue", "multi"};

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto slurp(const string & path) -> string
    {
        if (path == "-") {
            std::ostringstream os;
            os << std::cin.rdbuf();
            return os.str();
        }
        std::ifstream in(path);
        if (! in)
            throw fw::DomainError("cannot read " + path);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    // Dialect from the flag, else from the extension, else fuse.
    auto pick_dialect(const string & flag, const string & path) -> fw::Dialect
    {
        if (! flag.empty())
            return fw::parse_dialect(flag);
        auto dot = path.rfind('.');
        string ext = dot == string::npos ? "" : path.substr(dot + 1);
        if (ext == "cx")
            return fw::Dialect::Clique;
        if (ext == "gx")
            return fw::Dialect::Glue;
        if (ext == "mx")
            return fw::Dialect::Multi;
        return fw::Dialect::Fuse;
    }

    struct ExprArgs
    {
        string path, dialect;
        int k = 0;

        auto attach(CLI::App * app) -> void
        {
            app->add_option("--expr,expr", path, "expression file, - for stdin")->required();
            app->add_option("--dialect", dialect, "clique, fuse, glue or multi (default: from extension, else fuse)")
                ->check(CLI::IsMember(dialects));
            app->add_option("--k", k, "label count (default: largest label used)");
        }

        auto load() const -> fw::Expression
        {
            return fw::parse_expression(slurp(path), pick_dialect(dialect, path), k);
        }
    };

    auto print_answer(long long x) -> void
    {
        std::cout << "answer " << x << "\n";
    }

    auto print_stats(const fw::SolveStats & s, bool all) -> void
    {
        std::cout << "max-table " << s.max_table << "\n";
        if (! all)
            return;
        std::cout << "max-family " << s.max_family << "\n"
                  << "family-bound-violations " << s.family_bound_violations << "\n"
                  << "identity-violations " << s.identity_violations << "\n"
                  << "runs " << s.runs << "\n";
        if (! s.note.empty())
            std::cout << "note " << s.note << "\n";
    }

    auto run(int argc, char ** argv) -> int
    {
        CLI::App app{"Labeled graph expressions and the solvers that run on them."};
        app.require_subcommand(1);

        // parse
        ExprArgs parse_args;
        auto * parse = app.add_subcommand("parse", "parse an expression and print it back in canonical form");
        parse_args.attach(parse);

        // validate
        ExprArgs validate_args;
        auto * validate_cmd = app.add_subcommand("validate", "list well-formedness violations");
        validate_args.attach(validate_cmd);

        // eval
        ExprArgs eval_args;
        auto * eval = app.add_subcommand("eval", "print the graph an expression builds");
        eval_args.attach(eval);

        // convert
        ExprArgs convert_args;
        string target;
        bool report_size = false;
        auto * convert = app.add_subcommand("convert", "rewrite into another dialect");
        convert_args.attach(convert);
        convert->add_option("--to", target, "glue, reduced-glue, multi or normalized-multi")
            ->required()
            ->check(CLI::IsMember({"glue", "reduced-glue", "multi", "normalized-multi"}));
        convert->add_flag("--report-size", report_size, "print node counts and the size bound instead");

        // solve
        ExprArgs solve_args;
        string problem;
        int q = 0, trials = 10;
        std::uint64_t seed = 1;
        bool stats_flag = false;
        auto * solve = app.add_subcommand("solve", "run a solver on an expression");
        solve_args.attach(solve);
        solve->add_option("--problem", problem, "maxcut, eds, hc, ds, qcolor, chromatic, cvc or cds")
            ->required()
            ->check(CLI::IsMember(problems));
        solve->add_option("--q", q, "number of colours (qcolor)");
        solve->add_option("--trials", trials, "cut and count trials (cvc, cds)")->check(CLI::PositiveNumber);
        solve->add_option("--seed", seed, "random seed");
        solve->add_flag("--stats", stats_flag, "print table statistics");

        // oracle
        string graph_path, oracle_problem;
        int oracle_q = 0;
        auto * oracle = app.add_subcommand("oracle", "brute-force answer on a graph file");
        oracle->add_option("--problem", oracle_problem, "as for solve")->required()->check(CLI::IsMember(problems));
        oracle->add_option("--graph,graph", graph_path, "graph file, - for stdin")->required();
        oracle->add_option("--q", oracle_q, "number of colours (qcolor)");

        // gen
        fw::GenConfig gen_cfg;
        string gen_dialect = "fuse";
        auto * gen = app.add_subcommand("gen", "generate a random expression");
        gen->add_option("--dialect", gen_dialect, "clique, fuse, glue or multi")->check(CLI::IsMember(dialects));
        gen->add_option("--k", gen_cfg.k, "label count")->check(CLI::Range(1, fw::max_labels));
        gen->add_option("--ops", gen_cfg.budget, "operator budget")->check(CLI::PositiveNumber);
        gen->add_option("--seed", gen_cfg.seed, "random seed");
        gen->add_option("--max-leaves", gen_cfg.max_leaves, "cap on introduced vertices, 0 for none");

        // check
        string suite = "roundtrip";
        int suite_trials = 20;
        std::uint64_t suite_seed = 1;
        auto * check = app.add_subcommand("check", "run a property suite against the oracles");
        check->add_option("--suite", suite, "roundtrip, solvers or repsets")
            ->check(CLI::IsMember(fw::suite_names()));
        check->add_option("--trials", suite_trials, "instances to try")->check(CLI::PositiveNumber);
        check->add_option("--seed", suite_seed, "random seed");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }

        if (parse->parsed()) {
            auto e = parse_args.load();
            std::cout << fw::serialize_expression(e) << "\n";
            return 0;
        }
        if (validate_cmd->parsed()) {
            auto report = fw::validate(validate_args.load());
            if (report.ok()) {
                std::cout << "ok\n";
                return 0;
            }
            for (auto & v : report.violations)
                std::cout << "node " << v.node << " " << v.rule << ": " << v.message << "\n";
            return 1;
        }
        if (eval->parsed()) {
            std::cout << fw::write_graph(fw::evaluate(eval_args.load()));
            return 0;
        }
        if (convert->parsed()) {
            auto e = convert_args.load();
            fw::evaluate(e); // reject invalid input up front
            fw::Expression out;
            if (target == "glue")
                out = fw::fuse_to_glue(e);
            else if (target == "reduced-glue")
                out = fw::fuse_to_reduced_glue(e);
            else if (target == "multi")
                out = fw::fuse_to_multi(e);
            else
                out = fw::as_normalized_multi(e);
            if (! report_size) {
                std::cout << fw::serialize_expression(out) << "\n";
                return 0;
            }
            auto g = fw::evaluate(e);
            int n = g.size(), m = int(g.edges.size());
            bool multi = target == "multi" || target == "normalized-multi";
            long long bound = multi ? fw::multi_size_bound(out.k, n) : fw::glue_size_bound(e.k, n, m);
            std::cout << "input-nodes " << e.size() << "\n"
                      << "output-nodes " << out.size() << "\n"
                      << "k " << out.k << "\n"
                      << "n " << n << "\n"
                      << "m " << m << "\n"
                      << "bound " << bound << "\n"
                      << "bound-ratio " << double(out.size()) / double(bound) << "\n";
            return 0;
        }
        if (solve->parsed()) {
            auto p = fw::parse_problem(problem);
            if (p == fw::Problem::QColor && q == 0)
                throw UsageError("solve --problem qcolor needs --q");
            auto e = solve_args.load();
            fw::SolveStats stats;
            std::optional<long long> answer;
            string text;
            switch (p) {
                case fw::Problem::MaxCut: answer = fw::solve_max_cut(fw::as_reduced_glue(e), &stats); break;
                case fw::Problem::Eds: answer = fw::solve_eds(fw::as_reduced_glue(e), &stats); break;
                case fw::Problem::Hc: text = fw::solve_hamiltonian_cycle(e, &stats) ? "true" : "false"; break;
                case fw::Problem::Ds: answer = fw::solve_dominating_set(e, &stats); break;
                case fw::Problem::QColor: answer = (long long) fw::solve_q_coloring_count(e, q, &stats); break;
                case fw::Problem::Chromatic: answer = fw::solve_chromatic_number(e, &stats); break;
                case fw::Problem::Cvc:
                case fw::Problem::Cds: {
                    fw::CutCountContext ctx;
                    ctx.seed = seed;
                    ctx.trials = trials;
                    auto r = p == fw::Problem::Cvc ? fw::solve_cvc(e, ctx, &stats) : fw::solve_cds(e, ctx, &stats);
                    if (r)
                        answer = *r;
                    else
                        text = "none";
                    break;
                }
            }
            if (answer)
                print_answer(*answer);
            else
                std::cout << "answer " << text << "\n";
            std::cout << "seed " << seed << "\n";
            print_stats(stats, stats_flag);
            return 0;
        }
        if (oracle->parsed()) {
            auto p = fw::parse_problem(oracle_problem);
            if (p == fw::Problem::QColor && oracle_q == 0)
                throw UsageError("oracle --problem qcolor needs --q");
            auto g = fw::read_graph(slurp(graph_path));
            fw::OracleParams params;
            params.q = oracle_q;
            auto x = fw::brute_force(p, g, params);
            if (p == fw::Problem::Hc)
                std::cout << "answer " << (x ? "true" : "false") << "\n";
            else if ((p == fw::Problem::Cvc || p == fw::Problem::Cds) && x < 0)
                std::cout << "answer none\n";
            else
                print_answer(x);
            return 0;
        }
        if (gen->parsed()) {
            gen_cfg.dialect = fw::parse_dialect(gen_dialect);
            std::cout << fw::serialize_expression(fw::gen_expression(gen_cfg)) << "\n";
            return 0;
        }
        if (check->parsed()) {
            auto report = fw::run_suite(suite, suite_trials, suite_seed);
            std::cout << "suite " << report.suite << "\n"
                      << "seed " << suite_seed << "\n"
                      << "passed " << report.passed << "\n"
                      << "failed " << report.failed << "\n";
            for (auto & f : report.failures)
                std::cout << "failure " << f << "\n";
            return report.ok() ? 0 : 1;
        }
        return 2;
    }
}

int main(int argc, char ** argv)
{
    try {
        return run(argc, argv);
    }
    catch (const UsageError & e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    }
    catch (const fw::DomainError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
