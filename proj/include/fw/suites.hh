#ifndef FW_SUITES_HH
#define FW_SUITES_HH

// Property suites shared by `fwtool check` and the acceptance binary.

#include <fw/expr.hh>
#include <fw/oracle.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace fw
{
    struct SuiteReport
    {
        std::string suite;
        int passed = 0, failed = 0;
        std::vector<std::string> failures; // first few only

        auto ok() const -> bool { return failed == 0; }
        auto record(const std::string & failure) -> void; // empty means pass
    };

    // Fuse expressions with k cycling through 1..4 and at most 30 operators.
    auto roundtrip_corpus(int count, std::uint64_t seed) -> std::vector<Expression>;

    // Solver instances with 3..9 vertices, k cycling through 1..max_k (from 2
    // when connected graphs are asked for). Fuse or multi dialect.
    auto solver_corpus(Dialect d, int count, std::uint64_t seed, int max_k = 3, bool connected = false)
        -> std::vector<Expression>;

    // Problems found for one expression, grouped by what they break.
    struct RoundtripFindings
    {
        std::vector<std::string> roundtrip; // reduced glue evaluates differently
        std::vector<std::string> bounds;    // node counts over the fixed bounds
        std::vector<std::string> multi;     // fuse_to_multi / normalize_multi output wrong
    };

    auto check_roundtrip(const Expression & e) -> RoundtripFindings;

    struct CheckOptions
    {
        int q = 3;
        int trials = 10;
        std::uint64_t seed = 1;
    };

    // Compares one solver with the oracle on one instance; empty when they
    // agree. Cut and count solvers get one rerun with another seed before a
    // mismatch counts, but an answer below the oracle fails at once.
    auto check_solver(Problem p, const Expression & e, const CheckOptions & opts = {}) -> std::string;

    // reduce_family against every blue multigraph with up to max_blue edges
    // over the labels of g, plus the family size bound. Empty when fine.
    auto check_representativity(const LabeledGraph & g, int max_blue = 4) -> std::string;

    auto suite_names() -> std::vector<std::string>;
    auto run_suite(const std::string & name, int trials, std::uint64_t seed) -> SuiteReport;
}

#endif
