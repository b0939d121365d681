#ifndef FW_ORACLE_HH
#define FW_ORACLE_HH

#include <fw/expr.hh>

#include <cstdint>
#include <map>
#include <random>
#include <string>

namespace fw
{
    // Seeded generator shared by the generators, randomized solvers and suites.
    class Rng
    {
        public:
            explicit Rng(std::uint64_t seed) : _engine(seed) {}

            // Uniform in [lo, hi].
            auto uniform(long long lo, long long hi) -> long long
            {
                return std::uniform_int_distribution<long long>(lo, hi)(_engine);
            }

            auto real(double lo, double hi) -> double
            {
                return std::uniform_real_distribution<double>(lo, hi)(_engine);
            }

            auto chance(double p) -> bool { return std::bernoulli_distribution(p)(_engine); }

            // Independent child stream, so adding draws in one place does not
            // shift the numbers seen elsewhere.
            auto split() -> Rng { return Rng(_engine()); }

            auto next() -> std::uint64_t { return _engine(); }

        private:
            std::mt19937_64 _engine;
    };

    // Relative weights of the generator's moves. A zero weight disables a move.
    struct GenWeights
    {
        double introduce = 3;
        double binary = 3;
        double join = 3;
        double relabel = 2;
        double fuse = 2;
        double link = 0;            // union of the top two entries followed by a join
        double relabel_empty = 0.1; // multi only: share of relabels going to the empty set
        double multi_introduce = 0.3; // multi only: chance of a two-label introduce
    };

    struct GenConfig
    {
        Dialect dialect = Dialect::Fuse;
        int k = 3;
        int budget = 20;     // node count of the result
        std::uint64_t seed = 1;
        int max_leaves = 0;  // 0: no cap
        GenWeights weights;
    };

    auto gen_expression(const GenConfig & cfg) -> Expression;

    // G(n, p) with uniformly random single labels from 1..k, titles v0..v{n-1}.
    auto random_graph(Rng & rng, int n, double p, int k) -> LabeledGraph;

    enum class Problem
    {
        MaxCut,
        Eds,
        Hc,
        Ds,
        QColor,
        Chromatic,
        Cvc,
        Cds
    };

    auto problem_name(Problem p) -> std::string;
    auto parse_problem(const std::string & s) -> Problem;

    struct OracleParams
    {
        int q = 0; // q-coloring only
    };

    constexpr int oracle_vertex_limit = 12;

    // Exhaustive answers. Hamiltonicity is reported as 0 or 1.
    auto brute_force(Problem p, const LabeledGraph & g, const OracleParams & params = {}) -> long long;

    auto brute_max_cut(const LabeledGraph & g) -> int;
    auto brute_eds(const LabeledGraph & g) -> int;
    auto brute_hamiltonian(const LabeledGraph & g) -> bool;
    auto brute_ds(const LabeledGraph & g) -> int;
    auto brute_q_colorings(const LabeledGraph & g, int q) -> long long;
    auto brute_chromatic(const LabeledGraph & g) -> int;
    auto brute_cvc(const LabeledGraph & g) -> int;
    auto brute_cds(const LabeledGraph & g) -> int;

    struct CutCountContext
    {
        std::string pinned;                 // v*
        std::map<std::string, int> weight;  // omega, values in 1..2n
        std::uint64_t seed = 0;
        int trials = 10;
    };

    // Uniform weights in 1..2n for every vertex.
    auto sample_weights(Rng & rng, const LabeledGraph & g) -> std::map<std::string, int>;

    enum class CutConstraint
    {
        Dominating,
        VertexCover
    };

    // Parity of the number of pairs (L, R) with v* in L, no L-R edge, L u R
    // satisfying the constraint, |L u R| = c and omega(L u R) = w.
    auto count_consistent_cuts_mod2(const LabeledGraph & g, const CutCountContext & ctx, CutConstraint constraint,
        int c, int w) -> int;
}

#endif
