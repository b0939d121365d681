#ifndef FW_SOLVERS_MCW_HH
#define FW_SOLVERS_MCW_HH

#include <fw/expr.hh>
#include <fw/oracle.hh>
#include <fw/solve.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace fw
{
    // Normalized multi expression for a clique, fuse or multi input.
    auto as_normalized_multi(const Expression & e) -> Expression;

    // Active labels per node id: nonempty labels that some ancestor join will
    // hand a common neighbour. Nodes off the root's tree get 0.
    auto active_labels(const Expression & e) -> std::vector<LabelSet>;

    // Every solver here accepts clique, fuse or multi input and normalizes
    // first. The *_tables and *_parities entry points want normalized input.

    // (z, u) -> least partial solution size. z: labels holding a chosen
    // vertex; u: labels holding a pending domination obligation.
    using DsTable = std::map<std::pair<LabelSet, LabelSet>, int>;
    auto ds_tables(const Expression & e, SolveStats * stats = nullptr) -> std::vector<DsTable>;
    auto solve_dominating_set(const Expression & e, SolveStats * stats = nullptr) -> int;

    // Key: one colour mask per label (0 off the active labels). Counts are
    // exact as long as they fit in 64 bits.
    using FootprintTable = std::map<std::vector<int>, std::uint64_t>;
    auto q_coloring_tables(const Expression & e, int q, SolveStats * stats = nullptr) -> std::vector<FootprintTable>;
    auto solve_q_coloring_count(const Expression & e, int q, SolveStats * stats = nullptr) -> std::uint64_t;

    auto solve_chromatic_number(const Expression & e, SolveStats * stats = nullptr) -> int;

    // Cut and count. The *_parities functions use ctx.pinned and ctx.weight
    // as given and return the (c, w) pairs whose consistent-cut count is odd.
    // The solve_* drivers sample fresh weights for each of ctx.trials trials
    // from ctx.seed and try every vertex as v*. Nothing found -> nullopt.
    using ParitySet = std::set<std::pair<int, int>>;
    auto cvc_parities(const Expression & e, const CutCountContext & ctx, SolveStats * stats = nullptr) -> ParitySet;
    auto solve_cvc(const Expression & e, const CutCountContext & ctx, SolveStats * stats = nullptr) -> std::optional<int>;

    auto cds_parities(const Expression & e, const CutCountContext & ctx, SolveStats * stats = nullptr) -> ParitySet;
    auto solve_cds(const Expression & e, const CutCountContext & ctx, SolveStats * stats = nullptr) -> std::optional<int>;

    // Per-label signature states of the connected dominating set DP.
    enum class CdsState
    {
        Empty,
        F,
        L,
        R,
        Two
    };

    auto cds_feas(CdsState a, CdsState b) -> int;
    auto cds_merge(CdsState a, CdsState b) -> CdsState;
}

#endif
