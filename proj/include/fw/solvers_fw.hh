#ifndef FW_SOLVERS_FW_HH
#define FW_SOLVERS_FW_HH

#include <fw/expr.hh>
#include <fw/solve.hh>

#include <map>
#include <vector>

namespace fw
{
    // Reduced glue expression for a clique, fuse or glue input.
    auto as_reduced_glue(const Expression & e) -> Expression;

    // Root table of the Max Cut DP: s-vector -> largest crossing-edge count.
    using MaxCutTable = std::map<std::vector<int>, int>;
    auto max_cut_table(const Expression & e, SolveStats * stats = nullptr) -> MaxCutTable;

    // The three solvers below reject glue expressions that are not reduced.
    auto solve_max_cut(const Expression & e, SolveStats * stats = nullptr) -> int;

    // Key is the s-vector followed by the r-vector; value is the least l.
    using EdsTable = std::map<std::vector<int>, int>;
    auto eds_table(const Expression & e, SolveStats * stats = nullptr) -> EdsTable;
    auto solve_eds(const Expression & e, SolveStats * stats = nullptr) -> int;

    // Accepts fuse, clique or glue expressions and converts as needed.
    auto solve_hamiltonian_cycle(const Expression & e, SolveStats * stats = nullptr) -> bool;
}

#endif
