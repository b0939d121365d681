#ifndef FW_SOLVE_HH
#define FW_SOLVE_HH

#include <string>

namespace fw
{
    // Counters filled in by the table-based solvers when asked for.
    struct SolveStats
    {
        long long max_table = 0;
        long long max_family = 0;
        long long family_bound_violations = 0;
        long long identity_violations = 0; // EDS glue-label entries with s_i + r_i > 1
        int runs = 0;                      // HC: pinned edges tried; cut and count: DP passes
        std::string note;
    };
}

#endif
