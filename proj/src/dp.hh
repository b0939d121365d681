#ifndef FW_SRC_DP_HH
#define FW_SRC_DP_HH

// Helpers shared by the table-based solvers. Not installed.

#include <fw/expr.hh>

#include <bit>
#include <string>

namespace fw
{
    // Throws DomainError unless e is a reduced glue expression.
    auto require_reduced(const Expression & e, const std::string & who) -> void;

    // Labels of the vertices shared by two glue operands.
    auto shared_labels(const LabeledGraph & g1, const LabeledGraph & g2) -> LabelSet;

    inline auto only_label(LabelSet s) -> Label
    {
        return Label(std::countr_zero(s)) + 1;
    }
}

#endif
