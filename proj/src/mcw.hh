#ifndef FW_SRC_MCW_HH
#define FW_SRC_MCW_HH

// Shared pieces of the multi expression solvers. Not installed.

#include <fw/expr.hh>
#include <fw/solvers_mcw.hh>

#include <functional>
#include <string>
#include <vector>

namespace fw
{
    // Throws DomainError unless e is a valid normalized multi expression.
    auto require_normalized(const Expression & e, const std::string & who) -> void;

    // Labels that label l turns into at a unary node (itself at joins).
    auto relabel_image(const ExprNode & n, Label l) -> LabelSet;

    auto present_labels(const LabeledGraph & g) -> LabelSet;

    // Colourings with footprints on active labels: the machinery behind
    // q-coloring and connected vertex cover.
    struct FootprintRules
    {
        struct Option
        {
            int colour;
            int dc = 0, dw = 0;
        };

        int colours = 2;
        std::vector<unsigned> clash;   // clash[x]: colours forbidden across a new edge from x
        bool track_size = false;       // keys carry (c, w) after the label masks
        bool subset_union = false;     // zeta/Moebius union instead of pairwise
        std::function<std::vector<Option>(const ExprNode &)> introduce;
    };

    auto footprint_tables(const Expression & e, const FootprintRules & rules, SolveStats * stats)
        -> std::vector<FootprintTable>;
}

#endif
