#ifndef FW_SRC_RULES_HH
#define FW_SRC_RULES_HH

#include "work.hh"

#include <fw/rewrite.hh>

namespace fw
{
    // Maximal run of relabels rho_{a_j -> i} directly below a fuse theta_i.
    struct FuseChain
    {
        std::vector<int> nodes;    // t_1 .. t_q, top down
        std::vector<Label> labels; // a_1 .. a_q
        int below = -1;            // t', the child of t_q (or of t when q = 0)
        LabelSet members = 0;      // {a_1 .. a_q, i}
    };

    auto fuse_chain(const Work & w, int t) -> FuseChain;

    // Which of rules 1..11 fits the fuse at t, or 0 if the fuse is done
    // (child is a union or a fuse with no chain in between).
    auto pick_fuse_rule(const Work & w, int t) -> int;

    // Applies one of rules 1..11 at fuse t; returns where the fuse ended up.
    auto apply_fuse_rule(Work & w, int t, int rule) -> int;

    // Rule 12 at relabel t; returns the introduce node.
    auto apply_relabel_introduce(Work & w, int t) -> int;

    // Rules 13 and 14 at join t.
    auto apply_join_relabel(Work & w, int t, int rule) -> void;

    // Nodes making up the left-hand side of a rule at t (unary ones only).
    auto rule_lhs(const Work & w, int t, int rule) -> std::vector<int>;

    // Moves unary x (with its payload) to sit directly above t.
    auto lift(Work & w, int x, int t) -> void;

    // Shifts one fuse down to its union by repeated rule application. Returns the
    // fuse's final position or -1 if it disappeared as useless.
    auto process_fuse(Work & w, int t, RewriteStats * stats) -> int;
}

#endif
