#include "rules.hh"

#include <algorithm>

using std::string;
using std::to_string;
using std::vector;

namespace fw
{
    auto suppress_useless(const Expression & e) -> Expression
    {
        Work w(e);
        w.suppress_useless();
        return w.to_expression();
    }

    auto apply_rule(const Expression & e, int node, int rule) -> Expression
    {
        if (node < 0 || node >= e.size())
            throw RuleNotApplicable("rule " + to_string(rule) + " not applicable: no node " + to_string(node));
        if (rule < 1 || rule > 14)
            throw RuleNotApplicable("unknown rule " + to_string(rule));
        Work w(e);
        if (! w.nodes[node].alive)
            throw RuleNotApplicable("rule " + to_string(rule) + " not applicable: node " + to_string(node) + " is unreachable");

        for (int x : rule_lhs(w, node, rule))
            if (w.useless(x))
                throw RuleNotApplicable("rule " + to_string(rule) + " not applicable: node " + to_string(x)
                    + " on the left-hand side is useless");

        if (rule <= 11)
            apply_fuse_rule(w, node, rule);
        else if (rule == 12)
            apply_relabel_introduce(w, node);
        else
            apply_join_relabel(w, node, rule);
        return w.to_expression();
    }

    namespace
    {
        // Walk from a fuse down to its first binary node; every inner node
        // must be a fuse. Returns the binary node or -1.
        auto union_below(const Work & w, int t, bool & clean) -> int
        {
            clean = true;
            int x = w.child(t);
            while (w.is_unary(x)) {
                if (w.nodes[x].kind != Kind::Fuse)
                    clean = false;
                x = w.child(x);
            }
            return w.is_binary(x) ? x : -1;
        }

        auto violating_shift(const Work & w, int t) -> bool
        {
            bool clean;
            int u = union_below(w, t, clean);
            return u < 0 || ! clean;
        }

        auto shift_all(Work & w, RewriteStats * stats) -> void
        {
            w.suppress_useless();
            while (true) {
                int pick = -1;
                for (int t : w.postorder())
                    if (w.nodes[t].kind == Kind::Fuse && violating_shift(w, t)) {
                        pick = t;
                        break;
                    }
                if (pick < 0)
                    break;
                process_fuse(w, pick, stats);
                w.suppress_useless();
            }
        }

        auto binary_heights(const Work & w) -> vector<int>
        {
            vector<int> h(w.nodes.size(), 0);
            for (int x : w.postorder()) {
                int best = 0;
                for (int c : w.nodes[x].kids)
                    best = std::max(best, h[c]);
                h[x] = best + (w.is_binary(x) ? 1 : 0);
            }
            return h;
        }

        auto localize_violating(Work & w, int t) -> bool
        {
            bool clean;
            int u = union_below(w, t, clean);
            if (u < 0)
                return true;
            Label i = w.nodes[t].a;
            return class_size(w.graph(w.nodes[u].kids[0]), i) >= 2 || class_size(w.graph(w.nodes[u].kids[1]), i) >= 2;
        }
    }

    auto shift_fuses_to_unions(const Expression & e, RewriteStats * stats) -> Expression
    {
        Work w(e);
        shift_all(w, stats);
        return w.to_expression();
    }

    auto localize_fuses(const Expression & e, RewriteStats * stats) -> Expression
    {
        Work w(e);
        shift_all(w, stats);
        while (true) {
            auto h = binary_heights(w);
            int pick = -1;
            for (int t : w.postorder())
                if (w.nodes[t].kind == Kind::Fuse && localize_violating(w, t) && (pick < 0 || h[t] > h[pick]))
                    pick = t;
            if (pick < 0)
                break;

            bool clean;
            int u = union_below(w, pick, clean);
            Label i = w.nodes[pick].a;
            vector<int> fresh;
            for (int side : vector<int>(w.nodes[u].kids)) {
                int x = w.make_unary(Kind::Fuse, i);
                w.nodes[x].origin = w.nodes[pick].origin;
                w.insert_above(side, x);
                fresh.push_back(x);
            }
            if (stats)
                ++stats->subdivisions;

            vector<int> keep;
            for (int x : fresh) {
                if (w.useless(x))
                    w.suppress(x);
                else
                    keep.push_back(x);
            }
            if (w.useless(pick))
                w.suppress(pick);
            for (int x : keep)
                process_fuse(w, x, stats);
            w.suppress_useless();
        }
        return w.to_expression();
    }

    auto check_shifted(const Expression & e) -> string
    {
        Work w(e);
        for (int t : w.postorder())
            if (w.nodes[t].kind == Kind::Fuse && violating_shift(w, t))
                return "fuse node " + to_string(t) + " has a non-fuse node before its union";
        return "";
    }

    auto check_localized(const Expression & e) -> string
    {
        auto why = check_shifted(e);
        if (! why.empty())
            return why;
        Work w(e);
        for (int t : w.postorder()) {
            if (w.nodes[t].kind != Kind::Fuse)
                continue;
            bool clean;
            int u = union_below(w, t, clean);
            Label i = w.nodes[t].a;
            for (int side : w.nodes[u].kids)
                if (class_size(w.graph(side), i) != 1)
                    return "fuse node " + to_string(t) + " does not take exactly one vertex from each side";
        }
        return "";
    }
}
