#include "rules.hh"

using std::string;
using std::to_string;
using std::vector;

namespace fw
{
    namespace
    {
        [[noreturn]] auto not_applicable(int rule, const string & why) -> void
        {
            throw RuleNotApplicable("rule " + to_string(rule) + " not applicable: " + why);
        }

        auto expect_fuse(const Work & w, int t, int rule) -> void
        {
            if (w.nodes[t].kind != Kind::Fuse)
                not_applicable(rule, "node " + to_string(t) + " is not a fuse node");
        }
    }

    auto fuse_chain(const Work & w, int t) -> FuseChain
    {
        FuseChain ch;
        Label i = w.nodes[t].a;
        ch.members = bit(i);
        int x = w.child(t);
        while (w.nodes[x].kind == Kind::Relabel && w.nodes[x].b == i) {
            ch.nodes.push_back(x);
            ch.labels.push_back(w.nodes[x].a);
            ch.members |= bit(w.nodes[x].a);
            x = w.child(x);
        }
        ch.below = x;
        return ch;
    }

    auto pick_fuse_rule(const Work & w, int t) -> int
    {
        Label i = w.nodes[t].a;
        int c = w.child(t);
        auto & cn = w.nodes[c];
        if (arity(cn.kind) == 2 || cn.kind == Kind::Fuse || cn.kind == Kind::Introduce)
            return 0;
        if (cn.kind == Kind::Join)
            return 1;
        if (cn.a != i && cn.b != i)
            return 2;
        if (cn.b != i)
            return 0; // rho_{i -> b} right below theta_i makes the fuse useless

        auto ch = fuse_chain(w, t);
        auto & p = w.nodes[ch.below];
        auto in = [&](Label l) { return has_label(ch.members, l); };
        switch (p.kind) {
            case Kind::Join:
                if (in(p.a) && in(p.b))
                    return 3;
                if (in(p.a) || in(p.b))
                    return 4;
                return 5;
            case Kind::Relabel: {
                bool in_chain = false;
                for (auto l : ch.labels)
                    in_chain = in_chain || l == p.b;
                if (! in(p.a) && ! in(p.b))
                    return 6;
                if (in_chain)
                    return 7;
                if (p.a == i)
                    return 8;
                return 0; // a chain relabel is useless
            }
            case Kind::Union:
            case Kind::Glue:
                return 9;
            case Kind::Fuse:
                return in(p.a) ? 10 : 11;
            default:
                return 0;
        }
    }

    auto lift(Work & w, int x, int t) -> void
    {
        int c = w.child(x);
        w.replace(x, c);
        w.nodes[x].kids.clear();
        w.insert_above(t, x);
    }

    auto apply_fuse_rule(Work & w, int t, int rule) -> int
    {
        expect_fuse(w, t, rule);
        Label i = w.nodes[t].a;
        int c = w.child(t);
        auto & cn = w.nodes[c];

        if (rule == 1) {
            if (cn.kind != Kind::Join)
                not_applicable(1, "child of the fuse is not a join");
            w.swap_payload(t, c);
            return c;
        }
        if (rule == 2) {
            if (cn.kind != Kind::Relabel)
                not_applicable(2, "child of the fuse is not a relabel");
            if (cn.a == i || cn.b == i)
                not_applicable(2, "fused label " + to_string(i) + " occurs in the relabel");
            w.swap_payload(t, c);
            return c;
        }

        auto ch = fuse_chain(w, t);
        int tp = ch.below;
        auto & p = w.nodes[tp];
        auto in = [&](Label l) { return has_label(ch.members, l); };
        auto in_chain = [&](Label l) {
            for (auto x : ch.labels)
                if (x == l)
                    return true;
            return false;
        };

        switch (rule) {
            case 3:
            case 4:
            case 5: {
                if (p.kind != Kind::Join)
                    not_applicable(rule, "node below the relabel chain is not a join");
                bool ia = in(p.a), ib = in(p.b);
                if (rule == 3) {
                    if (! (ia && ib))
                        not_applicable(3, "joined labels are not both in {a_1..a_q, i}");
                    w.suppress(tp);
                }
                else if (rule == 4) {
                    if (ia == ib)
                        not_applicable(4, "exactly one joined label must lie in {a_1..a_q, i}");
                    Label other = ia ? p.b : p.a;
                    p.a = i;
                    p.b = other;
                    lift(w, tp, t);
                }
                else {
                    if (ia || ib)
                        not_applicable(5, "a joined label lies in {a_1..a_q, i}");
                    lift(w, tp, t);
                }
                return t;
            }
            case 6:
                if (p.kind != Kind::Relabel)
                    not_applicable(6, "node below the relabel chain is not a relabel");
                if (in(p.a) || in(p.b))
                    not_applicable(6, "relabel touches {a_1..a_q, i}");
                lift(w, tp, t);
                return t;
            case 7:
                if (p.kind != Kind::Relabel)
                    not_applicable(7, "node below the relabel chain is not a relabel");
                if (! in_chain(p.b))
                    not_applicable(7, "relabel target is not among a_1..a_q");
                p.b = i;
                w.touch(tp);
                if (p.a == i)
                    w.suppress(tp);
                return t;
            case 8: {
                if (p.kind != Kind::Relabel || p.a != i)
                    not_applicable(8, "node below the relabel chain is not a relabel from " + to_string(i));
                if (in(p.b))
                    not_applicable(8, "relabel target lies in {a_1..a_q, i}");
                if (ch.nodes.empty())
                    not_applicable(8, "empty relabel chain");
                Label a1 = ch.labels[0];
                auto & top = w.nodes[t];
                top.kind = Kind::Relabel;
                top.a = a1;
                top.b = i;
                auto & first = w.nodes[ch.nodes[0]];
                first.kind = Kind::Fuse;
                first.a = a1;
                first.b = 0;
                for (std::size_t j = 1; j < ch.nodes.size(); ++j)
                    w.nodes[ch.nodes[j]].b = a1;
                w.touch(tp);
                return ch.nodes[0];
            }
            case 9: {
                if (arity(p.kind) != 2)
                    not_applicable(9, "node below the relabel chain is not a union");
                for (int side : vector<int>(p.kids)) {
                    int top = side;
                    for (std::size_t j = ch.nodes.size(); j-- > 0;) {
                        int x = w.make_unary(Kind::Relabel, ch.labels[j], i);
                        w.nodes[x].origin = w.nodes[ch.nodes[j]].origin;
                        w.insert_above(top, x);
                        top = x;
                    }
                }
                for (int x : ch.nodes)
                    w.suppress(x);
                return t;
            }
            case 10:
            case 11:
                if (p.kind != Kind::Fuse)
                    not_applicable(rule, "node below the relabel chain is not a fuse");
                if (rule == 10) {
                    if (! in(p.a))
                        not_applicable(10, "fused label is not in {a_1..a_q, i}");
                    w.suppress(tp);
                }
                else {
                    if (in(p.a))
                        not_applicable(11, "fused label lies in {a_1..a_q, i}");
                    lift(w, tp, t);
                }
                return t;
            default:
                not_applicable(rule, "not a fuse rule");
        }
    }

    auto apply_relabel_introduce(Work & w, int t) -> int
    {
        auto & n = w.nodes[t];
        if (n.kind != Kind::Relabel)
            not_applicable(12, "node is not a single-target relabel");
        int c = w.child(t);
        auto & leaf = w.nodes[c];
        if (leaf.kind != Kind::Introduce)
            not_applicable(12, "child is not an introduce node");
        if (leaf.labels != bit(n.a))
            not_applicable(12, "introduce label differs from the relabel source");
        leaf.labels = bit(n.b);
        w.suppress(t);
        w.touch(c);
        return c;
    }

    auto apply_join_relabel(Work & w, int t, int rule) -> void
    {
        auto & n = w.nodes[t];
        if (n.kind != Kind::Join)
            not_applicable(rule, "node is not a join");
        int c = w.child(t);
        auto & r = w.nodes[c];
        if (r.kind != Kind::Relabel)
            not_applicable(rule, "child of the join is not a relabel");
        Label a = r.a, b = r.b;
        if (rule == 13) {
            if (b != n.a && b != n.b)
                not_applicable(13, "relabel target is not a joined label");
            Label j = b == n.a ? n.b : n.a;
            if (a == j)
                not_applicable(13, "relabel source equals the other joined label");
            w.swap_payload(t, c);
            int extra = w.make_unary(Kind::Join, a, j);
            w.nodes[extra].origin = w.nodes[c].origin;
            w.insert_above(w.child(c), extra);
        }
        else if (rule == 14) {
            if (a == n.a || a == n.b || b == n.a || b == n.b)
                not_applicable(14, "relabel touches a joined label");
            w.swap_payload(t, c);
        }
        else
            not_applicable(rule, "not a join rule");
    }

    auto rule_lhs(const Work & w, int t, int rule) -> vector<int>
    {
        vector<int> lhs{t};
        if (rule >= 1 && rule <= 11 && w.nodes[t].kind == Kind::Fuse) {
            if (rule <= 2) {
                if (w.is_unary(w.child(t)))
                    lhs.push_back(w.child(t));
                return lhs;
            }
            auto ch = fuse_chain(w, t);
            lhs.insert(lhs.end(), ch.nodes.begin(), ch.nodes.end());
            if (w.is_unary(ch.below))
                lhs.push_back(ch.below);
        }
        else if ((rule == 13 || rule == 14) && w.is_unary(t) && w.is_unary(w.child(t)))
            lhs.push_back(w.child(t));
        return lhs;
    }

    auto process_fuse(Work & w, int t, RewriteStats * stats) -> int
    {
        int budget = w.height(t) + w.k;
        int applications = 0;
        int result = -1;
        while (true) {
            if (w.useless(t)) {
                w.suppress(t);
                result = -1;
                break;
            }
            auto lhs = rule_lhs(w, t, 3);
            bool again = false;
            for (int x : lhs)
                if (x != t && w.useless(x)) {
                    w.suppress(x);
                    again = true;
                    break;
                }
            if (again)
                continue;

            int rule = pick_fuse_rule(w, t);
            if (rule == 0) {
                result = t;
                break;
            }
            t = apply_fuse_rule(w, t, rule);
            ++applications;
            if (rule == 9) {
                auto & u = w.nodes[w.child(t)];
                for (int side : vector<int>(u.kids)) {
                    // copies of the chain may be useless on one side
                    int x = side;
                    while (w.nodes[x].kind == Kind::Relabel && w.nodes[x].b == w.nodes[t].a) {
                        int below = w.child(x);
                        if (w.useless(x))
                            w.suppress(x);
                        x = below;
                    }
                }
            }
        }
        if (stats) {
            ++stats->fuses_processed;
            stats->rule_applications += applications;
            if (applications > budget)
                ++stats->bound_violations;
        }
        return result;
    }
}
