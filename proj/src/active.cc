#include "mcw.hh"

#include <fw/rewrite.hh>

#include <algorithm>

namespace fw
{
    auto require_normalized(const Expression & e, const std::string & who) -> void
    {
        if (e.dialect != Dialect::Multi)
            throw DomainError(who + " needs a normalized multi expression, got " + dialect_name(e.dialect));
        auto report = validate(e);
        if (! report.ok())
            throw DomainError("invalid expression: " + report.violations[0].message);
        auto why = check_normalized_multi(e);
        if (! why.empty())
            throw DomainError(who + " needs a normalized multi expression: " + why);
    }

    auto relabel_image(const ExprNode & n, Label l) -> LabelSet
    {
        if (l != n.a)
            return bit(l);
        switch (n.kind) {
            case Kind::RelabelSet: return n.labels;
            case Kind::Relabel: return bit(n.b);
            default: return bit(l);
        }
    }

    auto present_labels(const LabeledGraph & g) -> LabelSet
    {
        LabelSet s = 0;
        for (auto & [t, l] : g.vertices)
            s |= l;
        return s;
    }

    auto as_normalized_multi(const Expression & e) -> Expression
    {
        switch (e.dialect) {
            case Dialect::Multi: return normalize_multi(e);
            case Dialect::Clique:
            case Dialect::Fuse: {
                auto f = e;
                f.dialect = Dialect::Fuse;
                return normalize_multi(fuse_to_multi(f));
            }
            default: throw DomainError("no multi form for " + dialect_name(e.dialect) + " expressions");
        }
    }

    auto active_labels(const Expression & e) -> std::vector<LabelSet>
    {
        auto graphs = evaluate_all(e);
        // hot[t]: labels at t whose image reaches a join side facing a nonempty class
        std::vector<LabelSet> hot(e.nodes.size(), 0), out(e.nodes.size(), 0);
        auto order = postorder(e);
        std::reverse(order.begin(), order.end());
        for (int id : order) {
            auto & n = e.nodes[id];
            out[id] = hot[id] & present_labels(graphs[id]);
            for (int c : n.kids) {
                switch (n.kind) {
                    case Kind::Join: {
                        LabelSet below = present_labels(graphs[c]);
                        hot[c] = hot[id];
                        if (has_label(below, n.b))
                            hot[c] |= bit(n.a);
                        if (has_label(below, n.a))
                            hot[c] |= bit(n.b);
                        break;
                    }
                    case Kind::Relabel:
                    case Kind::RelabelSet:
                        for (Label l = 1; l <= e.k; ++l)
                            if (relabel_image(n, l) & hot[id])
                                hot[c] |= bit(l);
                        break;
                    default: hot[c] = hot[id];
                }
            }
        }
        return out;
    }
}
