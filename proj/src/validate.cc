#include <fw/expr.hh>

#include <bit>

using std::string;
using std::to_string;
using std::vector;

namespace fw
{
    auto validate(const Expression & e) -> ValidationReport
    {
        ValidationReport report;
        auto add = [&](int id, const string & rule, const string & msg) {
            report.violations.push_back({id, rule, msg});
        };

        if (e.root < 0 || e.root >= e.size()) {
            add(-1, "root", "expression has no root");
            return report;
        }
        if (e.k < 1 || e.k > max_labels)
            add(-1, "label-range", "label count " + to_string(e.k) + " outside 1.." + to_string(max_labels));

        LabelSet universe = e.k >= max_labels ? ~LabelSet{0} : (LabelSet{1} << e.k) - 1;
        auto in_range = [&](Label l) { return l >= 1 && l <= e.k; };

        auto order = postorder(e);
        for (int id : order) {
            auto & n = e.nodes[id];
            if (! allowed(e.dialect, n.kind))
                add(id, "dialect-kind", kind_name(n.kind) + " not allowed in " + dialect_name(e.dialect) + " dialect");
            if (int(n.kids.size()) != arity(n.kind))
                add(id, "arity", kind_name(n.kind) + " with " + to_string(n.kids.size()) + " children");
            switch (n.kind) {
                case Kind::Introduce:
                    if (n.labels == 0)
                        add(id, "introduce-labels", "introduce with no label");
                    else if (e.dialect != Dialect::Multi && std::popcount(n.labels) != 1)
                        add(id, "introduce-labels", "introduce with several labels outside the multi dialect");
                    if (n.labels & ~universe)
                        add(id, "label-range", "introduce label above k");
                    if (n.title.empty())
                        add(id, "title", "empty title");
                    break;
                case Kind::Join:
                    if (! in_range(n.a) || ! in_range(n.b))
                        add(id, "label-range", "join label outside 1..k");
                    if (n.a == n.b)
                        add(id, "join-distinct", "join of a label with itself");
                    break;
                case Kind::Relabel:
                    if (! in_range(n.a) || ! in_range(n.b))
                        add(id, "label-range", "relabel label outside 1..k");
                    break;
                case Kind::RelabelSet:
                    if (! in_range(n.a) || (n.labels & ~universe))
                        add(id, "label-range", "relabel label outside 1..k");
                    break;
                case Kind::Fuse:
                    if (! in_range(n.a))
                        add(id, "label-range", "fuse label outside 1..k");
                    break;
                default:
                    break;
            }
        }
        if (! report.ok())
            return report;

        if (e.dialect != Dialect::Glue) {
            std::map<string, int> seen;
            for (int id : order) {
                auto & n = e.nodes[id];
                if (n.kind != Kind::Introduce)
                    continue;
                auto [it, fresh] = seen.emplace(n.title, id);
                if (! fresh)
                    add(id, "duplicate-title", "title " + n.title + " already introduced at node " + to_string(it->second));
            }
            if (! report.ok())
                return report;
        }

        // semantic checks need the graph below every node
        vector<LabeledGraph> g(e.nodes.size());
        for (int id : order) {
            auto & n = e.nodes[id];
            switch (n.kind) {
                case Kind::Introduce:
                    g[id] = apply_introduce(n, e.k);
                    break;
                case Kind::Union:
                    g[id] = apply_binary(n, g[n.kids[0]], g[n.kids[1]]);
                    break;
                case Kind::Glue: {
                    auto why = glue_problem(g[n.kids[0]], g[n.kids[1]]);
                    if (! why.empty()) {
                        add(id, "glueable", why);
                        return report;
                    }
                    g[id] = apply_binary(n, g[n.kids[0]], g[n.kids[1]]);
                    break;
                }
                case Kind::Join:
                    if (e.dialect == Dialect::Multi)
                        for (auto & [t, s] : g[n.kids[0]].vertices)
                            if (has_label(s, n.a) && has_label(s, n.b)) {
                                add(id, "join-admissible", "vertex " + t + " holds both labels " + to_string(n.a) + " and " + to_string(n.b));
                                break;
                            }
                    g[id] = apply_unary(n, g[n.kids[0]]);
                    break;
                case Kind::Fuse:
                    if (class_size(g[n.kids[0]], n.a) == 0)
                        add(id, "fuse-empty", "fuse on empty class " + to_string(n.a));
                    g[id] = apply_unary(n, g[n.kids[0]]);
                    break;
                default:
                    g[id] = apply_unary(n, g[n.kids[0]]);
                    break;
            }
            for (int c : n.kids)
                g[c] = {};
        }
        return report;
    }
}
