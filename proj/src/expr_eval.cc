#include <fw/expr.hh>

using std::string;
using std::vector;

namespace fw
{
    auto apply_introduce(const ExprNode & n, int k) -> LabeledGraph
    {
        LabeledGraph g;
        g.k = k;
        g.add_vertex(n.title, n.labels);
        return g;
    }

    namespace
    {
        auto fuse(LabeledGraph g, Label i) -> LabeledGraph
        {
            vector<string> members;
            LabelSet labels = 0;
            for (auto & [t, s] : g.vertices)
                if (has_label(s, i)) {
                    members.push_back(t);
                    labels |= s;
                }
            if (members.size() < 2)
                return g;

            // members is sorted, so the first title is the smallest one
            const string & keep = members.front();
            std::set<string> gone(members.begin() + 1, members.end());
            std::set<Edge> edges;
            for (auto [a, b] : g.edges) {
                if (gone.count(a))
                    a = keep;
                if (gone.count(b))
                    b = keep;
                if (a != b)
                    edges.insert(make_edge(a, b));
            }
            g.edges = std::move(edges);
            for (auto & t : gone)
                g.vertices.erase(t);
            g.vertices[keep] = labels;
            return g;
        }
    }

    auto apply_unary(const ExprNode & n, LabeledGraph g) -> LabeledGraph
    {
        switch (n.kind) {
            case Kind::Join: {
                vector<string> left, right;
                for (auto & [t, s] : g.vertices) {
                    if (has_label(s, n.a))
                        left.push_back(t);
                    if (has_label(s, n.b))
                        right.push_back(t);
                }
                for (auto & u : left)
                    for (auto & v : right)
                        g.add_edge(u, v);
                return g;
            }
            case Kind::Relabel:
                for (auto & [t, s] : g.vertices)
                    if (has_label(s, n.a))
                        s = (s & ~bit(n.a)) | bit(n.b);
                return g;
            case Kind::RelabelSet:
                for (auto & [t, s] : g.vertices)
                    if (has_label(s, n.a))
                        s = (s & ~bit(n.a)) | n.labels;
                return g;
            case Kind::Fuse:
                return fuse(std::move(g), n.a);
            default:
                throw DomainError("apply_unary on " + kind_name(n.kind) + " node");
        }
    }

    auto glue_problem(const LabeledGraph & g1, const LabeledGraph & g2) -> string
    {
        for (auto & [t, s] : g1.vertices) {
            auto it = g2.vertices.find(t);
            if (it == g2.vertices.end())
                continue;
            if (it->second != s)
                return "shared vertex " + t + " has different labels on the two sides";
            for (auto l : labels_of(s)) {
                if (class_size(g1, l) != 1)
                    return "shared vertex " + t + " is not alone in class " + std::to_string(l) + " on the left";
                if (class_size(g2, l) != 1)
                    return "shared vertex " + t + " is not alone in class " + std::to_string(l) + " on the right";
            }
        }
        return "";
    }

    auto apply_binary(const ExprNode & n, const LabeledGraph & g1, const LabeledGraph & g2) -> LabeledGraph
    {
        LabeledGraph g = g1;
        if (n.kind == Kind::Union) {
            for (auto & [t, s] : g2.vertices) {
                if (g.has_vertex(t))
                    throw DomainError("union operands share title " + t);
                g.add_vertex(t, s);
            }
        }
        else if (n.kind == Kind::Glue) {
            auto why = glue_problem(g1, g2);
            if (! why.empty())
                throw DomainError("not glueable: " + why);
            for (auto & [t, s] : g2.vertices)
                g.add_vertex(t, s);
        }
        else
            throw DomainError("apply_binary on " + kind_name(n.kind) + " node");
        g.edges.insert(g2.edges.begin(), g2.edges.end());
        return g;
    }

    auto is_useless(const ExprNode & n, const LabeledGraph & child) -> bool
    {
        switch (n.kind) {
            case Kind::Join:
                for (auto & [u, su] : child.vertices)
                    if (has_label(su, n.a))
                        for (auto & [v, sv] : child.vertices)
                            if (u != v && has_label(sv, n.b) && ! child.has_edge(u, v))
                                return false;
                return true;
            case Kind::Fuse:
                return class_size(child, n.a) < 2;
            case Kind::Relabel:
                return n.a == n.b || class_size(child, n.a) == 0;
            case Kind::RelabelSet:
                return n.labels == bit(n.a) || class_size(child, n.a) == 0;
            default:
                return false;
        }
    }

    auto evaluate_all(const Expression & e) -> vector<LabeledGraph>
    {
        vector<LabeledGraph> g(e.nodes.size());
        for (int id : postorder(e)) {
            auto & n = e.nodes[id];
            switch (arity(n.kind)) {
                case 0: g[id] = apply_introduce(n, e.k); break;
                case 1: g[id] = apply_unary(n, g[n.kids[0]]); break;
                default: g[id] = apply_binary(n, g[n.kids[0]], g[n.kids[1]]); break;
            }
        }
        return g;
    }

    auto evaluate(const Expression & e) -> LabeledGraph
    {
        auto report = validate(e);
        if (! report.ok()) {
            auto & v = report.violations.front();
            throw DomainError("invalid expression at node " + std::to_string(v.node) + " (" + v.rule + "): " + v.message);
        }

        // single pass that releases child graphs as soon as they are consumed
        vector<LabeledGraph> g(e.nodes.size());
        for (int id : postorder(e)) {
            auto & n = e.nodes[id];
            switch (arity(n.kind)) {
                case 0: g[id] = apply_introduce(n, e.k); break;
                case 1: g[id] = apply_unary(n, std::move(g[n.kids[0]])); break;
                default:
                    g[id] = apply_binary(n, g[n.kids[0]], g[n.kids[1]]);
                    g[n.kids[0]] = {};
                    g[n.kids[1]] = {};
                    break;
            }
        }
        return g[e.root];
    }
}
