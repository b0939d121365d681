#include "rules.hh"

#include <algorithm>
#include <map>

using std::string;
using std::to_string;
using std::vector;

namespace fw
{
    auto glue_size_bound(int k, int n, int m) -> long long
    {
        return (long long)glue_size_constant * k * k * (m + n);
    }

    namespace
    {
        auto only_vertex_with(const LabeledGraph & g, Label l) -> string
        {
            string found;
            int count = 0;
            for (auto & [t, s] : g.vertices)
                if (has_label(s, l)) {
                    found = t;
                    ++count;
                }
            if (count != 1)
                throw std::logic_error("fuse over a union side with " + to_string(count) + " candidates");
            return found;
        }

        auto rename_leaves(Work & w, int sub, const string & from, const string & to) -> void
        {
            for (int x : w.subtree(sub))
                if (w.nodes[x].kind == Kind::Introduce && w.nodes[x].title == from) {
                    w.nodes[x].title = to;
                    w.touch(x);
                }
        }

        // A join in the subtree at `sub` whose child already holds v and w
        // under the two joined labels.
        auto find_creator(Work & w, int sub, const string & v, const string & u) -> int
        {
            for (int x : w.subtree(sub)) {
                auto & n = w.nodes[x];
                if (n.kind != Kind::Join)
                    continue;
                auto & g = w.graph(n.kids[0]);
                auto iv = g.vertices.find(v), iu = g.vertices.find(u);
                if (iv == g.vertices.end() || iu == g.vertices.end())
                    continue;
                if ((has_label(iv->second, n.a) && has_label(iu->second, n.b))
                        || (has_label(iv->second, n.b) && has_label(iu->second, n.a)))
                    return x;
            }
            throw std::logic_error("no join creates edge " + v + " " + u);
        }

        auto first_p1_violation(Work & w) -> bool
        {
            for (int t : w.postorder()) {
                auto & n = w.nodes[t];
                if (n.kind != Kind::Join)
                    continue;
                Label a = n.a, b = n.b;
                int c = n.kids[0];
                const auto & g = w.graph(c);
                for (auto & [x, y] : g.edges) {
                    auto sx = g.vertices.at(x), sy = g.vertices.at(y);
                    if ((has_label(sx, a) && has_label(sy, b)) || (has_label(sx, b) && has_label(sy, a))) {
                        string v = x, u = y;
                        w.suppress(find_creator(w, c, v, u));
                        return true;
                    }
                }
            }
            return false;
        }

        auto first_p2_violation(Work & w) -> bool
        {
            for (int t : w.postorder()) {
                if (w.nodes[t].kind != Kind::Glue)
                    continue;
                int l = w.nodes[t].kids[0], r = w.nodes[t].kids[1];
                const auto & g2 = w.graph(r);
                auto right_edges = g2.edges;
                for (auto & e : w.graph(l).edges)
                    if (right_edges.count(e)) {
                        auto [v, u] = e;
                        w.suppress(find_creator(w, l, v, u));
                        return true;
                    }
            }
            return false;
        }

        // Removes every leaf titled v below sub, folding relabels on the way.
        auto cut_vertex(Work & w, int sub, const string & v) -> void
        {
            vector<int> leaves;
            for (int x : w.subtree(sub))
                if (w.nodes[x].kind == Kind::Introduce && w.nodes[x].title == v)
                    leaves.push_back(x);
            for (int leaf : leaves) {
                while (true) {
                    int p = w.parent(leaf);
                    if (p < 0)
                        throw std::logic_error("cutting the whole expression");
                    if (w.is_unary(p)) {
                        if (w.nodes[p].kind == Kind::Relabel && ! w.useless(p))
                            apply_relabel_introduce(w, p);
                        else
                            w.suppress(p); // useless over a single vertex
                        continue;
                    }
                    int other = w.nodes[p].kids[0] == leaf ? w.nodes[p].kids[1] : w.nodes[p].kids[0];
                    w.replace(p, other);
                    w.nodes[p].kids.clear();
                    w.nodes[p].alive = false;
                    w.nodes[leaf].alive = false;
                    break;
                }
            }
        }

        auto first_p3_violation(Work & w) -> bool
        {
            for (int t : w.postorder()) {
                if (w.nodes[t].kind != Kind::Glue)
                    continue;
                int kids[2] = {w.nodes[t].kids[0], w.nodes[t].kids[1]};
                LabeledGraph g[2] = {w.graph(kids[0]), w.graph(kids[1])};
                for (auto & [v, s] : g[0].vertices) {
                    if (! g[1].has_vertex(v))
                        continue;
                    for (int q = 0; q < 2; ++q) {
                        bool incident = false;
                        for (auto & [x, y] : g[q].edges)
                            if (x == v || y == v) {
                                incident = true;
                                break;
                            }
                        if (! incident) {
                            cut_vertex(w, kids[q], v);
                            w.suppress_useless();
                            return true;
                        }
                    }
                }
            }
            return false;
        }

        auto make_reduced(Work & w) -> void
        {
            w.suppress_useless();
            while (first_p1_violation(w))
                ;
            while (first_p2_violation(w))
                ;
            while (first_p3_violation(w))
                ;
        }

        // Maximal runs of unary nodes, listed bottom-up.
        auto unary_runs(const Work & w) -> vector<vector<int>>
        {
            vector<vector<int>> runs;
            for (int t : w.postorder()) {
                if (w.is_unary(t))
                    continue;
                vector<int> run;
                for (int x = w.parent(t); x >= 0 && w.is_unary(x); x = w.parent(x))
                    run.push_back(x);
                if (! run.empty())
                    runs.push_back(std::move(run));
            }
            return runs;
        }

        auto push_joins_below_relabels(Work & w) -> void
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int t : w.postorder()) {
                    auto & n = w.nodes[t];
                    if (n.kind != Kind::Join || w.nodes[n.kids[0]].kind != Kind::Relabel)
                        continue;
                    int c = n.kids[0];
                    auto & r = w.nodes[c];
                    if (w.useless(t))
                        w.suppress(t);
                    else if (w.useless(c))
                        w.suppress(c);
                    else if (r.b == n.a || r.b == n.b)
                        apply_join_relabel(w, t, 13);
                    else
                        apply_join_relabel(w, t, 14);
                    w.suppress_useless();
                    changed = true;
                    break;
                }
            }
        }

        // Shortest relabel sequence moving each nonempty class to its target.
        // Returns false when no sequence exists without a spare label.
        auto plan_relabels(std::map<Label, Label> target, int k, vector<std::pair<Label, Label>> & out) -> bool
        {
            out.clear();
            auto done = [&] {
                for (auto & [c, d] : target)
                    if (c != d)
                        return false;
                return true;
            };
            while (! done()) {
                bool moved = false;
                // straight to the final place
                for (auto & [c, d] : target) {
                    if (c == d)
                        continue;
                    auto it = target.find(d);
                    if (it == target.end() || it->second == d) {
                        out.push_back({c, d});
                        if (it == target.end())
                            target[d] = d;
                        target.erase(c);
                        moved = true;
                        break;
                    }
                }
                if (moved)
                    continue;
                // merge two classes heading to the same place
                for (auto & [c, d] : target) {
                    for (auto & [c2, d2] : target)
                        if (c2 != c && d2 == d && c != d) {
                            out.push_back({c, c2});
                            target.erase(c);
                            moved = true;
                            break;
                        }
                    if (moved)
                        break;
                }
                if (moved)
                    continue;
                // break a cycle through a free label
                Label spare = 0;
                for (Label l = 1; l <= k && ! spare; ++l)
                    if (! target.count(l))
                        spare = l;
                if (! spare)
                    return false;
                for (auto & [c, d] : target)
                    if (c != d) {
                        out.push_back({c, spare});
                        Label goal = d;
                        target.erase(c);
                        target[spare] = goal;
                        break;
                    }
            }
            return true;
        }

        auto compress_relabel_runs(Work & w) -> void
        {
            for (auto & run : unary_runs(w)) {
                std::size_t start = 0;
                while (start < run.size()) {
                    if (w.nodes[run[start]].kind != Kind::Relabel) {
                        ++start;
                        continue;
                    }
                    std::size_t end = start;
                    while (end < run.size() && w.nodes[run[end]].kind == Kind::Relabel)
                        ++end;
                    if (end - start >= 2) {
                        int bottom = w.child(run[start]);
                        const auto & g = w.graph(bottom);
                        std::map<Label, Label> target;
                        for (Label l = 1; l <= w.k; ++l)
                            if (class_size(g, l) > 0) {
                                Label x = l;
                                for (std::size_t j = start; j < end; ++j)
                                    if (w.nodes[run[j]].a == x)
                                        x = w.nodes[run[j]].b;
                                target[l] = x;
                            }
                        vector<std::pair<Label, Label>> plan;
                        if (plan_relabels(target, w.k, plan) && plan.size() < end - start) {
                            int top = run[end - 1];
                            int anchor = bottom;
                            int above = w.parent(top);
                            // drop the old run, then rebuild it above the bottom node
                            for (std::size_t j = start; j < end; ++j)
                                w.suppress(run[j]);
                            for (auto [a, b] : plan) {
                                int x = w.make_unary(Kind::Relabel, a, b);
                                w.insert_above(anchor, x);
                                anchor = x;
                            }
                            (void)above;
                        }
                    }
                    start = end;
                }
            }
        }

        auto fold_leaf_relabels(Work & w) -> void
        {
            for (int t : w.postorder()) {
                if (w.nodes[t].kind != Kind::Introduce || ! w.nodes[t].alive)
                    continue;
                while (w.parent(t) >= 0 && w.is_unary(w.parent(t))) {
                    int p = w.parent(t);
                    if (w.useless(p))
                        w.suppress(p);
                    else if (w.nodes[p].kind == Kind::Relabel)
                        apply_relabel_introduce(w, p);
                    else
                        break;
                }
            }
        }
    }

    auto fuse_to_glue(const Expression & e, RewriteStats * stats) -> Expression
    {
        auto local = localize_fuses(e, stats);
        Work w(local);

        vector<int> h(w.nodes.size(), 0);
        vector<int> unions;
        for (int x : w.postorder()) {
            int best = 0;
            for (int c : w.nodes[x].kids)
                best = std::max(best, h[c]);
            h[x] = best + (w.is_binary(x) ? 1 : 0);
            if (w.nodes[x].kind == Kind::Union)
                unions.push_back(x);
        }
        std::stable_sort(unions.begin(), unions.end(), [&](int a, int b) { return h[a] < h[b]; });

        for (int t : unions) {
            vector<int> fuses;
            for (int x = w.parent(t); x >= 0 && w.nodes[x].kind == Kind::Fuse; x = w.parent(x))
                fuses.push_back(x);
            int s1 = w.nodes[t].kids[0], s2 = w.nodes[t].kids[1];
            for (int f : fuses) {
                Label l = w.nodes[f].a;
                string v1 = only_vertex_with(w.graph(s1), l);
                string v2 = only_vertex_with(w.graph(s2), l);
                // the fused vertex keeps the smaller title
                string m = std::min(v1, v2);
                rename_leaves(w, s1, v1, m);
                rename_leaves(w, s2, v2, m);
            }
            w.nodes[t].kind = Kind::Glue;
            w.touch(t);
            for (int f : fuses)
                w.suppress(f);
        }
        w.dialect = Dialect::Glue;
        w.suppress_useless();
        return w.to_expression();
    }

    auto reduce_glue(const Expression & e) -> Expression
    {
        if (e.dialect != Dialect::Glue)
            throw DomainError("reduce_glue expects a glue expression");
        Work w(e);
        make_reduced(w);
        push_joins_below_relabels(w);
        compress_relabel_runs(w);
        fold_leaf_relabels(w);
        w.suppress_useless();
        return w.to_expression();
    }

    auto fuse_to_reduced_glue(const Expression & e, RewriteStats * stats) -> Expression
    {
        return reduce_glue(fuse_to_glue(e, stats));
    }

    auto check_reduced(const Expression & e) -> string
    {
        Work w(e);
        for (int t : w.postorder()) {
            auto & n = w.nodes[t];
            if (w.is_unary(t) && w.useless(t))
                return "node " + to_string(t) + " is useless";
            if (n.kind == Kind::Join) {
                const auto & g = w.graph(n.kids[0]);
                for (auto & [x, y] : g.edges) {
                    auto sx = g.vertices.at(x), sy = g.vertices.at(y);
                    if ((has_label(sx, n.a) && has_label(sy, n.b)) || (has_label(sx, n.b) && has_label(sy, n.a)))
                        return "join " + to_string(t) + " recreates edge " + x + " " + y;
                }
            }
            if (n.kind == Kind::Glue) {
                LabeledGraph g1 = w.graph(n.kids[0]);
                const auto & g2 = w.graph(n.kids[1]);
                for (auto & edge : g1.edges)
                    if (g2.edges.count(edge))
                        return "glue " + to_string(t) + " has operands sharing edge " + edge.first + " " + edge.second;
                for (auto & [v, s] : g1.vertices) {
                    if (! g2.has_vertex(v))
                        continue;
                    for (const LabeledGraph * g : std::initializer_list<const LabeledGraph *>{&g1, &g2}) {
                        bool incident = false;
                        for (auto & [x, y] : g->edges)
                            incident = incident || x == v || y == v;
                        if (! incident)
                            return "glue vertex " + v + " at node " + to_string(t) + " is isolated on one side";
                    }
                }
            }
        }
        return "";
    }

    auto pin_edge_expression(const Expression & e, const string & u, const string & v) -> Expression
    {
        if (e.dialect != Dialect::Glue)
            throw DomainError("edge pinning expects a glue expression");
        if (e.k + 2 > max_labels)
            throw DomainError("too many labels to pin an edge");
        Work w(e);
        auto whole = evaluate(e);
        if (! whole.has_edge(u, v))
            throw DomainError("edge " + u + " " + v + " is not in the graph");
        Label iu = e.k + 1, iv = e.k + 2;

        // labels of u and v at each join, taken before anything changes
        struct Extra
        {
            int at;
            Label a, b;
        };
        vector<Extra> extra;
        for (int t : w.postorder()) {
            auto & n = w.nodes[t];
            if (n.kind != Kind::Join)
                continue;
            const auto & g = w.graph(t);
            for (auto [title, fresh] : {std::pair{u, iu}, std::pair{v, iv}}) {
                auto it = g.vertices.find(title);
                if (it == g.vertices.end())
                    continue;
                if (has_label(it->second, n.a))
                    extra.push_back({t, fresh, n.b});
                else if (has_label(it->second, n.b))
                    extra.push_back({t, fresh, n.a});
            }
        }

        w.k = e.k + 2;
        for (int t : w.postorder())
            if (w.nodes[t].kind == Kind::Introduce) {
                if (w.nodes[t].title == u)
                    w.nodes[t].labels = bit(iu);
                else if (w.nodes[t].title == v)
                    w.nodes[t].labels = bit(iv);
                w.touch(t);
            }
        for (auto & x : extra) {
            int j = w.make_unary(Kind::Join, x.a, x.b);
            w.insert_above(x.at, j);
        }
        int top = w.make_unary(Kind::Join, iu, iv);
        w.insert_above(w.root, top);

        w.suppress_useless();
        while (first_p3_violation(w))
            ;
        return w.to_expression();
    }
}
