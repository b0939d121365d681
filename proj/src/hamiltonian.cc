#include "dp.hh"

#include <fw/repsets.hh>
#include <fw/rewrite.hh>
#include <fw/solvers_fw.hh>

#include <algorithm>
#include <functional>

using std::string;
using std::vector;

namespace fw
{
    namespace
    {
        using Family = vector<PathPacking>;

        // Adds any subset of `fresh` edges that keeps p a path packing.
        auto augmentations(const PathPacking & p, const vector<Edge> & fresh, Family & out) -> void
        {
            std::map<string, int> deg;
            std::map<string, string> up;
            for (auto & v : p.vertices)
                up[v] = v;
            std::function<string(const string &)> find = [&](const string & x) -> string {
                return up[x] == x ? x : up[x] = find(up[x]);
            };
            for (auto & [a, b] : p.edges) {
                ++deg[a];
                ++deg[b];
                up[find(a)] = find(b);
            }
            PathPacking cur = p;
            std::function<void(std::size_t)> rec = [&](std::size_t q) {
                if (q == fresh.size()) {
                    out.push_back(cur);
                    return;
                }
                rec(q + 1);
                auto & [a, b] = fresh[q];
                if (deg[a] >= 2 || deg[b] >= 2)
                    return;
                string ra = find(a), rb = find(b);
                if (ra == rb)
                    return;
                auto saved = up;
                up[ra] = rb;
                ++deg[a];
                ++deg[b];
                cur.edges.insert(fresh[q]);
                rec(q + 1);
                cur.edges.erase(fresh[q]);
                --deg[a];
                --deg[b];
                up = saved;
            };
            rec(0);
        }

        // Runs the packing DP below the pinned root join and reports whether
        // its child has a single path between the two pinned vertices.
        auto pinned_run(const Expression & e, SolveStats * stats, double bound) -> bool
        {
            auto graphs = evaluate_all(e);
            vector<Family> family(e.nodes.size());
            int top = e.nodes[e.root].kids.at(0);

            for (int id : postorder(e)) {
                if (id == e.root)
                    break;
                auto & n = e.nodes[id];
                auto & g = graphs[id];
                Family raw;
                switch (n.kind) {
                    case Kind::Introduce: {
                        PathPacking p;
                        p.vertices.insert(n.title);
                        raw.push_back(p);
                        break;
                    }
                    case Kind::Relabel:
                        raw = std::move(family[n.kids[0]]);
                        break;
                    case Kind::Join: {
                        auto & child = graphs[n.kids[0]];
                        vector<Edge> fresh;
                        for (auto & edge : g.edges)
                            if (! child.edges.count(edge))
                                fresh.push_back(edge);
                        for (auto & p : family[n.kids[0]])
                            augmentations(p, fresh, raw);
                        break;
                    }
                    case Kind::Glue:
                        for (auto & p1 : family[n.kids[0]])
                            for (auto & p2 : family[n.kids[1]])
                                if (auto p = glue_packings(p1, p2))
                                    raw.push_back(std::move(*p));
                        break;
                    default:
                        throw DomainError("hamiltonian cycle: unexpected " + kind_name(n.kind) + " node");
                }
                family[id] = reduce_family(raw, g);
                for (int c : n.kids)
                    Family().swap(family[c]);
                if (stats) {
                    stats->max_family = std::max<long long>(stats->max_family, family[id].size());
                    if (double(family[id].size()) > bound)
                        ++stats->family_bound_violations;
                }
            }

            auto & g = graphs[top];
            Label lu = e.k - 1, lv = e.k;
            for (auto & p : family[top]) {
                auto aux = aux_multigraph(g, p);
                if (aux.edge_count() == 1 && aux.edges.count({lu, lv}))
                    return true;
            }
            return false;
        }
    }

    auto solve_hamiltonian_cycle(const Expression & e, SolveStats * stats) -> bool
    {
        auto rg = as_reduced_glue(e);
        auto g = evaluate(rg);
        if (g.size() < 3) {
            if (stats)
                stats->note = "fewer than three vertices";
            return false;
        }
        // Every Hamiltonian cycle uses an edge at a vertex of least degree.
        string pick;
        std::size_t best = 0;
        for (auto & [v, s] : g.vertices) {
            auto d = g.neighbours(v).size();
            if (pick.empty() || d < best) {
                pick = v;
                best = d;
            }
        }
        if (best < 2) {
            if (stats)
                stats->note = "vertex " + pick + " has degree below two";
            return false;
        }
        double bound = reduce_bound(g.size(), rg.k + 2);
        for (auto & w : g.neighbours(pick)) {
            auto pinned = pin_edge_expression(rg, pick, w);
            if (stats)
                ++stats->runs;
            if (pinned_run(pinned, stats, bound))
                return true;
        }
        return false;
    }
}
