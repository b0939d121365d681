#include <fw/repsets.hh>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

using std::string;
using std::vector;

namespace fw
{
    auto AuxMultigraph::add(Label a, Label b, int times) -> void
    {
        if (a > b)
            std::swap(a, b);
        edges[{a, b}] += times;
    }

    auto AuxMultigraph::degree(Label i) const -> int
    {
        int d = 0;
        for (auto & [e, c] : edges)
            d += c * ((e.first == i) + (e.second == i));
        return d;
    }

    auto AuxMultigraph::edge_count() const -> int
    {
        int total = 0;
        for (auto & [e, c] : edges)
            total += c;
        return total;
    }

    auto AuxMultigraph::components() const -> vector<LabelSet>
    {
        vector<int> up(k + 1);
        std::iota(up.begin(), up.end(), 0);
        std::function<int(int)> find = [&](int x) { return up[x] == x ? x : up[x] = find(up[x]); };
        for (auto & [e, c] : edges)
            if (c > 0)
                up[find(e.first)] = find(e.second);
        std::map<int, LabelSet> parts;
        for (Label i = 1; i <= k; ++i)
            parts[find(i)] |= bit(i);
        vector<LabelSet> out;
        for (auto & [r, s] : parts)
            out.push_back(s);
        std::sort(out.begin(), out.end());
        return out;
    }

    auto AuxMultigraph::dump() const -> string
    {
        std::ostringstream os;
        for (auto & [e, c] : edges)
            for (int q = 0; q < c; ++q)
                os << e.first << "-" << e.second << " ";
        auto s = os.str();
        if (! s.empty())
            s.pop_back();
        return s;
    }

    namespace
    {
        auto degrees(const PathPacking & p) -> std::map<string, int>
        {
            std::map<string, int> d;
            for (auto & v : p.vertices)
                d[v] = 0;
            for (auto & [a, b] : p.edges) {
                ++d[a];
                ++d[b];
            }
            return d;
        }

        // Walks each path from one end; returns endpoint pairs or nothing on a cycle.
        auto path_ends(const PathPacking & p) -> std::optional<vector<std::pair<string, string>>>
        {
            auto d = degrees(p);
            std::map<string, vector<string>> adj;
            for (auto & [a, b] : p.edges) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            std::set<string> seen;
            vector<std::pair<string, string>> ends;
            for (auto & [v, deg] : d) {
                if (deg > 2)
                    return std::nullopt;
                if (deg == 2 || seen.count(v))
                    continue;
                string prev, cur = v;
                seen.insert(cur);
                while (true) {
                    string next;
                    for (auto & w : adj[cur])
                        if (w != prev) {
                            next = w;
                            break;
                        }
                    if (next.empty())
                        break;
                    prev = cur;
                    cur = next;
                    seen.insert(cur);
                }
                ends.push_back({v, cur});
            }
            // vertices never reached from an end lie on cycles
            if (seen.size() != p.vertices.size())
                return std::nullopt;
            return ends;
        }

        auto lowest_label(const LabeledGraph & g, const string & v) -> Label
        {
            auto s = g.vertices.at(v);
            if (s == 0)
                throw std::logic_error("vertex " + v + " has no label");
            return Label(std::countr_zero(s)) + 1;
        }

        struct ClassKey
        {
            vector<int> degree;
            vector<LabelSet> parts;
            auto operator<=>(const ClassKey &) const = default;
        };

        auto class_key(const LabeledGraph & g, const PathPacking & p) -> ClassKey
        {
            auto aux = aux_multigraph(g, p);
            ClassKey key;
            for (Label i = 1; i <= aux.k; ++i)
                key.degree.push_back(aux.degree(i));
            key.parts = aux.components();
            return key;
        }
    }

    auto is_path_packing(const PathPacking & p) -> bool
    {
        for (auto & [a, b] : p.edges)
            if (! p.vertices.count(a) || ! p.vertices.count(b))
                return false;
        return path_ends(p).has_value();
    }

    auto aux_multigraph(const LabeledGraph & g, const PathPacking & p) -> AuxMultigraph
    {
        for (auto & v : p.vertices)
            if (! g.has_vertex(v))
                throw std::logic_error("packing vertex " + v + " is not in the host");
        for (auto & [a, b] : p.edges)
            if (! g.has_edge(a, b))
                throw std::logic_error("packing edge " + a + " " + b + " is not in the host");
        auto ends = path_ends(p);
        if (! ends)
            throw std::logic_error("not a path packing");
        AuxMultigraph aux;
        aux.k = g.k;
        for (auto & [a, b] : *ends)
            aux.add(lowest_label(g, a), lowest_label(g, b));
        return aux;
    }

    auto packings_equivalent(const PathPacking & p1, const PathPacking & p2, const LabeledGraph & g) -> bool
    {
        return class_key(g, p1) == class_key(g, p2);
    }

    auto reduce_family(const vector<PathPacking> & family, const LabeledGraph & g) -> vector<PathPacking>
    {
        std::map<ClassKey, const PathPacking *> best;
        for (auto & p : family) {
            auto [it, fresh] = best.emplace(class_key(g, p), &p);
            if (! fresh && p.edges < it->second->edges)
                it->second = &p;
        }
        vector<PathPacking> out;
        for (auto & [key, p] : best)
            out.push_back(*p);
        return out;
    }

    auto reduce_bound(int n, int k) -> double
    {
        return std::pow(double(n), k) * std::pow(2.0, k * (std::log2(double(k)) + 1));
    }

    auto rb_trail_exists(const AuxMultigraph & red, const AuxMultigraph & blue) -> bool
    {
        struct Arc
        {
            Label a, b;
            int colour;
        };
        vector<Arc> arcs;
        for (auto [g, colour] : {std::pair{&red, 0}, std::pair{&blue, 1}})
            for (auto & [e, c] : g->edges)
                for (int q = 0; q < c; ++q)
                    arcs.push_back({e.first, e.second, colour});
        if (int(arcs.size()) > rb_edge_limit)
            throw DomainError("red-blue trail oracle refuses more than " + std::to_string(rb_edge_limit) + " edges");
        if (arcs.empty())
            return true;
        if (red.edge_count() != blue.edge_count())
            return false;

        int m = int(arcs.size());
        int first = 0; // some red edge, it has to be used anyway
        while (arcs[first].colour != 0)
            ++first;
        // memo of failed (position, used, colour wanted next)
        std::set<std::tuple<Label, unsigned, int>> failed;
        unsigned all = (1U << m) - 1;

        for (auto [start, other] : {std::pair{arcs[first].a, arcs[first].b}, std::pair{arcs[first].b, arcs[first].a}}) {
            std::function<bool(Label, unsigned, int)> go = [&](Label at, unsigned used, int want) -> bool {
                if (used == all)
                    return at == start && want == 0;
                auto key = std::make_tuple(at, used, want);
                if (failed.count(key))
                    return false;
                for (int q = 0; q < m; ++q) {
                    if ((used >> q) & 1 || arcs[q].colour != want)
                        continue;
                    Label next;
                    if (arcs[q].a == at)
                        next = arcs[q].b;
                    else if (arcs[q].b == at)
                        next = arcs[q].a;
                    else
                        continue;
                    if (go(next, used | (1U << q), 1 - want))
                        return true;
                }
                failed.insert(key);
                return false;
            };
            failed.clear();
            if (go(other, 1U << first, 1))
                return true;
        }
        return false;
    }

    auto glue_packings(const PathPacking & p1, const PathPacking & p2) -> std::optional<PathPacking>
    {
        PathPacking p = p1;
        p.vertices.insert(p2.vertices.begin(), p2.vertices.end());
        p.edges.insert(p2.edges.begin(), p2.edges.end());
        if (! path_ends(p))
            return std::nullopt;
        return p;
    }

    auto all_maximal_packings(const LabeledGraph & g) -> vector<PathPacking>
    {
        vector<Edge> edges(g.edges.begin(), g.edges.end());
        vector<PathPacking> out;
        PathPacking cur;
        for (auto & [v, s] : g.vertices)
            cur.vertices.insert(v);
        std::map<string, int> deg;
        std::map<string, string> comp; // union-find by title
        std::function<string(const string &)> find = [&](const string & x) -> string {
            auto it = comp.find(x);
            return it == comp.end() || it->second == x ? x : find(it->second);
        };
        std::function<void(std::size_t)> rec = [&](std::size_t q) {
            if (q == edges.size()) {
                out.push_back(cur);
                return;
            }
            rec(q + 1);
            auto [a, b] = edges[q];
            if (deg[a] >= 2 || deg[b] >= 2)
                return;
            string ra = find(a), rb = find(b);
            if (ra == rb)
                return;
            auto saved = comp;
            comp[ra] = rb;
            ++deg[a];
            ++deg[b];
            cur.edges.insert(edges[q]);
            rec(q + 1);
            cur.edges.erase(edges[q]);
            --deg[a];
            --deg[b];
            comp = saved;
        };
        rec(0);
        return out;
    }
}
