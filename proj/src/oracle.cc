#include <fw/oracle.hh>

#include <algorithm>
#include <bit>
#include <functional>

using std::string;
using std::vector;

namespace fw
{
    auto problem_name(Problem p) -> string
    {
        switch (p) {
            case Problem::MaxCut: return "maxcut";
            case Problem::Eds: return "eds";
            case Problem::Hc: return "hc";
            case Problem::Ds: return "ds";
            case Problem::QColor: return "qcolor";
            case Problem::Chromatic: return "chromatic";
            case Problem::Cvc: return "cvc";
            case Problem::Cds: return "cds";
        }
        return "?";
    }

    auto parse_problem(const string & s) -> Problem
    {
        for (auto p : {Problem::MaxCut, Problem::Eds, Problem::Hc, Problem::Ds, Problem::QColor, Problem::Chromatic,
                 Problem::Cvc, Problem::Cds})
            if (problem_name(p) == s)
                return p;
        throw DomainError("unknown problem '" + s + "'");
    }

    namespace
    {
        auto guard(const LabeledGraph & g) -> IndexedGraph
        {
            if (g.size() > oracle_vertex_limit)
                throw DomainError("oracle refuses graphs with more than " + std::to_string(oracle_vertex_limit)
                    + " vertices (got " + std::to_string(g.size()) + ")");
            return index_graph(g);
        }

        using Mask = std::uint64_t;

        auto connected_within(const IndexedGraph & ig, Mask set) -> bool
        {
            if (set == 0)
                return true;
            Mask seen = set & -set, frontier = seen;
            while (frontier) {
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1)
                    next |= ig.adj_mask[std::countr_zero(f)];
                next &= set & ~seen;
                seen |= next;
                frontier = next;
            }
            return seen == set;
        }

        auto dominates(const IndexedGraph & ig, Mask set) -> bool
        {
            int n = int(ig.titles.size());
            Mask covered = set;
            for (Mask s = set; s; s &= s - 1)
                covered |= ig.adj_mask[std::countr_zero(s)];
            return covered == (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
        }

        auto covers(const IndexedGraph & ig, Mask set) -> bool
        {
            for (auto [u, v] : ig.edges)
                if (! ((set >> u) & 1) && ! ((set >> v) & 1))
                    return false;
            return true;
        }

        auto min_subset(const IndexedGraph & ig, const std::function<bool(Mask)> & ok) -> int
        {
            int n = int(ig.titles.size());
            int best = -1;
            for (Mask s = 0; s < (Mask{1} << n); ++s) {
                int c = std::popcount(s);
                if ((best < 0 || c < best) && ok(s))
                    best = c;
            }
            return best;
        }
    }

    auto brute_max_cut(const LabeledGraph & g) -> int
    {
        auto ig = guard(g);
        int n = int(ig.titles.size()), best = 0;
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            int cut = 0;
            for (auto [u, v] : ig.edges)
                cut += ((s >> u) & 1) != ((s >> v) & 1);
            best = std::max(best, cut);
        }
        return best;
    }

    auto brute_eds(const LabeledGraph & g) -> int
    {
        auto ig = guard(g);
        int m = int(ig.edges.size());
        // increasing size, so the first hit is optimal
        for (int size = 0; size <= m; ++size) {
            vector<int> pick(size);
            std::function<bool(int, int)> rec = [&](int from, int depth) -> bool {
                if (depth == size) {
                    Mask touched = 0;
                    for (int e : pick)
                        touched |= (Mask{1} << ig.edges[e].first) | (Mask{1} << ig.edges[e].second);
                    for (auto [u, v] : ig.edges)
                        if (! ((touched >> u) & 1) && ! ((touched >> v) & 1))
                            return false;
                    return true;
                }
                for (int e = from; e < m; ++e) {
                    pick[depth] = e;
                    if (rec(e + 1, depth + 1))
                        return true;
                }
                return false;
            };
            if (rec(0, 0))
                return size;
        }
        return m;
    }

    auto brute_hamiltonian(const LabeledGraph & g) -> bool
    {
        auto ig = guard(g);
        int n = int(ig.titles.size());
        if (n < 3)
            return false;
        // reach[mask] = set of end vertices of paths from vertex 0 covering mask
        vector<Mask> reach(Mask{1} << n, 0);
        reach[1] = 1;
        for (Mask s = 1; s < (Mask{1} << n); s += 2)
            for (Mask ends = reach[s]; ends; ends &= ends - 1) {
                int v = std::countr_zero(ends);
                for (Mask nb = ig.adj_mask[v] & ~s; nb; nb &= nb - 1) {
                    int u = std::countr_zero(nb);
                    reach[s | (Mask{1} << u)] |= Mask{1} << u;
                }
            }
        Mask full = (Mask{1} << n) - 1;
        return (reach[full] & ig.adj_mask[0]) != 0;
    }

    auto brute_ds(const LabeledGraph & g) -> int
    {
        auto ig = guard(g);
        return min_subset(ig, [&](Mask s) { return dominates(ig, s); });
    }

    auto brute_q_colorings(const LabeledGraph & g, int q) -> long long
    {
        auto ig = guard(g);
        int n = int(ig.titles.size());
        vector<int> colour(n, -1);
        std::function<long long(int)> rec = [&](int v) -> long long {
            if (v == n)
                return 1;
            long long total = 0;
            for (int c = 0; c < q; ++c) {
                bool ok = true;
                for (int u : ig.adj[v])
                    ok = ok && colour[u] != c;
                if (! ok)
                    continue;
                colour[v] = c;
                total += rec(v + 1);
                colour[v] = -1;
            }
            return total;
        };
        return rec(0);
    }

    auto brute_chromatic(const LabeledGraph & g) -> int
    {
        guard(g);
        if (g.size() == 0)
            return 0;
        for (int q = 1;; ++q)
            if (brute_q_colorings(g, q) > 0)
                return q;
    }

    auto brute_cvc(const LabeledGraph & g) -> int
    {
        auto ig = guard(g);
        if (ig.edges.empty())
            return 0;
        return min_subset(ig, [&](Mask s) { return covers(ig, s) && connected_within(ig, s); });
    }

    auto brute_cds(const LabeledGraph & g) -> int
    {
        auto ig = guard(g);
        if (! is_connected(g))
            throw DomainError("connected dominating set needs a connected graph");
        return min_subset(ig, [&](Mask s) { return s != 0 && dominates(ig, s) && connected_within(ig, s); });
    }

    auto brute_force(Problem p, const LabeledGraph & g, const OracleParams & params) -> long long
    {
        switch (p) {
            case Problem::MaxCut: return brute_max_cut(g);
            case Problem::Eds: return brute_eds(g);
            case Problem::Hc: return brute_hamiltonian(g) ? 1 : 0;
            case Problem::Ds: return brute_ds(g);
            case Problem::QColor:
                if (params.q < 1)
                    throw DomainError("q-coloring needs q >= 1");
                return brute_q_colorings(g, params.q);
            case Problem::Chromatic: return brute_chromatic(g);
            case Problem::Cvc: return brute_cvc(g);
            case Problem::Cds: return brute_cds(g);
        }
        return 0;
    }

    auto sample_weights(Rng & rng, const LabeledGraph & g) -> std::map<string, int>
    {
        std::map<string, int> w;
        int top = std::max(2, 2 * g.size());
        for (auto & [t, s] : g.vertices)
            w[t] = int(rng.uniform(1, top));
        return w;
    }

    auto count_consistent_cuts_mod2(const LabeledGraph & g, const CutCountContext & ctx, CutConstraint constraint,
        int c, int w) -> int
    {
        auto ig = guard(g);
        int n = int(ig.titles.size());
        auto pin = std::find(ig.titles.begin(), ig.titles.end(), ctx.pinned);
        if (pin == ig.titles.end())
            throw DomainError("pinned vertex " + ctx.pinned + " is not in the graph");
        int star = int(pin - ig.titles.begin());
        vector<int> weight(n);
        for (int v = 0; v < n; ++v)
            weight[v] = ctx.weight.at(ig.titles[v]);

        int parity = 0;
        // every vertex is out, in L or in R
        vector<int> side(n, 0);
        std::function<void(int, Mask, Mask)> rec = [&](int v, Mask left, Mask right) {
            if (v == n) {
                Mask x = left | right;
                if (std::popcount(x) != c)
                    return;
                int total = 0;
                for (Mask s = x; s; s &= s - 1)
                    total += weight[std::countr_zero(s)];
                if (total != w)
                    return;
                bool ok = constraint == CutConstraint::Dominating ? dominates(ig, x) : covers(ig, x);
                if (ok)
                    parity ^= 1;
                return;
            }
            if (v != star)
                rec(v + 1, left, right);
            if (! (ig.adj_mask[v] & right))
                rec(v + 1, left | (Mask{1} << v), right);
            if (v != star && ! (ig.adj_mask[v] & left))
                rec(v + 1, left, right | (Mask{1} << v));
        };
        rec(0, 0, 0);
        return parity;
    }
}
