#include "dp.hh"

#include <fw/solvers_fw.hh>

#include <algorithm>

using std::vector;

namespace fw
{
    // Entries are (s_1..s_k, r_1..r_k) -> least l, witnessed by a pair (S, R):
    // s_i vertices of class i touch S, r_i of them are in R, and every edge
    // not dominated by S has an end in R. R only shrinks when its vertices
    // get covered by S, which is all an optimal solution ever needs.
    auto eds_table(const Expression & e, SolveStats * stats) -> EdsTable
    {
        require_reduced(e, "edge dominating set");
        auto graphs = evaluate_all(e);
        vector<EdsTable> table(e.nodes.size());
        const int k = e.k;
        auto keep = [](EdsTable & t, const vector<int> & key, int l) {
            auto [it, fresh] = t.emplace(key, l);
            if (! fresh)
                it->second = std::min(it->second, l);
        };

        for (int id : postorder(e)) {
            auto & n = e.nodes[id];
            auto & out = table[id];
            switch (n.kind) {
                case Kind::Introduce: {
                    vector<int> key(2 * k, 0);
                    out[key] = 0;
                    key[k + only_label(n.labels) - 1] = 1;
                    out[key] = 0;
                    break;
                }
                case Kind::Relabel: {
                    int i = n.a - 1, j = n.b - 1;
                    for (auto entry : table[n.kids[0]]) {
                        auto key = entry.first;
                        int l = entry.second;
                        if (i != j) {
                            key[j] += key[i];
                            key[k + j] += key[k + i];
                            key[i] = key[k + i] = 0;
                        }
                        keep(out, key, l);
                    }
                    break;
                }
                case Kind::Join: {
                    auto & g = graphs[n.kids[0]];
                    int i = n.a - 1, j = n.b - 1;
                    int ui = class_size(g, n.a), uj = class_size(g, n.b);
                    for (auto & [key, l] : table[n.kids[0]]) {
                        int si = key[i], ri = key[k + i], fi = ui - si - ri;
                        int sj = key[j], rj = key[k + j], fj = uj - sj - rj;
                        // a: vertices leaving R for S, b: untouched vertices entering S
                        for (int ai = 0; ai <= ri; ++ai)
                            for (int bi = 0; bi <= fi; ++bi)
                                for (int aj = 0; aj <= rj; ++aj)
                                    for (int bj = 0; bj <= fj; ++bj) {
                                        // a new edge between two untouched vertices stays undominated
                                        if (fi - bi > 0 && fj - bj > 0)
                                            continue;
                                        int alpha = ai + bi, beta = aj + bj, cost;
                                        if (alpha > 0 && beta > 0)
                                            cost = std::max(alpha, beta);
                                        else if (alpha > 0)
                                            cost = sj > 0 ? alpha : -1;
                                        else if (beta > 0)
                                            cost = si > 0 ? beta : -1;
                                        else
                                            cost = 0;
                                        if (cost < 0)
                                            continue;
                                        auto next = key;
                                        next[i] += alpha;
                                        next[k + i] -= ai;
                                        next[j] += beta;
                                        next[k + j] -= aj;
                                        keep(out, next, l + cost);
                                    }
                    }
                    break;
                }
                case Kind::Glue: {
                    LabelSet shared = shared_labels(graphs[n.kids[0]], graphs[n.kids[1]]);
                    if (stats)
                        for (int c : n.kids)
                            for (auto & [key, l] : table[c])
                                for (auto q : labels_of(shared))
                                    if (key[q - 1] + key[k + q - 1] > 1)
                                        ++stats->identity_violations;
                    for (auto & [h1, l1] : table[n.kids[0]])
                        for (auto & [h2, l2] : table[n.kids[1]]) {
                            vector<int> key(2 * k);
                            for (int q = 0; q < k; ++q) {
                                if (has_label(shared, q + 1)) {
                                    bool s = h1[q] || h2[q];
                                    key[q] = s;
                                    key[k + q] = ! s && (h1[k + q] || h2[k + q]);
                                }
                                else {
                                    key[q] = h1[q] + h2[q];
                                    key[k + q] = h1[k + q] + h2[k + q];
                                }
                            }
                            keep(out, key, l1 + l2);
                        }
                    break;
                }
                default:
                    throw DomainError("edge dominating set: unexpected " + kind_name(n.kind) + " node");
            }
            if (stats)
                stats->max_table = std::max<long long>(stats->max_table, out.size());
            for (int c : n.kids)
                EdsTable().swap(table[c]);
        }
        return table[e.root];
    }

    auto solve_eds(const Expression & e, SolveStats * stats) -> int
    {
        int best = -1;
        for (auto & [key, l] : eds_table(e, stats)) {
            bool clear = std::all_of(key.begin() + e.k, key.end(), [](int r) { return r == 0; });
            if (clear && (best < 0 || l < best))
                best = l;
        }
        if (best < 0)
            throw std::logic_error("edge dominating set table has no entry without pending vertices");
        return best;
    }
}
