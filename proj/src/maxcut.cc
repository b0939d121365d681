#include "dp.hh"

#include <fw/rewrite.hh>
#include <fw/solvers_fw.hh>

#include <algorithm>

using std::vector;

namespace fw
{
    auto require_reduced(const Expression & e, const std::string & who) -> void
    {
        if (e.dialect != Dialect::Glue)
            throw DomainError(who + " needs a reduced glue expression, got " + dialect_name(e.dialect));
        auto report = validate(e);
        if (! report.ok())
            throw DomainError("invalid expression: " + report.violations[0].message);
        auto why = check_reduced(e);
        if (! why.empty())
            throw DomainError(who + " needs a reduced glue expression: " + why);
    }

    auto shared_labels(const LabeledGraph & g1, const LabeledGraph & g2) -> LabelSet
    {
        LabelSet s = 0;
        for (auto & [t, l] : g1.vertices)
            if (g2.has_vertex(t))
                s |= l;
        return s;
    }

    auto as_reduced_glue(const Expression & e) -> Expression
    {
        switch (e.dialect) {
            case Dialect::Glue: return check_reduced(e).empty() ? e : reduce_glue(e);
            case Dialect::Clique:
            case Dialect::Fuse: {
                auto f = e;
                f.dialect = Dialect::Fuse;
                return fuse_to_reduced_glue(f);
            }
            default: throw DomainError("no glue form for " + dialect_name(e.dialect) + " expressions");
        }
    }

    auto max_cut_table(const Expression & e, SolveStats * stats) -> MaxCutTable
    {
        require_reduced(e, "max cut");
        auto graphs = evaluate_all(e);
        vector<MaxCutTable> table(e.nodes.size());
        const int k = e.k;
        auto keep = [](MaxCutTable & t, const vector<int> & s, int r) {
            auto [it, fresh] = t.emplace(s, r);
            if (! fresh)
                it->second = std::max(it->second, r);
        };

        for (int id : postorder(e)) {
            auto & n = e.nodes[id];
            auto & out = table[id];
            switch (n.kind) {
                case Kind::Introduce: {
                    vector<int> s(k, 0);
                    out[s] = 0;
                    s[only_label(n.labels) - 1] = 1;
                    out[s] = 0;
                    break;
                }
                case Kind::Relabel: {
                    int i = n.a - 1, j = n.b - 1;
                    for (auto entry : table[n.kids[0]]) {
                        auto s = entry.first;
                        int r = entry.second;
                        if (i != j) {
                            s[j] += s[i];
                            s[i] = 0;
                        }
                        keep(out, s, r);
                    }
                    break;
                }
                case Kind::Join: {
                    auto & g = graphs[n.kids[0]];
                    int i = n.a - 1, j = n.b - 1;
                    int ui = class_size(g, n.a), uj = class_size(g, n.b);
                    for (auto & [s, r] : table[n.kids[0]])
                        keep(out, s, r + s[i] * (uj - s[j]) + s[j] * (ui - s[i]));
                    break;
                }
                case Kind::Glue: {
                    LabelSet shared = shared_labels(graphs[n.kids[0]], graphs[n.kids[1]]);
                    for (auto & [s1, r1] : table[n.kids[0]])
                        for (auto & [s2, r2] : table[n.kids[1]]) {
                            vector<int> s(k);
                            bool ok = true;
                            for (int l = 0; l < k && ok; ++l) {
                                if (has_label(shared, l + 1)) {
                                    ok = s1[l] == s2[l];
                                    s[l] = s1[l];
                                }
                                else
                                    s[l] = s1[l] + s2[l];
                            }
                            if (ok)
                                keep(out, s, r1 + r2);
                        }
                    break;
                }
                default:
                    throw DomainError("max cut: unexpected " + kind_name(n.kind) + " node");
            }
            if (stats)
                stats->max_table = std::max<long long>(stats->max_table, out.size());
            for (int c : n.kids)
                MaxCutTable().swap(table[c]);
        }
        return table[e.root];
    }

    auto solve_max_cut(const Expression & e, SolveStats * stats) -> int
    {
        int best = 0;
        for (auto & [s, r] : max_cut_table(e, stats))
            best = std::max(best, r);
        return best;
    }
}
