#include "mcw.hh"

#include <algorithm>

namespace fw
{
    // Each undominated vertex parks its obligation on one of its labels; the
    // obligation is discharged when a join hands that label a chosen
    // neighbour. Guessing the parking spot up front (and letting relabels
    // move it) keeps the per-label state to two bits.
    auto ds_tables(const Expression & e, SolveStats * stats) -> std::vector<DsTable>
    {
        require_normalized(e, "dominating set");
        std::vector<DsTable> table(e.nodes.size());
        auto keep = [](DsTable & t, LabelSet z, LabelSet u, int size) {
            auto [it, fresh] = t.emplace(std::pair{z, u}, size);
            if (! fresh)
                it->second = std::min(it->second, size);
        };

        for (int id : postorder(e)) {
            auto & n = e.nodes[id];
            auto & out = table[id];
            switch (n.kind) {
                case Kind::Introduce:
                    keep(out, n.labels, 0, 1);
                    keep(out, 0, n.labels, 0);
                    break;
                case Kind::Join:
                    for (auto & [key, size] : table[n.kids[0]]) {
                        auto [z, u] = key;
                        if (has_label(z, n.a))
                            u &= ~bit(n.b);
                        if (has_label(z, n.b))
                            u &= ~bit(n.a);
                        keep(out, z, u, size);
                    }
                    break;
                case Kind::RelabelSet: {
                    LabelSet from = bit(n.a);
                    if (n.labels == 0) {
                        for (auto & [key, size] : table[n.kids[0]])
                            if (! (key.second & from))
                                keep(out, key.first & ~from, key.second, size);
                        break;
                    }
                    LabelSet to = n.labels & ~from;
                    for (auto & [key, size] : table[n.kids[0]]) {
                        auto [z, u] = key;
                        if (z & from)
                            z |= to;
                        keep(out, z, u, size);
                        if (u & from) {
                            // some or all of the parked obligations move over
                            keep(out, z, u | to, size);
                            keep(out, z, (u & ~from) | to, size);
                        }
                    }
                    break;
                }
                case Kind::Union:
                    for (auto & [k1, s1] : table[n.kids[0]])
                        for (auto & [k2, s2] : table[n.kids[1]])
                            keep(out, k1.first | k2.first, k1.second | k2.second, s1 + s2);
                    break;
                default:
                    throw DomainError("dominating set: unexpected " + kind_name(n.kind) + " node");
            }
            if (stats)
                stats->max_table = std::max<long long>(stats->max_table, out.size());
        }
        return table;
    }

    auto solve_dominating_set(const Expression & e, SolveStats * stats) -> int
    {
        auto m = as_normalized_multi(e);
        auto tables = ds_tables(m, stats);
        // dropping every label at the top discards all pending obligations
        int best = -1;
        for (auto & [key, size] : tables[m.root])
            if (key.second == 0 && (best < 0 || size < best))
                best = size;
        if (best < 0)
            throw std::logic_error("dominating set table has no entry without obligations");
        return best;
    }
}
