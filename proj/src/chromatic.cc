#include "mcw.hh"

#include <fw/rewrite.hh>

#include <algorithm>
#include <functional>
#include <numeric>

using std::vector;

namespace fw
{
    namespace
    {
        // N[S] = number of colours seen on exactly the labels in S. Index 0
        // counts colours left only on label-less vertices; the sentinel label
        // keeps it at zero, but the formulas stay right without it.
        using Record = vector<int>;
        using Records = std::set<Record>;

        auto pairings(const Record & r1, const Record & r2, Records & out) -> void
        {
            vector<int> rows, cols;
            for (std::size_t s = 0; s < r1.size(); ++s) {
                if (r1[s])
                    rows.push_back(int(s));
                if (r2[s])
                    cols.push_back(int(s));
            }
            Record left = r1, right = r2, acc(r1.size(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t cell) {
                if (cell == rows.size() * cols.size()) {
                    Record n = acc;
                    for (std::size_t s = 0; s < n.size(); ++s)
                        n[s] += left[s] + right[s];
                    out.insert(std::move(n));
                    return;
                }
                int s1 = rows[cell / cols.size()], s2 = cols[cell % cols.size()];
                int most = std::min(left[s1], right[s2]);
                for (int m = 0; m <= most; ++m) {
                    left[s1] -= m;
                    right[s2] -= m;
                    acc[s1 | s2] += m;
                    rec(cell + 1);
                    left[s1] += m;
                    right[s2] += m;
                    acc[s1 | s2] -= m;
                }
            };
            rec(0);
        }

        auto with_sentinel(const Expression & e) -> Expression
        {
            Expression m;
            switch (e.dialect) {
                case Dialect::Multi: m = as_multi(e); break;
                case Dialect::Clique:
                case Dialect::Fuse: {
                    auto f = e;
                    f.dialect = Dialect::Fuse;
                    m = fuse_to_multi(f);
                    break;
                }
                default: throw DomainError("no multi form for " + dialect_name(e.dialect) + " expressions");
            }
            if (m.k >= 63)
                throw DomainError("chromatic number supports at most 62 labels");
            m.k += 1;
            for (auto & n : m.nodes)
                if (n.kind == Kind::Introduce)
                    n.labels |= bit(m.k);
            return normalize_multi(m);
        }
    }

    auto solve_chromatic_number(const Expression & e, SolveStats * stats) -> int
    {
        auto m = with_sentinel(e);
        require_normalized(m, "chromatic number");
        if (m.k > 8)
            throw DomainError("chromatic number records need 2^(k+1) counters; k too large");
        const std::size_t width = std::size_t(1) << m.k;
        vector<Records> table(m.nodes.size());

        for (int id : postorder(m)) {
            auto & n = m.nodes[id];
            auto & out = table[id];
            switch (n.kind) {
                case Kind::Introduce: {
                    Record r(width, 0);
                    r[n.labels] = 1;
                    out.insert(r);
                    break;
                }
                case Kind::Join: {
                    LabelSet both = bit(n.a) | bit(n.b);
                    for (auto & r : table[n.kids[0]]) {
                        bool clash = false;
                        for (std::size_t s = 0; s < width; ++s)
                            clash = clash || ((s & both) == both && r[s] > 0);
                        if (! clash)
                            out.insert(r);
                    }
                    break;
                }
                case Kind::RelabelSet: {
                    LabelSet i = bit(n.a), j = n.labels & ~i;
                    for (auto & old : table[n.kids[0]]) {
                        Record r(width, 0);
                        for (std::size_t s = 0; s < width; ++s) {
                            if (n.labels == 0)
                                r[s] = (s & i) ? 0 : old[s] + old[s | i];
                            else if (! (s & i))
                                r[s] = old[s];
                            else if (s & j)
                                r[s] = old[s] + old[s & ~j];
                            else
                                r[s] = 0;
                        }
                        out.insert(std::move(r));
                    }
                    break;
                }
                case Kind::Union:
                    for (auto & r1 : table[n.kids[0]])
                        for (auto & r2 : table[n.kids[1]])
                            pairings(r1, r2, out);
                    break;
                default:
                    throw DomainError("chromatic number: unexpected " + kind_name(n.kind) + " node");
            }
            if (stats)
                stats->max_table = std::max<long long>(stats->max_table, out.size());
            for (int c : n.kids)
                Records().swap(table[c]);
        }

        int best = -1;
        for (auto & r : table[m.root]) {
            int used = std::accumulate(r.begin(), r.end(), 0);
            if (best < 0 || used < best)
                best = used;
        }
        return best;
    }
}
