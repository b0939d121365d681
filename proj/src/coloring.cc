#include "mcw.hh"

#include <algorithm>

using std::vector;

namespace fw
{
    namespace
    {
        using Key = vector<int>;

        auto add(FootprintTable & t, const Key & key, std::uint64_t count) -> void
        {
            if (count != 0)
                t[key] += count;
        }

        // Union through subset sums: per label, count colourings whose colours
        // fit inside an allowed mask, multiply, then invert. All arithmetic is
        // mod 2^64, which is exact whenever the true counts fit.
        auto subset_union(const FootprintTable & t1, const FootprintTable & t2, LabelSet active, int k, int q)
            -> std::optional<FootprintTable>
        {
            auto labels = labels_of(active);
            int bits = q * int(labels.size());
            if (bits > 22)
                return std::nullopt;
            auto index = [&](const Key & key) {
                std::size_t idx = 0;
                for (std::size_t p = 0; p < labels.size(); ++p)
                    idx |= std::size_t(key[labels[p] - 1]) << (p * q);
                return idx;
            };
            std::size_t size = std::size_t(1) << bits;
            vector<std::uint64_t> a(size, 0), b(size, 0);
            for (auto & [key, c] : t1)
                a[index(key)] += c;
            for (auto & [key, c] : t2)
                b[index(key)] += c;
            for (int x = 0; x < bits; ++x)
                for (std::size_t idx = 0; idx < size; ++idx)
                    if (idx >> x & 1) {
                        a[idx] += a[idx ^ (std::size_t(1) << x)];
                        b[idx] += b[idx ^ (std::size_t(1) << x)];
                    }
            for (std::size_t idx = 0; idx < size; ++idx)
                a[idx] *= b[idx];
            for (int x = 0; x < bits; ++x)
                for (std::size_t idx = 0; idx < size; ++idx)
                    if (idx >> x & 1)
                        a[idx] -= a[idx ^ (std::size_t(1) << x)];

            const int full = (1 << q) - 1;
            FootprintTable out;
            for (std::size_t idx = 0; idx < size; ++idx) {
                if (a[idx] == 0)
                    continue;
                Key key(k, 0);
                bool keep = true;
                for (std::size_t p = 0; p < labels.size(); ++p) {
                    int m = int(idx >> (p * q)) & full;
                    keep = keep && m != 0 && m != full;
                    key[labels[p] - 1] = m;
                }
                if (keep)
                    out.emplace(std::move(key), a[idx]);
            }
            return out;
        }
    }

    auto footprint_tables(const Expression & e, const FootprintRules & rules, SolveStats * stats)
        -> vector<FootprintTable>
    {
        auto graphs = evaluate_all(e);
        auto active = active_labels(e);
        const int k = e.k;
        const int full = (1 << rules.colours) - 1;
        const std::size_t width = k + (rules.track_size ? 2 : 0);
        vector<FootprintTable> table(e.nodes.size());

        // Labels of t that must be filled from active labels of its child.
        auto check_feed = [&](int id, int child) {
            auto & n = e.nodes[id];
            LabelSet below = present_labels(graphs[child]);
            for (Label l = 1; l <= k; ++l)
                if (has_label(below, l) && (relabel_image(n, l) & active[id]) && ! has_label(active[child], l))
                    throw std::logic_error("inactive label " + std::to_string(l) + " feeds an active one at node "
                        + std::to_string(id));
        };

        for (int id : postorder(e)) {
            auto & n = e.nodes[id];
            auto & out = table[id];
            switch (n.kind) {
                case Kind::Introduce: {
                    Label i = labels_of(n.labels).at(0);
                    for (auto & o : rules.introduce(n)) {
                        Key key(width, 0);
                        if (has_label(active[id], i))
                            key[i - 1] = 1 << o.colour;
                        if (rules.track_size) {
                            key[k] = o.dc;
                            key[k + 1] = o.dw;
                        }
                        add(out, key, 1);
                    }
                    break;
                }
                case Kind::Join:
                case Kind::RelabelSet: {
                    int child = n.kids[0];
                    check_feed(id, child);
                    if (n.kind == Kind::Join && ! (has_label(active[child], n.a) && has_label(active[child], n.b)))
                        throw std::logic_error("join over an inactive label at node " + std::to_string(id));
                    for (auto & [key, count] : table[child]) {
                        if (n.kind == Kind::Join) {
                            int fa = key[n.a - 1], fb = key[n.b - 1];
                            bool clash = false;
                            for (int x = 0; x < rules.colours; ++x)
                                clash = clash || ((fa >> x & 1) && (rules.clash[x] & unsigned(fb)));
                            if (clash)
                                continue;
                        }
                        Key next(width, 0);
                        bool keep = true;
                        for (Label l = 1; l <= k; ++l)
                            if (has_label(active[child], l))
                                for (Label p : labels_of(relabel_image(n, l) & active[id]))
                                    next[p - 1] |= key[l - 1];
                        for (Label p : labels_of(active[id]))
                            keep = keep && next[p - 1] != full;
                        if (! keep)
                            continue;
                        if (rules.track_size) {
                            next[k] = key[k];
                            next[k + 1] = key[k + 1];
                        }
                        add(out, next, count);
                    }
                    break;
                }
                case Kind::Union: {
                    auto & t1 = table[n.kids[0]];
                    auto & t2 = table[n.kids[1]];
                    if (rules.subset_union && ! rules.track_size)
                        if (auto fast = subset_union(t1, t2, active[id], k, rules.colours)) {
                            out = std::move(*fast);
                            break;
                        }
                    for (auto & [k1, c1] : t1)
                        for (auto & [k2, c2] : t2) {
                            Key key(width, 0);
                            bool keep = true;
                            for (int p = 0; p < k; ++p) {
                                key[p] = k1[p] | k2[p];
                                keep = keep && key[p] != full;
                            }
                            if (! keep)
                                continue;
                            if (rules.track_size) {
                                key[k] = k1[k] + k2[k];
                                key[k + 1] = k1[k + 1] + k2[k + 1];
                            }
                            add(out, key, c1 * c2);
                        }
                    break;
                }
                default:
                    throw DomainError("footprint DP: unexpected " + kind_name(n.kind) + " node");
            }
            if (stats)
                stats->max_table = std::max<long long>(stats->max_table, out.size());
        }
        return table;
    }

    auto q_coloring_tables(const Expression & e, int q, SolveStats * stats) -> vector<FootprintTable>
    {
        if (q < 2)
            throw DomainError("q-coloring needs q >= 2, got " + std::to_string(q));
        if (q > 20)
            throw DomainError("q-coloring supports q up to 20, got " + std::to_string(q));
        require_normalized(e, "q-coloring");
        FootprintRules rules;
        rules.colours = q;
        for (int x = 0; x < q; ++x)
            rules.clash.push_back(1U << x);
        rules.subset_union = true;
        rules.introduce = [q](const ExprNode &) {
            vector<FootprintRules::Option> all;
            for (int x = 0; x < q; ++x)
                all.push_back({x});
            return all;
        };
        return footprint_tables(e, rules, stats);
    }

    auto solve_q_coloring_count(const Expression & e, int q, SolveStats * stats) -> std::uint64_t
    {
        if (q < 2)
            throw DomainError("q-coloring needs q >= 2, got " + std::to_string(q));
        auto m = as_normalized_multi(e);
        auto tables = q_coloring_tables(m, q, stats);
        std::uint64_t total = 0;
        for (auto & [key, count] : tables[m.root])
            total += count;
        return total;
    }
}
