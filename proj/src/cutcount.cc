#include "mcw.hh"

#include <algorithm>

using std::vector;

namespace fw
{
    namespace
    {
        enum Colour
        {
            L,
            R,
            N
        };

        auto weight_of(const CutCountContext & ctx, const std::string & v) -> int
        {
            auto it = ctx.weight.find(v);
            if (it == ctx.weight.end())
                throw DomainError("no weight for vertex " + v);
            return it->second;
        }

        auto odd_pairs(const std::map<vector<int>, int> & root, int k) -> ParitySet
        {
            ParitySet out;
            for (auto & [key, parity] : root)
                if (parity & 1)
                    out.insert({key[k], key[k + 1]});
            return out;
        }

        // Runs `parities` for every trial and every admissible v*, keeping the
        // smallest c that came out odd. Odd parity certifies a solution of
        // that size, so the result never undershoots.
        template <typename Parities>
        auto drive(const LabeledGraph & g, const CutCountContext & ctx, SolveStats * stats, bool skip_isolated,
            Parities parities) -> std::optional<int>
        {
            if (ctx.trials < 1)
                throw DomainError("cut and count needs at least one trial");
            Rng rng(ctx.seed);
            std::optional<int> best;
            for (int trial = 0; trial < ctx.trials; ++trial) {
                CutCountContext run = ctx;
                run.weight = sample_weights(rng, g);
                for (auto & [v, labels] : g.vertices) {
                    if (skip_isolated && g.neighbours(v).empty())
                        continue;
                    run.pinned = v;
                    if (stats)
                        ++stats->runs;
                    for (auto [c, w] : parities(run))
                        if (! best || c < *best)
                            best = c;
                }
            }
            return best;
        }

        const int feas_table[5][5] = {
            {1, 1, 1, 1, 1},
            {1, 1, 0, 0, 0},
            {1, 0, 1, 0, 0},
            {1, 0, 0, 1, 0},
            {1, 0, 0, 0, 0},
        };

        using S = CdsState;
        const CdsState merge_table[5][5] = {
            {S::Empty, S::F, S::L, S::R, S::Two},
            {S::F, S::F, S::Two, S::Two, S::Two},
            {S::L, S::Two, S::L, S::Two, S::Two},
            {S::R, S::Two, S::Two, S::R, S::Two},
            {S::Two, S::Two, S::Two, S::Two, S::Two},
        };

        auto merge(int a, int b) -> int
        {
            return int(merge_table[a][b]);
        }
    }

    auto cds_feas(CdsState a, CdsState b) -> int
    {
        return feas_table[int(a)][int(b)];
    }

    auto cds_merge(CdsState a, CdsState b) -> CdsState
    {
        return merge_table[int(a)][int(b)];
    }

    // Colourings with L, R (the cut sides of the cover) and N (outside it):
    // L-R edges break the cut, N-N edges leave an edge uncovered.
    auto cvc_parities(const Expression & e, const CutCountContext & ctx, SolveStats * stats) -> ParitySet
    {
        require_normalized(e, "connected vertex cover");
        if (! evaluate(e).has_vertex(ctx.pinned))
            throw DomainError("pinned vertex " + ctx.pinned + " is not in the graph");
        FootprintRules rules;
        rules.colours = 3;
        rules.clash = {1U << R, 1U << L, 1U << N};
        rules.track_size = true;
        rules.introduce = [&ctx](const ExprNode & n) {
            int w = weight_of(ctx, n.title);
            vector<FootprintRules::Option> opts = {{L, 1, w}};
            if (n.title != ctx.pinned) {
                opts.push_back({R, 1, w});
                opts.push_back({N, 0, 0});
            }
            return opts;
        };
        auto tables = footprint_tables(e, rules, stats);
        std::map<vector<int>, int> root;
        for (auto & [key, count] : tables[e.root])
            root[key] ^= int(count & 1);
        return odd_pairs(root, e.k);
    }

    auto solve_cvc(const Expression & e, const CutCountContext & ctx, SolveStats * stats) -> std::optional<int>
    {
        auto m = as_normalized_multi(e);
        auto g = evaluate(m);
        if (g.edges.empty()) {
            if (stats)
                stats->note = "no edges";
            return 0;
        }
        return drive(g, ctx, stats, true, [&](const CutCountContext & run) { return cvc_parities(m, run, stats); });
    }

    // Signatures over all labels with states {}, {F}, {L}, {R} and "two or
    // more"; values are parities. F collects vertices with no edge to L u R,
    // so after all labels are dropped at the top, every (L, R) that fails to
    // dominate is counted 2^|undominated| times and vanishes mod 2.
    auto cds_parities(const Expression & e, const CutCountContext & ctx, SolveStats * stats) -> ParitySet
    {
        require_normalized(e, "connected dominating set");
        if (! evaluate(e).has_vertex(ctx.pinned))
            throw DomainError("pinned vertex " + ctx.pinned + " is not in the graph");
        auto padded = e;
        for (Label i = 1; i <= e.k; ++i) {
            ExprNode drop;
            drop.kind = Kind::RelabelSet;
            drop.a = i;
            drop.labels = 0;
            drop.kids = {padded.root};
            padded.nodes.push_back(drop);
            padded.root = padded.size() - 1;
        }

        const int k = e.k;
        using Table = std::map<vector<int>, int>;
        vector<Table> table(padded.nodes.size());
        auto toggle = [](Table & t, const vector<int> & key) {
            auto [it, fresh] = t.emplace(key, 1);
            if (! fresh && (it->second ^= 1) == 0)
                t.erase(it);
        };

        for (int id : postorder(padded)) {
            auto & n = padded.nodes[id];
            auto & out = table[id];
            switch (n.kind) {
                case Kind::Introduce: {
                    Label i = labels_of(n.labels).at(0);
                    int w = weight_of(ctx, n.title);
                    auto emit = [&](CdsState s, int c, int weight) {
                        vector<int> key(k + 2, int(S::Empty));
                        key[i - 1] = int(s);
                        key[k] = c;
                        key[k + 1] = weight;
                        toggle(out, key);
                    };
                    emit(S::L, 1, w);
                    if (n.title != ctx.pinned) {
                        emit(S::Empty, 0, 0);
                        emit(S::F, 0, 0);
                        emit(S::R, 1, w);
                    }
                    break;
                }
                case Kind::Join:
                    for (auto & [key, p] : table[n.kids[0]])
                        if (feas_table[key[n.a - 1]][key[n.b - 1]])
                            toggle(out, key);
                    break;
                case Kind::RelabelSet: {
                    Label j = n.labels ? labels_of(n.labels & ~bit(n.a)).at(0) : 0;
                    for (auto & [key, p] : table[n.kids[0]]) {
                        auto f = key;
                        if (n.labels == 0)
                            f[n.a - 1] = int(S::Empty);
                        else
                            f[j - 1] = merge(f[n.a - 1], f[j - 1]);
                        toggle(out, f);
                    }
                    break;
                }
                case Kind::Union:
                    for (auto & [f1, p1] : table[n.kids[0]])
                        for (auto & [f2, p2] : table[n.kids[1]]) {
                            vector<int> f(k + 2);
                            for (int p = 0; p < k; ++p)
                                f[p] = merge(f1[p], f2[p]);
                            f[k] = f1[k] + f2[k];
                            f[k + 1] = f1[k + 1] + f2[k + 1];
                            toggle(out, f);
                        }
                    break;
                default:
                    throw DomainError("connected dominating set: unexpected " + kind_name(n.kind) + " node");
            }
            if (stats)
                stats->max_table = std::max<long long>(stats->max_table, out.size());
            for (int c : n.kids)
                Table().swap(table[c]);
        }

        for (auto & [key, p] : table[padded.root])
            for (int q = 0; q < k; ++q)
                if (key[q] != int(S::Empty))
                    throw std::logic_error("padded root keeps a signature with a nonempty label");
        return odd_pairs(table[padded.root], k);
    }

    auto solve_cds(const Expression & e, const CutCountContext & ctx, SolveStats * stats) -> std::optional<int>
    {
        auto m = as_normalized_multi(e);
        auto g = evaluate(m);
        if (g.size() == 0)
            throw DomainError("connected dominating set of an empty graph");
        if (! is_connected(g))
            throw DomainError("connected dominating set needs a connected graph");
        return drive(g, ctx, stats, false, [&](const CutCountContext & run) { return cds_parities(m, run, stats); });
    }
}
