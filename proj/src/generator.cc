#include <fw/oracle.hh>
#include <fw/rewrite.hh>

#include <bit>

using std::string;
using std::vector;

namespace fw
{
    auto random_graph(Rng & rng, int n, double p, int k) -> LabeledGraph
    {
        LabeledGraph g;
        g.k = k;
        for (int i = 0; i < n; ++i)
            g.add_vertex("v" + std::to_string(i), bit(Label(rng.uniform(1, k))));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.chance(p))
                    g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
        return g;
    }

    namespace
    {
        struct Entry
        {
            int node;
            LabeledGraph graph;
        };

        class Generator
        {
            public:
                Generator(const GenConfig & cfg) : _cfg(cfg), _rng(cfg.seed)
                {
                    _e.dialect = cfg.dialect;
                    _e.k = cfg.k;
                }

                auto run() -> Expression
                {
                    auto & w = _cfg.weights;
                    while (true) {
                        int s = int(_stack.size());
                        int used = _e.size();
                        bool leaf_ok = (s == 0 ? used + 1 : used + 2 + (s - 1)) <= _cfg.budget
                            && (_cfg.max_leaves == 0 || _leaves < _cfg.max_leaves);
                        bool unary_ok = s >= 1 && used + 1 + (s - 1) <= _cfg.budget;
                        bool binary_ok = s >= 2;
                        double wl = leaf_ok ? w.introduce : 0;
                        double wb = binary_ok ? w.binary : 0;
                        double wj = unary_ok ? w.join : 0;
                        double wr = unary_ok ? w.relabel : 0;
                        double wf = unary_ok && _cfg.dialect == Dialect::Fuse ? w.fuse : 0;
                        double wk = binary_ok && unary_ok ? w.link : 0;
                        double total = wl + wb + wj + wr + wf + wk;
                        if (s == 0 && wl == 0)
                            wl = total = 1; // something has to be introduced
                        if (total <= 0)
                            break;
                        // a finished expression stops early now and then instead of
                        // burning the rest of the budget on relabels
                        if (s == 1 && ! leaf_ok && _rng.chance(0.15))
                            break;
                        double x = _rng.real(0, total);
                        if ((x -= wl) < 0)
                            leaf();
                        else if ((x -= wb) < 0)
                            binary();
                        else if ((x -= wj) < 0)
                            join();
                        else if ((x -= wr) < 0)
                            relabel();
                        else if ((x -= wf) < 0)
                            fuse();
                        else {
                            binary();
                            join();
                        }
                    }
                    while (_stack.size() >= 2)
                        binary();
                    _e.root = _stack.back().node;
                    return _e;
                }

            private:
                GenConfig _cfg;
                Rng _rng;
                Expression _e;
                vector<Entry> _stack;
                int _leaves = 0;

                auto push(ExprNode n, LabeledGraph g) -> void
                {
                    _e.nodes.push_back(std::move(n));
                    _stack.push_back({_e.size() - 1, std::move(g)});
                }

                auto random_label() -> Label { return Label(_rng.uniform(1, _cfg.k)); }

                // A label whose class is nonempty at the top entry, or any label.
                auto present_label(const LabeledGraph & g) -> Label
                {
                    vector<Label> present;
                    for (Label l = 1; l <= _cfg.k; ++l)
                        if (class_size(g, l) > 0)
                            present.push_back(l);
                    if (present.empty() || _rng.chance(0.1))
                        return random_label();
                    return present[_rng.uniform(0, int(present.size()) - 1)];
                }

                auto leaf() -> void
                {
                    ExprNode n;
                    n.title = "v" + std::to_string(_leaves++);
                    n.labels = bit(random_label());
                    if (_cfg.dialect == Dialect::Multi && _cfg.k >= 2 && _rng.chance(_cfg.weights.multi_introduce))
                        n.labels |= bit(random_label());
                    auto g = apply_introduce(n, _cfg.k);
                    push(std::move(n), std::move(g));
                }

                auto binary() -> void
                {
                    auto right = std::move(_stack.back());
                    _stack.pop_back();
                    auto left = std::move(_stack.back());
                    _stack.pop_back();
                    ExprNode n;
                    n.kind = Kind::Union;
                    n.kids = {left.node, right.node};
                    auto g = apply_binary(n, left.graph, right.graph);
                    push(std::move(n), std::move(g));
                }

                auto unary(ExprNode n) -> void
                {
                    auto top = std::move(_stack.back());
                    _stack.pop_back();
                    n.kids = {top.node};
                    auto g = apply_unary(n, std::move(top.graph));
                    push(std::move(n), std::move(g));
                }

                // Useless moves are kept rare but possible, so suppression gets exercised.
                auto allow_useless() -> bool { return _rng.chance(0.05); }

                auto fallback() -> void
                {
                    if (_stack.size() >= 2)
                        binary();
                    else
                        relabel(true);
                }

                auto join() -> void
                {
                    auto & g = _stack.back().graph;
                    vector<std::pair<Label, Label>> useful, any;
                    for (Label a = 1; a <= _cfg.k; ++a)
                        for (Label b = a + 1; b <= _cfg.k; ++b) {
                            bool admissible = true;
                            if (_cfg.dialect == Dialect::Multi)
                                for (auto & [t, s] : g.vertices)
                                    admissible = admissible && ! (has_label(s, a) && has_label(s, b));
                            if (! admissible)
                                continue;
                            any.push_back({a, b});
                            ExprNode probe;
                            probe.kind = Kind::Join;
                            probe.a = a;
                            probe.b = b;
                            if (! is_useless(probe, g))
                                useful.push_back({a, b});
                        }
                    auto & pool = useful.empty() && allow_useless() ? any : useful;
                    if (pool.empty())
                        return fallback();
                    auto [a, b] = pool[_rng.uniform(0, int(pool.size()) - 1)];
                    ExprNode n;
                    n.kind = Kind::Join;
                    n.a = _rng.chance(0.5) ? a : b;
                    n.b = n.a == a ? b : a;
                    unary(std::move(n));
                }

                auto relabel(bool forced = false) -> void
                {
                    auto & g = _stack.back().graph;
                    ExprNode n;
                    n.a = present_label(g);
                    if (_cfg.dialect == Dialect::Multi) {
                        n.kind = Kind::RelabelSet;
                        if (! _rng.chance(_cfg.weights.relabel_empty)) {
                            int size = int(_rng.uniform(1, std::min(2, _cfg.k)));
                            for (int q = 0; q < size; ++q)
                                n.labels |= bit(random_label());
                        }
                    }
                    else {
                        n.kind = Kind::Relabel;
                        n.b = random_label();
                        if (n.b == n.a && _cfg.k > 1 && ! allow_useless())
                            n.b = n.a % _cfg.k + 1;
                    }
                    if (! forced && is_useless(n, g) && ! allow_useless() && _stack.size() >= 2)
                        return binary();
                    unary(std::move(n));
                }

                auto fuse() -> void
                {
                    auto & g = _stack.back().graph;
                    vector<Label> crowded;
                    for (Label l = 1; l <= _cfg.k; ++l)
                        if (class_size(g, l) >= (allow_useless() ? 1 : 2))
                            crowded.push_back(l);
                    if (crowded.empty())
                        return fallback();
                    ExprNode n;
                    n.kind = Kind::Fuse;
                    n.a = crowded[_rng.uniform(0, int(crowded.size()) - 1)];
                    unary(std::move(n));
                }
        };
    }

    auto gen_expression(const GenConfig & cfg) -> Expression
    {
        if (cfg.k < 1 || cfg.k > max_labels)
            throw DomainError("generator needs 1 <= k <= " + std::to_string(max_labels));
        if (cfg.budget < 1)
            throw DomainError("generator needs a budget of at least 1");
        if (cfg.dialect == Dialect::Glue) {
            // glue expressions come from converted fuse expressions, which
            // makes shared titles glueable by construction
            auto fuse_cfg = cfg;
            fuse_cfg.dialect = Dialect::Fuse;
            return fuse_to_glue(Generator(fuse_cfg).run());
        }
        return Generator(cfg).run();
    }
}
