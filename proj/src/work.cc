#include "work.hh"

#include <algorithm>

using std::vector;

namespace fw
{
    Work::Work(const Expression & e) : dialect(e.dialect), k(e.k)
    {
        nodes.resize(e.nodes.size());
        for (int id = 0; id < e.size(); ++id) {
            auto & s = e.nodes[id];
            auto & n = nodes[id];
            n.kind = s.kind;
            n.title = s.title;
            n.labels = s.labels;
            n.a = s.a;
            n.b = s.b;
            n.kids = s.kids;
            n.origin = s.origin >= 0 ? s.origin : id;
            n.alive = false;
        }
        root = e.root;
        for (int id : fw::postorder(e)) {
            nodes[id].alive = true;
            for (int c : nodes[id].kids)
                nodes[c].parent = id;
        }
        _cache.resize(nodes.size());
    }

    auto Work::to_expression() const -> Expression
    {
        Expression e;
        e.dialect = dialect;
        e.k = k;
        vector<int> remap(nodes.size(), -1);
        for (int id : postorder()) {
            auto & n = nodes[id];
            ExprNode x;
            x.kind = n.kind;
            x.title = n.title;
            x.labels = n.labels;
            x.a = n.a;
            x.b = n.b;
            x.origin = n.origin;
            for (int c : n.kids)
                x.kids.push_back(remap[c]);
            remap[id] = int(e.nodes.size());
            e.nodes.push_back(std::move(x));
        }
        e.root = root >= 0 ? remap[root] : -1;
        return e;
    }

    auto Work::graph(int t) -> const LabeledGraph &
    {
        if (_cache[t])
            return *_cache[t];
        // children first, iteratively, so deep trees do not blow the stack
        vector<int> stack{t};
        while (! stack.empty()) {
            int x = stack.back();
            bool ready = true;
            for (int c : nodes[x].kids)
                if (! _cache[c]) {
                    stack.push_back(c);
                    ready = false;
                }
            if (! ready)
                continue;
            stack.pop_back();
            if (_cache[x])
                continue;
            auto & n = nodes[x];
            ExprNode view;
            view.kind = n.kind;
            view.title = n.title;
            view.labels = n.labels;
            view.a = n.a;
            view.b = n.b;
            switch (arity(n.kind)) {
                case 0: _cache[x] = apply_introduce(view, k); break;
                case 1: _cache[x] = apply_unary(view, *_cache[n.kids[0]]); break;
                default: _cache[x] = apply_binary(view, *_cache[n.kids[0]], *_cache[n.kids[1]]); break;
            }
        }
        return *_cache[t];
    }

    auto Work::touch(int t) -> void
    {
        while (t >= 0) {
            _cache[t].reset();
            t = nodes[t].parent;
        }
    }

    auto Work::make(WNode n) -> int
    {
        n.parent = -1;
        n.alive = true;
        for (int c : n.kids)
            nodes[c].parent = int(nodes.size());
        nodes.push_back(std::move(n));
        _cache.emplace_back();
        return int(nodes.size()) - 1;
    }

    auto Work::make_unary(Kind kind, Label a, Label b, LabelSet labels) -> int
    {
        WNode n;
        n.kind = kind;
        n.a = a;
        n.b = b;
        n.labels = labels;
        return make(std::move(n));
    }

    auto Work::replace(int old, int repl) -> void
    {
        int p = nodes[old].parent;
        nodes[repl].parent = p;
        if (p < 0)
            root = repl;
        else
            for (auto & c : nodes[p].kids)
                if (c == old)
                    c = repl;
        nodes[old].parent = -1;
        touch(repl);
    }

    auto Work::insert_above(int t, int u) -> void
    {
        replace(t, u);
        nodes[u].kids = {t};
        nodes[t].parent = u;
        touch(u);
    }

    auto Work::suppress(int t) -> void
    {
        int c = child(t);
        replace(t, c);
        nodes[t].kids.clear();
        nodes[t].alive = false;
        _cache[t].reset();
    }

    auto Work::kill(int t) -> void
    {
        for (int x : subtree(t)) {
            nodes[x].alive = false;
            _cache[x].reset();
        }
    }

    auto Work::useless(int t) -> bool
    {
        auto & n = nodes[t];
        if (arity(n.kind) != 1)
            return false;
        ExprNode view;
        view.kind = n.kind;
        view.a = n.a;
        view.b = n.b;
        view.labels = n.labels;
        return is_useless(view, graph(n.kids[0]));
    }

    auto Work::suppress_useless() -> int
    {
        // Suppressing a useless node leaves every graph unchanged, so one
        // bottom-up pass is enough.
        int count = 0;
        for (int t : postorder())
            if (useless(t)) {
                suppress(t);
                ++count;
            }
        return count;
    }

    auto Work::postorder() const -> vector<int>
    {
        return root < 0 ? vector<int>{} : subtree(root);
    }

    auto Work::subtree(int t) const -> vector<int>
    {
        vector<int> order;
        vector<std::pair<int, bool>> stack{{t, false}};
        while (! stack.empty()) {
            auto [x, done] = stack.back();
            stack.pop_back();
            if (done) {
                order.push_back(x);
                continue;
            }
            stack.push_back({x, true});
            auto & kids = nodes[x].kids;
            for (auto it = kids.rbegin(); it != kids.rend(); ++it)
                stack.push_back({*it, false});
        }
        return order;
    }

    auto Work::is_ancestor(int anc, int t) const -> bool
    {
        for (int x = t; x >= 0; x = nodes[x].parent)
            if (x == anc)
                return true;
        return false;
    }

    auto Work::binary_height(int t) const -> int
    {
        vector<int> h(nodes.size(), 0);
        for (int x : subtree(t)) {
            int best = 0;
            for (int c : nodes[x].kids)
                best = std::max(best, h[c]);
            h[x] = best + (arity(nodes[x].kind) == 2 ? 1 : 0);
        }
        return h[t];
    }

    auto Work::height(int t) const -> int
    {
        vector<int> h(nodes.size(), 0);
        for (int x : subtree(t)) {
            int best = -1;
            for (int c : nodes[x].kids)
                best = std::max(best, h[c]);
            h[x] = best + 1;
        }
        return h[t];
    }

    auto Work::swap_payload(int x, int y) -> void
    {
        auto & p = nodes[x];
        auto & q = nodes[y];
        std::swap(p.kind, q.kind);
        std::swap(p.title, q.title);
        std::swap(p.labels, q.labels);
        std::swap(p.a, q.a);
        std::swap(p.b, q.b);
        std::swap(p.origin, q.origin);
        touch(x);
        touch(y);
    }

    auto Work::live_size() const -> int
    {
        return int(postorder().size());
    }
}
