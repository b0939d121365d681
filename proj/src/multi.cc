#include "rules.hh"

#include <algorithm>
#include <bit>
#include <map>

using std::string;
using std::to_string;
using std::vector;

namespace fw
{
    auto multi_size_bound(int k, int n) -> long long
    {
        return (long long)multi_size_constant * k * k * n;
    }

    auto as_multi(const Expression & e) -> Expression
    {
        if (e.dialect == Dialect::Multi)
            return e;
        Expression m = e;
        m.dialect = Dialect::Multi;
        for (int id : postorder(m)) {
            auto & n = m.nodes[id];
            if (n.kind == Kind::Relabel) {
                n.kind = Kind::RelabelSet;
                n.labels = bit(n.b);
                n.b = 0;
            }
            else if (n.kind == Kind::Fuse || n.kind == Kind::Glue)
                throw DomainError("cannot read a " + kind_name(n.kind) + " node as multi");
        }
        return m;
    }

    namespace
    {
        // Fuse site of label l at node x: the first ancestor fuse whose label
        // is what l has become by then. Writes the tracked label to `at`.
        auto fuse_site(const Work & w, int x, Label l, Label * at = nullptr) -> int
        {
            for (int y = w.parent(x); y >= 0; y = w.parent(y)) {
                auto & n = w.nodes[y];
                if (n.kind == Kind::Fuse && n.a == l) {
                    if (at)
                        *at = l;
                    return y;
                }
                if (n.kind == Kind::Relabel && n.a == l)
                    l = n.b;
            }
            return -1;
        }

        auto tracked_label(const Work & w, int x, Label l, int until) -> Label
        {
            for (int y = w.parent(x); y >= 0 && y != until; y = w.parent(y))
                if (w.nodes[y].kind == Kind::Relabel && w.nodes[y].a == l)
                    l = w.nodes[y].b;
            return l;
        }

        struct Builder
        {
            Expression out;

            auto add(ExprNode n) -> int
            {
                out.nodes.push_back(std::move(n));
                return out.size() - 1;
            }

            auto unary(Kind kind, int kid, Label a, Label b = 0, LabelSet labels = 0) -> int
            {
                ExprNode n;
                n.kind = kind;
                n.a = a;
                n.b = b;
                n.labels = labels;
                n.kids = {kid};
                return add(std::move(n));
            }
        };
    }

    auto fuse_to_multi(const Expression & e) -> Expression
    {
        if (e.dialect != Dialect::Fuse && e.dialect != Dialect::Clique)
            throw DomainError("fuse_to_multi expects a fuse or clique expression");
        if (e.k + 1 > max_labels)
            throw DomainError("too many labels");
        auto report = validate(e);
        if (! report.ok())
            throw DomainError("invalid expression: " + report.violations[0].message);

        Work w(e);
        w.suppress_useless();

        // A fuse is skippable when an ancestor fuse takes the same class again.
        vector<int> skip;
        for (int x : w.postorder())
            if (w.nodes[x].kind == Kind::Fuse && fuse_site(w, x, w.nodes[x].a) >= 0)
                skip.push_back(x);
        for (int x : skip)
            w.suppress(x);
        w.suppress_useless();

        for (int t : w.postorder()) {
            if (w.nodes[t].kind != Kind::Introduce)
                continue;
            while (w.parent(t) >= 0 && w.nodes[w.parent(t)].kind == Kind::Relabel)
                apply_relabel_introduce(w, w.parent(t));
        }

        const int k = e.k;
        const Label star = k + 1;
        auto order = w.postorder();

        // Participants and hats per fuse site.
        std::map<int, string> site_title;
        std::map<int, LabelSet> hats;
        for (int x : order) {
            auto & n = w.nodes[x];
            if (n.kind == Kind::Introduce) {
                int s = fuse_site(w, x, Label(std::countr_zero(n.labels)) + 1);
                if (s >= 0 && (! site_title.count(s) || n.title < site_title[s]))
                    site_title[s] = n.title;
            }
            else if (n.kind == Kind::Join) {
                int si = fuse_site(w, x, n.a), sj = fuse_site(w, x, n.b);
                if (si < 0 || sj < 0 || si == sj)
                    continue;
                // the lower site carries the hat of the other class
                if (w.is_ancestor(si, sj))
                    hats[sj] |= bit(tracked_label(w, x, n.a, sj));
                else
                    hats[si] |= bit(tracked_label(w, x, n.b, si));
            }
        }

        Builder b;
        b.out.dialect = Dialect::Multi;
        b.out.k = k + 1;
        vector<int> built(w.nodes.size(), -1);
        for (int x : order) {
            auto & n = w.nodes[x];
            auto kid = [&](int q) { return built[n.kids[q]]; };
            switch (n.kind) {
                case Kind::Introduce: {
                    Label l = Label(std::countr_zero(n.labels)) + 1;
                    if (fuse_site(w, x, l) >= 0)
                        break;
                    ExprNode leaf;
                    leaf.title = n.title;
                    leaf.labels = n.labels;
                    built[x] = b.add(std::move(leaf));
                    break;
                }
                case Kind::Union: {
                    int l = kid(0), r = kid(1);
                    if (l < 0 || r < 0)
                        built[x] = l < 0 ? r : l;
                    else {
                        ExprNode u;
                        u.kind = Kind::Union;
                        u.kids = {l, r};
                        built[x] = b.add(std::move(u));
                    }
                    break;
                }
                case Kind::Join: {
                    int c = kid(0);
                    if (c < 0)
                        break;
                    bool fi = fuse_site(w, x, n.a) >= 0, fj = fuse_site(w, x, n.b) >= 0;
                    if (! fi && ! fj)
                        built[x] = b.unary(Kind::Join, c, n.a, n.b);
                    else if (fi && fj)
                        built[x] = c;
                    else {
                        Label i = fi ? n.a : n.b, j = fi ? n.b : n.a;
                        built[x] = b.unary(Kind::RelabelSet, c, j, 0, bit(j) | bit(i));
                    }
                    break;
                }
                case Kind::Relabel: {
                    int c = kid(0);
                    if (c >= 0)
                        built[x] = b.unary(Kind::RelabelSet, c, n.a, 0, bit(n.b));
                    break;
                }
                case Kind::Fuse: {
                    Label p = n.a;
                    ExprNode y;
                    y.title = site_title.at(x);
                    y.labels = hats[x] | bit(star);
                    int top = b.add(std::move(y));
                    if (int c = kid(0); c >= 0) {
                        ExprNode u;
                        u.kind = Kind::Union;
                        u.kids = {c, top};
                        top = b.add(std::move(u));
                    }
                    top = b.unary(Kind::Join, top, p, star);
                    top = b.unary(Kind::RelabelSet, top, p, 0, 0);
                    top = b.unary(Kind::RelabelSet, top, star, 0, bit(p));
                    built[x] = top;
                    break;
                }
                default:
                    throw DomainError("unexpected " + kind_name(n.kind) + " node");
            }
        }
        b.out.root = built[w.root];
        if (b.out.root < 0)
            throw std::logic_error("fuse_to_multi produced an empty expression");

        Work r(b.out);
        r.suppress_useless();
        return r.to_expression();
    }

    namespace
    {
        auto is_relabel(const Work & w, int t) -> bool
        {
            return w.nodes[t].kind == Kind::RelabelSet;
        }

        auto to_set_relabels(Work & w) -> void
        {
            for (int t : w.postorder())
                if (w.nodes[t].kind == Kind::Relabel) {
                    auto & n = w.nodes[t];
                    n.kind = Kind::RelabelSet;
                    n.labels = bit(n.b);
                    n.b = 0;
                    w.touch(t);
                }
        }

        // Labels whose class after relabel r contains class `x` of its child.
        auto preimage(Label x, Label i, LabelSet s) -> LabelSet
        {
            LabelSet p = 0;
            if (x != i)
                p |= bit(x);
            if (has_label(s, x))
                p |= bit(i);
            return p;
        }

        auto push_joins(Work & w) -> void
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int t : w.postorder()) {
                    if (w.nodes[t].kind != Kind::Join || ! is_relabel(w, w.child(t)))
                        continue;
                    int c = w.child(t);
                    if (w.useless(t))
                        w.suppress(t);
                    else if (w.useless(c))
                        w.suppress(c);
                    else {
                        Label i = w.nodes[c].a;
                        LabelSet s = w.nodes[c].labels;
                        auto pa = labels_of(preimage(w.nodes[t].a, i, s));
                        auto pb = labels_of(preimage(w.nodes[t].b, i, s));
                        int anchor = w.child(c);
                        for (auto p : pa)
                            for (auto q : pb) {
                                if (p == q)
                                    continue; // only reachable through an empty class
                                int j = w.make_unary(Kind::Join, p, q);
                                w.nodes[j].origin = w.nodes[t].origin;
                                w.insert_above(anchor, j);
                                anchor = j;
                            }
                        w.suppress(t);
                    }
                    w.suppress_useless();
                    changed = true;
                    break;
                }
            }
        }

        // One set relabel per moved class, ordered so no relabel sees labels
        // written by an earlier one. Cycles go through a label that is free
        // before and after the run. Returns false if there is none.
        auto plan_set_relabels(std::map<Label, LabelSet> f, int k, vector<std::pair<Label, LabelSet>> & out) -> bool
        {
            out.clear();
            LabelSet image = 0, present = 0;
            for (auto & [l, s] : f) {
                image |= s;
                present |= bit(l);
            }
            std::erase_if(f, [](auto & kv) { return kv.second == bit(kv.first); });

            while (! f.empty()) {
                int ready = 0;
                for (auto & [l, s] : f) {
                    bool waits = false;
                    for (auto & [m, sm] : f)
                        waits = waits || (m != l && has_label(s, m));
                    if (! waits) {
                        ready = l;
                        break;
                    }
                }
                if (ready) {
                    out.push_back({Label(ready), f[ready]});
                    f.erase(ready);
                    continue;
                }
                Label spare = 0;
                for (Label l = 1; l <= k && ! spare; ++l)
                    if (! has_label(present | image, l))
                        spare = l;
                if (! spare)
                    return false;
                auto c = f.begin()->first;
                out.push_back({c, bit(spare)});
                present |= bit(spare);
                f[spare] = f[c];
                f.erase(c);
            }
            return true;
        }

        auto compress_runs(Work & w) -> void
        {
            vector<vector<int>> segments;
            for (int t : w.postorder()) {
                if (w.is_unary(t))
                    continue;
                vector<int> seg;
                for (int x = w.parent(t); x >= 0 && w.is_unary(x); x = w.parent(x)) {
                    if (is_relabel(w, x))
                        seg.push_back(x);
                    else if (! seg.empty()) {
                        segments.push_back(seg);
                        seg.clear();
                    }
                }
                if (seg.size() >= 2)
                    segments.push_back(seg);
            }
            for (auto & seg : segments) {
                if (seg.size() < 2)
                    continue;
                int bottom = w.child(seg.front());
                std::map<Label, LabelSet> f;
                {
                    const auto & g = w.graph(bottom);
                    for (Label l = 1; l <= w.k; ++l)
                        if (class_size(g, l) > 0)
                            f[l] = bit(l);
                }
                for (auto & [l, s] : f)
                    for (int x : seg) {
                        auto & r = w.nodes[x];
                        if (has_label(s, r.a))
                            s = (s & ~bit(r.a)) | r.labels;
                    }
                vector<std::pair<Label, LabelSet>> plan;
                if (! plan_set_relabels(f, w.k, plan) || plan.size() >= seg.size())
                    continue;
                for (int x : seg)
                    w.suppress(x);
                int anchor = bottom;
                for (auto [a, s] : plan) {
                    int x = w.make_unary(Kind::RelabelSet, a, 0, s);
                    w.insert_above(anchor, x);
                    anchor = x;
                }
            }
        }

        auto decompose(Work & w) -> void
        {
            for (int t : w.postorder()) {
                auto & n = w.nodes[t];
                if (n.kind == Kind::RelabelSet) {
                    Label i = n.a;
                    LabelSet s = n.labels;
                    LabelSet rest = s & ~bit(i);
                    bool keeps = has_label(s, i);
                    if (s == 0 || (keeps && std::popcount(rest) == 1))
                        continue;
                    if (s == bit(i)) {
                        w.suppress(t);
                        continue;
                    }
                    vector<LabelSet> steps;
                    for (auto l : labels_of(rest))
                        steps.push_back(bit(i) | bit(l));
                    if (! keeps)
                        steps.push_back(0);
                    // the last step stays in t, the others go below it
                    int anchor = w.child(t);
                    for (std::size_t q = 0; q + 1 < steps.size(); ++q) {
                        int x = w.make_unary(Kind::RelabelSet, i, 0, steps[q]);
                        w.nodes[x].origin = w.nodes[t].origin;
                        w.insert_above(anchor, x);
                        anchor = x;
                    }
                    w.nodes[t].labels = steps.back();
                    w.touch(t);
                }
                else if (n.kind == Kind::Introduce && std::popcount(n.labels) > 1) {
                    auto ls = labels_of(n.labels);
                    Label s1 = ls[0];
                    w.nodes[t].labels = bit(s1);
                    w.touch(t);
                    int anchor = t;
                    for (std::size_t q = 1; q < ls.size(); ++q) {
                        int x = w.make_unary(Kind::RelabelSet, s1, 0, bit(s1) | bit(ls[q]));
                        w.nodes[x].origin = w.nodes[t].origin;
                        w.insert_above(anchor, x);
                        anchor = x;
                    }
                }
            }
        }
    }

    auto normalize_multi(const Expression & e) -> Expression
    {
        auto m = as_multi(e);
        auto report = validate(m);
        if (! report.ok())
            throw DomainError("invalid expression: " + report.violations[0].message);
        if (check_normalized_multi(m).empty())
            return m;
        Work w(m);
        to_set_relabels(w);
        w.suppress_useless();
        push_joins(w);
        compress_runs(w);
        w.suppress_useless();
        decompose(w);
        w.suppress_useless();
        return w.to_expression();
    }

    auto check_normalized_multi(const Expression & e) -> string
    {
        if (e.dialect != Dialect::Multi)
            return "not a multi expression";
        auto g = evaluate_all(e);
        int n = 0;
        for (int t : postorder(e)) {
            auto & x = e.nodes[t];
            switch (x.kind) {
                case Kind::Introduce:
                    ++n;
                    if (std::popcount(x.labels) != 1)
                        return "introduce node " + to_string(t) + " has " + to_string(std::popcount(x.labels)) + " labels";
                    break;
                case Kind::RelabelSet: {
                    LabelSet rest = x.labels & ~bit(x.a);
                    if (x.labels != 0 && ! (has_label(x.labels, x.a) && std::popcount(rest) == 1))
                        return "relabel node " + to_string(t) + " is neither a removal nor an addition of one label";
                    break;
                }
                case Kind::Relabel:
                    return "single-target relabel node " + to_string(t);
                case Kind::Join: {
                    auto & c = g[x.kids[0]];
                    if (class_size(c, x.a) == 0 || class_size(c, x.b) == 0)
                        return "join node " + to_string(t) + " has an empty class";
                    break;
                }
                default:
                    break;
            }
        }
        if (e.size() > multi_size_bound(e.k, n))
            return "expression has " + to_string(e.size()) + " nodes, above the bound " + to_string(multi_size_bound(e.k, n));
        return "";
    }
}
