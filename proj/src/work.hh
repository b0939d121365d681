#ifndef FW_SRC_WORK_HH
#define FW_SRC_WORK_HH

// Mutable tree used by the rewriting pipelines. Not installed.

#include <fw/expr.hh>

#include <optional>
#include <vector>

namespace fw
{
    struct WNode
    {
        Kind kind = Kind::Introduce;
        std::string title;
        LabelSet labels = 0;
        Label a = 0, b = 0;
        std::vector<int> kids;
        int parent = -1;
        bool alive = true;
        int origin = -1;

        auto payload_equal(const WNode & o) const -> bool
        {
            return kind == o.kind && title == o.title && labels == o.labels && a == o.a && b == o.b;
        }
    };

    class Work
    {
        public:
            Dialect dialect;
            int k;
            std::vector<WNode> nodes;
            int root = -1;

            explicit Work(const Expression & e);

            auto to_expression() const -> Expression;

            // Graph produced at t, cached until something below t changes.
            auto graph(int t) -> const LabeledGraph &;
            auto touch(int t) -> void;

            auto child(int t) const -> int { return nodes[t].kids.at(0); }
            auto parent(int t) const -> int { return nodes[t].parent; }
            auto is_unary(int t) const -> bool { return arity(nodes[t].kind) == 1; }
            auto is_binary(int t) const -> bool { return arity(nodes[t].kind) == 2; }

            // New detached node; caller wires it in.
            auto make(WNode n) -> int;
            auto make_unary(Kind kind, Label a, Label b = 0, LabelSet labels = 0) -> int;

            // Put new unary node u directly above t.
            auto insert_above(int t, int u) -> void;

            // Remove unary t, its child takes its place.
            auto suppress(int t) -> void;

            // Make `repl` occupy the position of `old` (old is detached, not killed).
            auto replace(int old, int repl) -> void;

            // Mark a whole subtree dead.
            auto kill(int t) -> void;

            auto useless(int t) -> bool;

            // Suppresses useless nodes everywhere; returns how many.
            auto suppress_useless() -> int;

            auto postorder() const -> std::vector<int>;
            auto subtree(int t) const -> std::vector<int>;
            auto is_ancestor(int anc, int t) const -> bool;

            // Max number of binary nodes on a path from t down to a leaf.
            auto binary_height(int t) const -> int;
            auto height(int t) const -> int;

            // Swap kind and payload of two nodes, keeping tree structure.
            auto swap_payload(int x, int y) -> void;

            auto live_size() const -> int;

        private:
            std::vector<std::optional<LabeledGraph>> _cache;
    };
}

#endif
