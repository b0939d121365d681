#ifndef FW_EXPR_HH
#define FW_EXPR_HH

#include <fw/graph.hh>

#include <string>
#include <vector>

namespace fw
{
    enum class Dialect
    {
        Clique,
        Fuse,
        Glue,
        Multi
    };

    enum class Kind
    {
        Introduce,
        Union,
        Join,
        Relabel,    // single target, i -> j
        RelabelSet, // i -> S, multi dialect only
        Fuse,
        Glue
    };

    auto dialect_name(Dialect d) -> std::string;
    auto parse_dialect(const std::string & s) -> Dialect;
    auto kind_name(Kind k) -> std::string;
    auto allowed(Dialect d, Kind k) -> bool;
    auto arity(Kind k) -> int;

    // Payload use per kind:
    //   Introduce   title, labels
    //   Join        a, b
    //   Relabel     a -> b
    //   RelabelSet  a -> labels
    //   Fuse        a
    struct ExprNode
    {
        Kind kind = Kind::Introduce;
        std::string title;
        LabelSet labels = 0;
        Label a = 0, b = 0;
        std::vector<int> kids;
        int origin = -1; // id before the last pipeline stage, debugging only
    };

    // Nodes live in an arena; ids are indices, children come before parents.
    struct Expression
    {
        Dialect dialect = Dialect::Clique;
        int k = 1;
        std::vector<ExprNode> nodes;
        int root = -1;

        auto size() const -> int { return int(nodes.size()); }
        auto node(int id) const -> const ExprNode & { return nodes.at(id); }
    };

    class ParseError : public DomainError
    {
        public:
            ParseError(const std::string & msg, int line, int column);
            int line, column;
    };

    // k = 0 means: infer from the largest label mentioned.
    auto parse_expression(const std::string & text, Dialect d, int k = 0) -> Expression;
    auto serialize_expression(const Expression & e) -> std::string;

    // Same shape and payloads, ignoring node ids and origins.
    auto structurally_equal(const Expression & a, const Expression & b) -> bool;

    struct Violation
    {
        int node;
        std::string rule;
        std::string message;
    };

    struct ValidationReport
    {
        std::vector<Violation> violations;
        auto ok() const -> bool { return violations.empty(); }
    };

    auto validate(const Expression & e) -> ValidationReport;

    // Throws DomainError naming the first violation if validate() is not empty.
    auto evaluate(const Expression & e) -> LabeledGraph;

    // Graph at every node, indexed by node id. No validation beyond what
    // evaluation itself needs.
    auto evaluate_all(const Expression & e) -> std::vector<LabeledGraph>;

    // Single-step semantics, shared by evaluation and the rewriting code.
    auto apply_introduce(const ExprNode & n, int k) -> LabeledGraph;
    auto apply_unary(const ExprNode & n, LabeledGraph g) -> LabeledGraph;
    auto apply_binary(const ExprNode & n, const LabeledGraph & g1, const LabeledGraph & g2) -> LabeledGraph;

    // Useless nodes: join creating no edge, fuse over fewer than two vertices,
    // identity relabel, relabel of an empty class. `child` is the graph below n.
    auto is_useless(const ExprNode & n, const LabeledGraph & child) -> bool;

    // Glueability of two operands; empty string when fine.
    auto glue_problem(const LabeledGraph & g1, const LabeledGraph & g2) -> std::string;

    auto count_kind(const Expression & e, Kind k) -> int;
    auto labels_used(const Expression & e) -> LabelSet;

    // Post-order list of node ids reachable from the root.
    auto postorder(const Expression & e) -> std::vector<int>;

    // Sub-expression rooted at a node, renumbered.
    auto subexpression(const Expression & e, int id) -> Expression;
}

#endif
