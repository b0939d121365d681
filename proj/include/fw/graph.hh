#ifndef FW_GRAPH_HH
#define FW_GRAPH_HH

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fw
{
    using Label = int;

    // Bit i-1 stands for label i. Labels are limited to 1..64.
    using LabelSet = std::uint64_t;

    constexpr int max_labels = 64;

    inline auto bit(Label i) -> LabelSet
    {
        return LabelSet{1} << (i - 1);
    }

    inline auto has_label(LabelSet s, Label i) -> bool
    {
        return (s >> (i - 1)) & 1U;
    }

    auto labels_of(LabelSet s) -> std::vector<Label>;
    auto label_set(const std::vector<Label> & labels) -> LabelSet;

    // Domain errors map to exit code 1 on the command line.
    class DomainError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    using Edge = std::pair<std::string, std::string>;

    auto make_edge(const std::string & a, const std::string & b) -> Edge;

    struct LabeledGraph
    {
        int k = 1;
        std::map<std::string, LabelSet> vertices;
        std::set<Edge> edges;

        auto add_vertex(const std::string & title, LabelSet labels) -> void;
        auto add_edge(const std::string & a, const std::string & b) -> bool;
        auto has_edge(const std::string & a, const std::string & b) const -> bool;
        auto has_vertex(const std::string & title) const -> bool;
        auto neighbours(const std::string & title) const -> std::set<std::string>;
        auto size() const -> int { return int(vertices.size()); }
    };

    auto graphs_equal(const LabeledGraph & g1, const LabeledGraph & g2) -> bool;

    // Throws std::out_of_range for labels outside 1..g.k.
    auto label_class(const LabeledGraph & g, Label i) -> std::set<std::string>;

    auto class_size(const LabeledGraph & g, Label i) -> int;

    auto write_graph(const LabeledGraph & g) -> std::string;
    auto read_graph(const std::string & text) -> LabeledGraph;

    // Same vertex titles and same edges, labels ignored.
    auto same_shape(const LabeledGraph & g1, const LabeledGraph & g2) -> bool;

    auto is_connected(const LabeledGraph & g) -> bool;

    // Plain adjacency view with vertices indexed in title order.
    struct IndexedGraph
    {
        std::vector<std::string> titles;
        std::vector<std::vector<int>> adj;
        std::vector<std::uint64_t> adj_mask;
        std::vector<std::pair<int, int>> edges;
    };

    auto index_graph(const LabeledGraph & g) -> IndexedGraph;
}

#endif
