#ifndef FW_REPSETS_HH
#define FW_REPSETS_HH

#include <fw/graph.hh>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fw
{
    // Subgraph whose components are paths. Maximal packings span the host.
    struct PathPacking
    {
        std::set<std::string> vertices;
        std::set<Edge> edges;

        auto operator<=>(const PathPacking &) const = default;
    };

    // Multigraph on labels 1..k; loops count twice towards the degree.
    struct AuxMultigraph
    {
        int k = 0;
        std::map<std::pair<Label, Label>, int> edges; // key has first <= second

        auto add(Label a, Label b, int times = 1) -> void;
        auto degree(Label i) const -> int;
        auto edge_count() const -> int;
        // Label classes of connected components, isolated labels as singletons.
        auto components() const -> std::vector<LabelSet>;
        auto dump() const -> std::string;
    };

    auto is_path_packing(const PathPacking & p) -> bool;

    // Throws std::logic_error when p is not a path packing inside g.
    auto aux_multigraph(const LabeledGraph & g, const PathPacking & p) -> AuxMultigraph;

    auto packings_equivalent(const PathPacking & p1, const PathPacking & p2, const LabeledGraph & g) -> bool;

    // One representative per equivalence class, the one with the least edge set.
    auto reduce_family(const std::vector<PathPacking> & family, const LabeledGraph & g) -> std::vector<PathPacking>;

    // n^k * 2^(k(log2 k + 1)), the size guarantee after reduction.
    auto reduce_bound(int n, int k) -> double;

    constexpr int rb_edge_limit = 12;

    // Closed walk using every edge once with alternating colours. Exhaustive;
    // refuses inputs with more than rb_edge_limit edges.
    auto rb_trail_exists(const AuxMultigraph & red, const AuxMultigraph & blue) -> bool;

    // Union of two packings over glueable edge-disjoint hosts, if still a packing.
    auto glue_packings(const PathPacking & p1, const PathPacking & p2) -> std::optional<PathPacking>;

    // Every maximal packing of g. Exponential, for tests and small hosts.
    auto all_maximal_packings(const LabeledGraph & g) -> std::vector<PathPacking>;
}

#endif
