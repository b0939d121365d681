#include <fw/graph.hh>

#include <algorithm>
#include <sstream>

using std::string;
using std::vector;

namespace fw
{
    auto labels_of(LabelSet s) -> vector<Label>
    {
        vector<Label> result;
        for (Label i = 1; i <= max_labels; ++i)
            if (has_label(s, i))
                result.push_back(i);
        return result;
    }

    auto label_set(const vector<Label> & labels) -> LabelSet
    {
        LabelSet s = 0;
        for (auto l : labels)
            s |= bit(l);
        return s;
    }

    auto make_edge(const string & a, const string & b) -> Edge
    {
        return a < b ? Edge{a, b} : Edge{b, a};
    }

    auto LabeledGraph::add_vertex(const string & title, LabelSet labels) -> void
    {
        vertices[title] = labels;
    }

    auto LabeledGraph::add_edge(const string & a, const string & b) -> bool
    {
        if (a == b)
            return false;
        return edges.insert(make_edge(a, b)).second;
    }

    auto LabeledGraph::has_edge(const string & a, const string & b) const -> bool
    {
        return edges.count(make_edge(a, b)) != 0;
    }

    auto LabeledGraph::has_vertex(const string & title) const -> bool
    {
        return vertices.count(title) != 0;
    }

    auto LabeledGraph::neighbours(const string & title) const -> std::set<string>
    {
        std::set<string> result;
        for (auto & [a, b] : edges) {
            if (a == title)
                result.insert(b);
            else if (b == title)
                result.insert(a);
        }
        return result;
    }

    auto graphs_equal(const LabeledGraph & g1, const LabeledGraph & g2) -> bool
    {
        return g1.vertices == g2.vertices && g1.edges == g2.edges;
    }

    auto same_shape(const LabeledGraph & g1, const LabeledGraph & g2) -> bool
    {
        if (g1.vertices.size() != g2.vertices.size() || g1.edges != g2.edges)
            return false;
        return std::equal(g1.vertices.begin(), g1.vertices.end(), g2.vertices.begin(),
            [](auto & x, auto & y) { return x.first == y.first; });
    }

    auto label_class(const LabeledGraph & g, Label i) -> std::set<string>
    {
        if (i < 1 || i > g.k)
            throw std::out_of_range("label " + std::to_string(i) + " outside 1.." + std::to_string(g.k));
        std::set<string> result;
        for (auto & [t, s] : g.vertices)
            if (has_label(s, i))
                result.insert(t);
        return result;
    }

    auto class_size(const LabeledGraph & g, Label i) -> int
    {
        int c = 0;
        for (auto & [t, s] : g.vertices)
            if (has_label(s, i))
                ++c;
        return c;
    }

    auto write_graph(const LabeledGraph & g) -> string
    {
        vector<string> lines;
        for (auto & [t, s] : g.vertices) {
            string line = "v " + t + " ";
            auto ls = labels_of(s);
            if (ls.empty())
                line += "-";
            for (unsigned i = 0; i < ls.size(); ++i)
                line += (i ? "," : "") + std::to_string(ls[i]);
            lines.push_back(line);
        }
        for (auto & [a, b] : g.edges)
            lines.push_back("e " + a + " " + b);
        std::sort(lines.begin(), lines.end());

        string out = "k " + std::to_string(g.k) + "\n";
        for (auto & l : lines)
            out += l + "\n";
        return out;
    }

    namespace
    {
        auto valid_title(const string & t) -> bool
        {
            if (t.empty())
                return false;
            return std::all_of(t.begin(), t.end(), [](char c) {
                return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
            });
        }
    }

    auto read_graph(const string & text) -> LabeledGraph
    {
        LabeledGraph g;
        bool seen_k = false;
        vector<Edge> pending;
        std::istringstream in(text);
        string line;
        int lineno = 0;
        auto fail = [&](const string & why) {
            throw DomainError("graph line " + std::to_string(lineno) + ": " + why);
        };

        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            string tag;
            if (! (ls >> tag) || tag[0] == '#')
                continue;
            if (tag == "k") {
                if (! (ls >> g.k) || g.k < 1 || g.k > max_labels)
                    fail("bad label count");
                seen_k = true;
            }
            else if (tag == "v") {
                string title, labels;
                if (! (ls >> title >> labels) || ! valid_title(title))
                    fail("bad vertex record");
                LabelSet s = 0;
                if (labels != "-") {
                    std::istringstream parts(labels);
                    string part;
                    while (std::getline(parts, part, ',')) {
                        int l = 0;
                        try {
                            l = std::stoi(part);
                        }
                        catch (const std::exception &) {
                            fail("bad label '" + part + "'");
                        }
                        if (l < 1 || l > max_labels)
                            fail("label out of range");
                        s |= bit(l);
                    }
                }
                if (g.has_vertex(title))
                    fail("duplicate vertex " + title);
                g.add_vertex(title, s);
            }
            else if (tag == "e") {
                string a, b;
                if (! (ls >> a >> b))
                    fail("bad edge record");
                if (a == b)
                    fail("self-loop on " + a);
                pending.push_back(make_edge(a, b));
            }
            else
                fail("unknown record '" + tag + "'");
        }

        if (! seen_k)
            throw DomainError("graph: missing k header");
        for (auto & [t, s] : g.vertices)
            if (g.k < max_labels && (s >> g.k))
                throw DomainError("graph: vertex " + t + " uses a label above k");
        for (auto & [a, b] : pending) {
            if (! g.has_vertex(a) || ! g.has_vertex(b))
                throw DomainError("graph: edge " + a + " " + b + " has an unknown endpoint");
            if (! g.add_edge(a, b))
                throw DomainError("graph: duplicate edge " + a + " " + b);
        }
        return g;
    }

    auto is_connected(const LabeledGraph & g) -> bool
    {
        if (g.vertices.empty())
            return true;
        auto ig = index_graph(g);
        vector<char> seen(ig.titles.size(), 0);
        vector<int> stack{0};
        seen[0] = 1;
        unsigned reached = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : ig.adj[v])
                if (! seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == ig.titles.size();
    }

    auto index_graph(const LabeledGraph & g) -> IndexedGraph
    {
        IndexedGraph ig;
        std::map<string, int> index;
        for (auto & [t, s] : g.vertices) {
            index[t] = int(ig.titles.size());
            ig.titles.push_back(t);
        }
        ig.adj.resize(ig.titles.size());
        ig.adj_mask.assign(ig.titles.size(), 0);
        for (auto & [a, b] : g.edges) {
            int x = index.at(a), y = index.at(b);
            ig.adj[x].push_back(y);
            ig.adj[y].push_back(x);
            if (x < 64 && y < 64) {
                ig.adj_mask[x] |= std::uint64_t{1} << y;
                ig.adj_mask[y] |= std::uint64_t{1} << x;
            }
            ig.edges.emplace_back(x, y);
        }
        return ig;
    }
}
