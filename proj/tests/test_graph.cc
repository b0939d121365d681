#include <fw/graph.hh>
#include <fw/oracle.hh>

#include <doctest.h>

using namespace fw;

TEST_CASE("graphs_equal compares titles, labels and edges")
{
    LabeledGraph a1, a2;
    a1.add_vertex("a", bit(1));
    a2.add_vertex("a", bit(2));
    a1.k = a2.k = 2;
    CHECK(graphs_equal(a1, a1));
    CHECK_FALSE(graphs_equal(a1, a2));

    LabeledGraph tri, path;
    for (auto * g : {&tri, &path})
        for (auto t : {"a", "b", "c"})
            g->add_vertex(t, bit(1));
    tri.add_edge("a", "b");
    tri.add_edge("b", "c");
    tri.add_edge("a", "c");
    path.add_edge("a", "b");
    path.add_edge("b", "c");
    CHECK_FALSE(graphs_equal(tri, path));
    CHECK(same_shape(path, path));
}

TEST_CASE("label_class")
{
    LabeledGraph empty;
    CHECK(label_class(empty, 1).empty());

    LabeledGraph g;
    g.k = 2;
    g.add_vertex("a", bit(1) | bit(2));
    g.add_vertex("b", bit(2));
    CHECK(label_class(g, 2) == std::set<std::string>{"a", "b"});

    LabeledGraph h;
    h.k = 2;
    h.add_vertex("a", bit(1));
    h.add_vertex("b", bit(1));
    CHECK(label_class(h, 2).empty());
    CHECK_THROWS_AS(label_class(h, 3), std::out_of_range);
    CHECK_THROWS_AS(label_class(h, 0), std::out_of_range);
}

TEST_CASE("edges are unordered, without loops or duplicates")
{
    LabeledGraph g;
    g.add_vertex("a", bit(1));
    g.add_vertex("b", bit(1));
    CHECK(g.add_edge("b", "a"));
    CHECK_FALSE(g.add_edge("a", "b"));
    CHECK(g.has_edge("a", "b"));
    CHECK(g.edges.size() == 1);
    CHECK(make_edge("b", "a") == make_edge("a", "b"));
}

TEST_CASE("graph text format round trips and sorts its lines")
{
    LabeledGraph g;
    g.k = 3;
    g.add_vertex("b", bit(2));
    g.add_vertex("a", bit(1) | bit(3));
    g.add_vertex("z", 0);
    g.add_edge("b", "a");
    auto text = write_graph(g);
    CHECK(text == "k 3\ne a b\nv a 1,3\nv b 2\nv z -\n");
    CHECK(graphs_equal(read_graph(text), g));
    CHECK_THROWS_AS(read_graph("k 2\nv a 3\n"), DomainError);
    CHECK_THROWS_AS(read_graph("k 2\ne a b\n"), DomainError);
}

TEST_CASE("random graphs: classes cover single-label vertices, equality is an equivalence")
{
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        int n = int(rng.uniform(0, 8)), k = int(rng.uniform(1, 4));
        auto g = random_graph(rng, n, 0.4, k);
        int covered = 0;
        for (Label i = 1; i <= k; ++i)
            covered += class_size(g, i);
        CHECK(covered == g.size());
        for (auto & [v, s] : g.vertices)
            CHECK(labels_of(s).size() == 1);

        auto copy = read_graph(write_graph(g));
        auto again = read_graph(write_graph(copy));
        CHECK(graphs_equal(g, copy));
        CHECK(graphs_equal(copy, g));
        CHECK(graphs_equal(copy, again));
        CHECK(graphs_equal(g, again));
    }
}
