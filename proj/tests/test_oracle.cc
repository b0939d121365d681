#include "shapes.hh"

#include <fw/oracle.hh>

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace fw;

namespace
{
    auto petersen(bool drop_one) -> LabeledGraph
    {
        LabeledGraph g;
        for (int i = 0; i < 10; ++i)
            g.add_vertex("p" + std::to_string(i), bit(1));
        for (int i = 0; i < 5; ++i) {
            g.add_edge("p" + std::to_string(i), "p" + std::to_string((i + 1) % 5));
            g.add_edge("p" + std::to_string(i), "p" + std::to_string(i + 5));
            g.add_edge("p" + std::to_string(i + 5), "p" + std::to_string(5 + (i + 2) % 5));
        }
        if (drop_one) {
            g.vertices.erase("p0");
            for (auto it = g.edges.begin(); it != g.edges.end();)
                it = it->first == "p0" || it->second == "p0" ? g.edges.erase(it) : std::next(it);
        }
        return g;
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
}

TEST_CASE("oracle spot values")
{
    auto c5 = evaluate(shapes::clique(shapes::c5));
    CHECK(brute_max_cut(c5) == 4);
    CHECK(brute_chromatic(c5) == 3);
    CHECK(brute_ds(c5) == 2);
    CHECK(brute_cvc(c5) == 4);
    CHECK(brute_cds(c5) == 3);
    CHECK(brute_hamiltonian(c5));
    CHECK(brute_q_colorings(c5, 3) == 30);

    auto k4 = evaluate(shapes::clique(shapes::k4));
    CHECK(brute_chromatic(k4) == 4);
    CHECK(brute_max_cut(k4) == 4);
    CHECK(brute_eds(k4) == 2);

    auto p4 = evaluate(shapes::clique(shapes::p4));
    CHECK(brute_eds(p4) == 1);
    CHECK(brute_cds(p4) == 2);
    CHECK(brute_cvc(p4) == 2);
    CHECK_FALSE(brute_hamiltonian(p4));

    CHECK(brute_q_colorings(evaluate(shapes::clique(shapes::k3)), 3) == 6);
    CHECK(brute_q_colorings(evaluate(shapes::clique(shapes::p3)), 2) == 2);
    CHECK(brute_ds(evaluate(shapes::clique(shapes::k14))) == 1);
    CHECK_FALSE(brute_hamiltonian(evaluate(shapes::clique(shapes::k13))));
    CHECK(brute_eds(evaluate(shapes::clique(shapes::edgeless))) == 0);
    CHECK(brute_cvc(evaluate(shapes::clique(shapes::edgeless))) == 0);
    CHECK(brute_chromatic(LabeledGraph{}) == 0);

    // the Petersen graph is not Hamiltonian, but every vertex-deleted subgraph is
    CHECK_FALSE(brute_hamiltonian(petersen(false)));
    CHECK(brute_hamiltonian(petersen(true)));
}

TEST_CASE("brute_force dispatch and the size guard")
{
    auto k3 = evaluate(shapes::clique(shapes::k3));
    CHECK(brute_force(Problem::MaxCut, k3) == 2);
    CHECK(brute_force(Problem::Hc, k3) == 1);
    OracleParams q3;
    q3.q = 3;
    CHECK(brute_force(Problem::QColor, k3, q3) == 6);
    CHECK_THROWS_AS(brute_force(Problem::QColor, k3), DomainError);

    Rng rng(1);
    auto big = random_graph(rng, oracle_vertex_limit + 1, 0.3, 1);
    CHECK_THROWS_AS(brute_force(Problem::Ds, big), DomainError);
    CHECK_THROWS_AS(brute_cds(evaluate(shapes::clique(shapes::two_edges))), DomainError);

    for (auto p : {Problem::MaxCut, Problem::Eds, Problem::Hc, Problem::Ds, Problem::QColor, Problem::Chromatic,
             Problem::Cvc, Problem::Cds})
        CHECK(parse_problem(problem_name(p)) == p);
}

TEST_CASE("count_consistent_cuts_mod2")
{
    LabeledGraph p2;
    p2.add_vertex("a", bit(1));
    p2.add_vertex("b", bit(1));
    p2.add_edge("a", "b");
    CutCountContext ctx;
    ctx.pinned = "a";
    ctx.weight = {{"a", 3}, {"b", 1}};
    for (int w = 0; w <= 8; ++w)
        CHECK(count_consistent_cuts_mod2(p2, ctx, CutConstraint::Dominating, 1, w) == (w == 3));

    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        auto g = random_graph(rng, int(rng.uniform(1, 6)), 0.5, 1);
        CutCountContext c;
        c.weight = sample_weights(rng, g);
        c.pinned = g.vertices.begin()->first;
        for (int w = 0; w <= 2 * g.size() * g.size(); ++w) {
            CHECK(count_consistent_cuts_mod2(g, c, CutConstraint::Dominating, 0, w) == 0);
            CHECK(count_consistent_cuts_mod2(g, c, CutConstraint::VertexCover, 0, w) == 0);
        }
        for (auto & [v, w] : c.weight)
            CHECK((w >= 1 && w <= 2 * g.size()));
    }

    // C4 covers of size 2 through a: only {a, c}, and it splits two ways
    LabeledGraph c4;
    for (auto v : {"a", "b", "c", "d"})
        c4.add_vertex(v, bit(1));
    c4.add_edge("a", "b");
    c4.add_edge("b", "c");
    c4.add_edge("c", "d");
    c4.add_edge("d", "a");
    CutCountContext cc;
    cc.pinned = "a";
    cc.weight = {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}};
    int total = 0;
    for (int w = 0; w <= 32; ++w)
        total += count_consistent_cuts_mod2(c4, cc, CutConstraint::VertexCover, 2, w);
    CHECK(total == 0);
}

TEST_CASE("generator: golden expression")
{
    GenConfig c;
    c.dialect = Dialect::Fuse;
    c.k = 3;
    c.budget = 20;
    c.seed = 7;
    auto text = read_file(std::string(FW_GOLDEN_DIR) + "/gen_fuse_k3_seed7.txt");
    REQUIRE(! text.empty());
    CHECK(serialize_expression(gen_expression(c)) + "\n" == text);
    CHECK(serialize_expression(gen_expression(c)) == serialize_expression(gen_expression(c)));
}

TEST_CASE("generator: small budgets and weights")
{
    for (auto d : {Dialect::Clique, Dialect::Fuse, Dialect::Glue, Dialect::Multi}) {
        GenConfig c;
        c.dialect = d;
        c.budget = 1;
        auto e = gen_expression(c);
        CHECK(e.size() == 1);
        CHECK(e.node(e.root).kind == Kind::Introduce);
    }

    for (int s = 0; s < 60; ++s) {
        GenConfig c;
        c.dialect = Dialect::Multi;
        c.seed = s;
        c.budget = 30;
        c.weights.relabel_empty = 0;
        c.weights.relabel = 4;
        auto g = evaluate(gen_expression(c));
        for (auto & [v, labels] : g.vertices)
            CHECK(labels != 0);
    }
}

TEST_CASE("generator: valid output covering every node kind")
{
    for (auto d : {Dialect::Clique, Dialect::Fuse, Dialect::Glue, Dialect::Multi}) {
        std::map<Kind, int> seen;
        for (int s = 0; s < 80; ++s) {
            GenConfig c;
            c.dialect = d;
            c.seed = s;
            c.k = 1 + s % 4;
            c.budget = 1 + s % 40;
            auto e = gen_expression(c);
            CHECK(e.dialect == d);
            CHECK(e.size() <= c.budget);
            CHECK(validate(e).ok());
            for (auto & n : e.nodes)
                ++seen[n.kind];
        }
        for (auto k : {Kind::Introduce, Kind::Union, Kind::Join, Kind::Relabel, Kind::RelabelSet, Kind::Fuse, Kind::Glue})
            if (allowed(d, k))
                CHECK_MESSAGE(seen[k] > 0, dialect_name(d) << " never emits " << kind_name(k));
    }
}

TEST_CASE("random_graph is reproducible")
{
    Rng a(99), b(99);
    auto g1 = random_graph(a, 8, 0.5, 3);
    auto g2 = random_graph(b, 8, 0.5, 3);
    CHECK(graphs_equal(g1, g2));
    CHECK(g1.size() == 8);
    CHECK(g1.has_vertex("v0"));
    CHECK(g1.has_vertex("v7"));
}
