#include <fw/oracle.hh>
#include <fw/repsets.hh>
#include <fw/suites.hh>

#include <doctest.h>

#include <cmath>

using namespace fw;

namespace
{
    auto host(int k, std::vector<std::pair<std::string, Label>> vs, std::vector<std::pair<std::string, std::string>> es)
        -> LabeledGraph
    {
        LabeledGraph g;
        g.k = k;
        for (auto & [v, l] : vs)
            g.add_vertex(v, bit(l));
        for (auto & [a, b] : es)
            g.add_edge(a, b);
        return g;
    }

    auto packing(std::vector<std::string> vs, std::vector<std::pair<std::string, std::string>> es) -> PathPacking
    {
        PathPacking p;
        for (auto & v : vs)
            p.vertices.insert(v);
        for (auto & [a, b] : es)
            p.edges.insert(make_edge(a, b));
        return p;
    }

    auto aux_of(int k, std::vector<std::pair<Label, Label>> es) -> AuxMultigraph
    {
        AuxMultigraph m;
        m.k = k;
        for (auto [a, b] : es)
            m.add(a, b);
        return m;
    }

    // number of path components, singletons included
    auto path_count(const PathPacking & p) -> int
    {
        return int(p.vertices.size()) - int(p.edges.size());
    }
}

TEST_CASE("aux_multigraph examples")
{
    auto one = host(3, {{"v", 3}}, {});
    auto a1 = aux_multigraph(one, packing({"v"}, {}));
    CHECK(a1.edges == std::map<std::pair<Label, Label>, int>{{{3, 3}, 1}});
    CHECK(a1.degree(3) == 2);

    auto path = host(2, {{"a", 1}, {"b", 2}, {"c", 1}}, {{"a", "b"}, {"b", "c"}});
    auto a2 = aux_multigraph(path, packing({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
    CHECK(a2.edges == std::map<std::pair<Label, Label>, int>{{{1, 1}, 1}});

    auto two = host(3, {{"a", 1}, {"b", 2}, {"c", 2}, {"d", 3}}, {{"a", "b"}, {"c", "d"}});
    auto a3 = aux_multigraph(two, packing({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
    CHECK(a3.edges == std::map<std::pair<Label, Label>, int>{{{1, 2}, 1}, {{2, 3}, 1}});
    CHECK(a3.components() == std::vector<LabelSet>{bit(1) | bit(2) | bit(3)});

    CHECK_THROWS_AS(aux_multigraph(path, packing({"a", "z"}, {})), std::logic_error);
    auto tri = host(1, {{"a", 1}, {"b", 1}, {"c", 1}}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK_THROWS_AS(aux_multigraph(tri, packing({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})),
        std::logic_error);
}

TEST_CASE("packings_equivalent")
{
    // labelled C4: a(1) b(2) c(1) d(2)
    auto c4 = host(2, {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    auto p = packing({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
    auto q = packing({"a", "b", "c", "d"}, {{"c", "d"}, {"d", "a"}});
    CHECK(packings_equivalent(p, p, c4));
    CHECK(packings_equivalent(p, q, c4));

    // cross-check against degrees plus components on every pair
    auto all = all_maximal_packings(c4);
    for (auto & x : all)
        for (auto & y : all) {
            auto ax = aux_multigraph(c4, x), ay = aux_multigraph(c4, y);
            bool same = ax.components() == ay.components();
            for (Label i = 1; i <= 2; ++i)
                same = same && ax.degree(i) == ay.degree(i);
            CHECK(packings_equivalent(x, y, c4) == same);
        }

    // x(2) - a(1) - y(2): one path vs three singletons, degree at 1 is 0 vs 2
    auto star = host(2, {{"x", 2}, {"a", 1}, {"y", 2}}, {{"x", "a"}, {"a", "y"}});
    auto whole = packing({"x", "a", "y"}, {{"x", "a"}, {"a", "y"}});
    auto bare = packing({"x", "a", "y"}, {});
    CHECK(aux_multigraph(star, whole).degree(1) == 0);
    CHECK(aux_multigraph(star, bare).degree(1) == 2);
    CHECK_FALSE(packings_equivalent(whole, bare, star));
}

TEST_CASE("reduce_family")
{
    auto c4 = host(2, {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    auto p = packing({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
    auto q = packing({"a", "b", "c", "d"}, {{"c", "d"}, {"d", "a"}});
    auto r = reduce_family({q, p}, c4);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == std::min(p, q, [](auto & x, auto & y) { return x.edges < y.edges; }));
    CHECK(reduce_family({}, c4).empty());

    // labelled P4: classes by brute-force grouping
    auto p4 = host(2, {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    auto all = all_maximal_packings(p4);
    CHECK(all.size() == 8); // any subset of the three edges
    std::vector<PathPacking> reps;
    for (auto & x : all) {
        bool seen = false;
        for (auto & y : reps)
            seen = seen || packings_equivalent(x, y, p4);
        if (! seen)
            reps.push_back(x);
    }
    CHECK(reduce_family(all, p4).size() == reps.size());
}

TEST_CASE("rb_trail_exists")
{
    CHECK(rb_trail_exists(aux_of(2, {{1, 2}}), aux_of(2, {{1, 2}})));
    CHECK(rb_trail_exists(aux_of(1, {{1, 1}}), aux_of(1, {{1, 1}})));
    CHECK_FALSE(rb_trail_exists(aux_of(2, {{1, 2}}), aux_of(2, {})));
    // equal degrees but two separate pieces
    CHECK_FALSE(rb_trail_exists(aux_of(2, {{1, 1}, {2, 2}}), aux_of(2, {{1, 1}, {2, 2}})));

    AuxMultigraph big;
    big.k = 1;
    big.add(1, 1, rb_edge_limit);
    CHECK_THROWS_AS(rb_trail_exists(big, aux_of(1, {{1, 1}})), DomainError);
}

TEST_CASE("rb trails need equal red and blue degrees")
{
    Rng rng(3);
    int found = 0;
    for (int t = 0; t < 300; ++t) {
        int k = int(rng.uniform(1, 3));
        AuxMultigraph red, blue;
        red.k = blue.k = k;
        for (auto * m : {&red, &blue})
            for (int e = int(rng.uniform(1, 4)); e > 0; --e) {
                Label a = Label(rng.uniform(1, k)), b = Label(rng.uniform(1, k));
                m->add(std::min(a, b), std::max(a, b));
            }
        if (rb_trail_exists(red, blue)) {
            ++found;
            for (Label i = 1; i <= k; ++i)
                CHECK(red.degree(i) == blue.degree(i));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("glue_packings")
{
    auto joined = glue_packings(packing({"a", "v"}, {{"a", "v"}}), packing({"v", "b"}, {{"v", "b"}}));
    REQUIRE(joined);
    CHECK(*joined == packing({"a", "v", "b"}, {{"a", "v"}, {"v", "b"}}));

    auto cycle = glue_packings(
        packing({"u", "a", "v"}, {{"u", "a"}, {"a", "v"}}), packing({"v", "b", "u"}, {{"v", "b"}, {"b", "u"}}));
    CHECK_FALSE(cycle);

    auto fork = glue_packings(packing({"a", "v", "b"}, {{"a", "v"}, {"v", "b"}}), packing({"v", "c"}, {{"v", "c"}}));
    CHECK_FALSE(fork);
}

TEST_CASE("aux degree law and the family bound on random hosts")
{
    Rng rng(19);
    for (int t = 0; t < 25; ++t) {
        int n = int(rng.uniform(1, 6)), k = int(rng.uniform(1, 3));
        auto g = random_graph(rng, n, 0.5, k);
        auto all = all_maximal_packings(g);
        for (auto & p : all) {
            CHECK(is_path_packing(p));
            CHECK(p.vertices.size() == std::size_t(n));
            auto aux = aux_multigraph(g, p);
            int ends = 0;
            for (Label i = 1; i <= k; ++i)
                ends += aux.degree(i);
            CHECK(ends == 2 * path_count(p));
            CHECK(aux.edge_count() == path_count(p));
        }
        CHECK(double(reduce_family(all, g).size()) <= reduce_bound(n, k));
    }
    CHECK(reduce_bound(3, 2) == doctest::Approx(9.0 * std::pow(2.0, 4.0)));
}

TEST_CASE("reduction keeps rb-trail existence")
{
    Rng rng(23);
    for (int t = 0; t < 6; ++t) {
        auto g = random_graph(rng, int(rng.uniform(2, 6)), 0.5, int(rng.uniform(1, 3)));
        CHECK(check_representativity(g, 3) == "");
    }
}
