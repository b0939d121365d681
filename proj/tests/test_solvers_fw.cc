#include "shapes.hh"

#include <fw/oracle.hh>
#include <fw/rewrite.hh>
#include <fw/solvers_fw.hh>
#include <fw/suites.hh>

#include <doctest.h>

using namespace fw;

namespace
{
    auto glue(const char * text) -> Expression
    {
        return parse_expression(text, Dialect::Glue);
    }

    const char * glued_path = "(j1,2(a<1> ~ v<2>) ~ j1,2(v<2> ~ b<1>))";
    // C4 a-b-c-d as the paths b-a-d and b-c-d glued at b and d
    const char * glued_c4 = "(j1,2(j1,3((a<1> ~ b<2>) ~ d<3>)) ~ j1,2(j1,3((c<1> ~ b<2>) ~ d<3>)))";

    auto minus_edge(LabeledGraph g, const std::string & u, const std::string & v) -> LabeledGraph
    {
        g.edges.erase(make_edge(u, v));
        return g;
    }
}

TEST_CASE("max cut examples")
{
    CHECK(solve_max_cut(as_reduced_glue(shapes::clique(shapes::edge))) == 1);
    CHECK(solve_max_cut(as_reduced_glue(shapes::clique(shapes::k3))) == 2);
    CHECK(solve_max_cut(as_reduced_glue(glue(glued_path))) == 2);
    CHECK(solve_max_cut(as_reduced_glue(shapes::clique(shapes::c5))) == 4);
    CHECK(solve_max_cut(as_reduced_glue(shapes::clique(shapes::k4))) == 4);
    // unreduced glue input is refused
    CHECK_THROWS_AS(solve_max_cut(glue("(j1,2(a<1> ~ b<2>) ~ j1,2(a<1> ~ b<2>))")), DomainError);
}

TEST_CASE("max cut table entries are the best cut per class profile")
{
    auto corpus = solver_corpus(Dialect::Fuse, 10, 31);
    for (auto & e : corpus) {
        auto rg = as_reduced_glue(e);
        auto g = evaluate(rg);
        auto ig = index_graph(g);
        int n = g.size();
        std::map<std::vector<int>, int> best;
        for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
            std::vector<int> s(rg.k, 0);
            for (int v = 0; v < n; ++v)
                if ((side >> v) & 1)
                    for (auto l : labels_of(g.vertices.at(ig.titles[v])))
                        ++s[l - 1];
            int cut = 0;
            for (auto [a, b] : ig.edges)
                cut += ((side >> a) & 1) != ((side >> b) & 1);
            auto [it, fresh] = best.emplace(s, cut);
            if (! fresh)
                it->second = std::max(it->second, cut);
        }
        CHECK(max_cut_table(rg) == best);
    }
}

TEST_CASE("edge dominating set examples")
{
    CHECK(solve_eds(as_reduced_glue(shapes::clique(shapes::edge))) == 1);
    CHECK(solve_eds(as_reduced_glue(shapes::clique(shapes::p4))) == 1);
    CHECK(solve_eds(as_reduced_glue(shapes::clique(shapes::two_edges))) == 2);
    CHECK(solve_eds(as_reduced_glue(shapes::clique(shapes::edgeless))) == 0);
    CHECK(solve_eds(as_reduced_glue(shapes::clique(shapes::c5))) == 2);

    // glue labels never carry s_i + r_i > 1
    SolveStats st;
    solve_eds(as_reduced_glue(glue(glued_c4)), &st);
    CHECK(st.identity_violations == 0);
}

TEST_CASE("pin_edge_expression")
{
    auto k3 = as_reduced_glue(shapes::fuse(shapes::k3));
    auto g = evaluate(k3);
    for (auto & [u, v] : g.edges) {
        auto pinned = pin_edge_expression(k3, u, v);
        CHECK(pinned.k == k3.k + 2);
        CHECK(check_reduced(pinned) == "");
        auto & root = pinned.node(pinned.root);
        CHECK(root.kind == Kind::Join);
        CHECK(same_shape(evaluate(pinned), g));
        CHECK(same_shape(evaluate(subexpression(pinned, root.kids[0])), minus_edge(g, u, v)));
    }

    auto k2 = as_reduced_glue(shapes::fuse(shapes::edge));
    auto pk2 = pin_edge_expression(k2, "a", "b");
    auto child = evaluate(subexpression(pk2, pk2.node(pk2.root).kids[0]));
    CHECK(child.size() == 2);
    CHECK(child.edges.empty());

    auto c4 = as_reduced_glue(glue(glued_c4));
    auto pc = pin_edge_expression(c4, "a", "b");
    auto rest = evaluate(subexpression(pc, pc.node(pc.root).kids[0]));
    CHECK(same_shape(rest, minus_edge(evaluate(c4), "a", "b")));
    CHECK(rest.edges.size() == 3);
    CHECK(is_connected(rest));

    CHECK_THROWS_AS(pin_edge_expression(c4, "a", "c"), DomainError);
}

TEST_CASE("hamiltonian cycle examples")
{
    CHECK(solve_hamiltonian_cycle(shapes::clique(shapes::k3)));
    CHECK_FALSE(solve_hamiltonian_cycle(shapes::clique(shapes::k13)));
    CHECK(solve_hamiltonian_cycle(glue(glued_c4)));
    CHECK(solve_hamiltonian_cycle(shapes::clique(shapes::c5)));
    CHECK_FALSE(solve_hamiltonian_cycle(shapes::clique(shapes::p4)));
    CHECK(solve_hamiltonian_cycle(shapes::clique(shapes::k4)));

    SolveStats st;
    CHECK_FALSE(solve_hamiltonian_cycle(shapes::clique(shapes::edge), &st));
    CHECK(! st.note.empty());
}

TEST_CASE("fw solvers agree with brute force on generated instances")
{
    auto corpus = solver_corpus(Dialect::Fuse, 40, 77);
    for (auto & e : corpus)
        for (auto p : {Problem::MaxCut, Problem::Eds, Problem::Hc}) {
            INFO(serialize_expression(e));
            CHECK(check_solver(p, e) == "");
        }
}

TEST_CASE("hamiltonian families stay within the reduce bound")
{
    for (auto & e : solver_corpus(Dialect::Fuse, 15, 5)) {
        SolveStats st;
        solve_hamiltonian_cycle(e, &st);
        CHECK(st.family_bound_violations == 0);
    }
}
