#ifndef FW_TESTS_SHAPES_HH
#define FW_TESTS_SHAPES_HH

// Small named graphs written as clique expressions, shared by the unit tests
// and the acceptance binary.

#include <fw/expr.hh>

#include <initializer_list>
#include <string>
#include <utility>

namespace shapes
{
    // a-b
    inline const char * edge = "j1,2((a<1> + b<2>))";
    // a-b, c-d
    inline const char * two_edges = "(j1,2((a<1> + b<2>)) + j1,2((c<1> + d<2>)))";
    // a-b-c
    inline const char * p3 = "j1,2(((a<1> + b<2>) + c<1>))";
    // a-b-c-d
    inline const char * p4 = "j1,2((r2->3(j1,2((r1->3(j1,2((a<1> + b<2>))) + c<1>))) + d<2>))";
    inline const char * k3 = "j1,2(j1,3(j2,3(((a<1> + b<2>) + c<3>))))";
    inline const char * k4 = "j1,2(j1,3(j1,4(j2,3(j2,4(j3,4((((a<1> + b<2>) + c<3>) + d<4>)))))))";
    // a-b-c-d-e-a, four labels
    inline const char * c5 = "j1,2(r3->2(r2->4(j2,3((r3->2(r2->4(j2,3((r3->2(r2->4(j2,3((j1,2((a<1> + b<2>)) + "
                             "c<3>)))) + d<3>)))) + e<3>)))))";
    // centre c
    inline const char * k13 = "j1,2((((c<1> + x<2>) + y<2>) + z<2>))";
    inline const char * k14 = "j1,2(((((c<1> + w<2>) + x<2>) + y<2>) + z<2>))";
    inline const char * single = "a<1>";
    inline const char * edgeless = "((a<1> + b<1>) + c<1>)";

    inline auto clique(const char * text) -> fw::Expression
    {
        return fw::parse_expression(text, fw::Dialect::Clique);
    }

    // Same expression, fuse dialect, so it can feed every pipeline.
    inline auto fuse(const char * text) -> fw::Expression
    {
        return fw::parse_expression(text, fw::Dialect::Fuse);
    }

    // Labels are irrelevant here; every vertex gets label 1.
    inline auto graph(std::initializer_list<const char *> vertices,
        std::initializer_list<std::pair<const char *, const char *>> edges) -> fw::LabeledGraph
    {
        fw::LabeledGraph g;
        for (auto v : vertices)
            g.add_vertex(v, fw::bit(1));
        for (auto & [a, b] : edges)
            g.add_edge(a, b);
        return g;
    }
}

#endif
