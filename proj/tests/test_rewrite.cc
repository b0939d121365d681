#include "shapes.hh"

#include <fw/oracle.hh>
#include <fw/rewrite.hh>
#include <fw/suites.hh>

#include <doctest.h>

using namespace fw;

namespace
{
    auto fx(const char * text) -> Expression
    {
        return parse_expression(text, Dialect::Fuse);
    }

    auto text_of(const Expression & e) -> std::string
    {
        return serialize_expression(e);
    }
}

TEST_CASE("suppress_useless")
{
    CHECK(text_of(suppress_useless(fx("j1,2(j1,2(a<1> + b<2>))"))) == "j1,2(a<1> + b<2>)");
    CHECK(text_of(suppress_useless(fx("f1(a<1>)"))) == "a<1>");
    CHECK(text_of(suppress_useless(fx("r1->1(a<1>)"))) == "a<1>");
    // relabel of an empty class, then a join that only the survivor needs
    CHECK(text_of(suppress_useless(fx("j1,2(r3->1(a<1> + b<2>))"))) == "j1,2(a<1> + b<2>)");

    for (int s = 0; s < 100; ++s) {
        GenConfig c;
        c.seed = s;
        c.k = 1 + s % 4;
        c.budget = 30;
        auto e = gen_expression(c);
        auto out = suppress_useless(e);
        CHECK(graphs_equal(evaluate(out), evaluate(e)));
        CHECK(out.size() <= e.size());
        auto all = evaluate_all(out);
        for (int id : postorder(out))
            if (arity(out.nodes[id].kind) == 1)
                CHECK_FALSE(is_useless(out.nodes[id], all[out.nodes[id].kids[0]]));
    }
}

TEST_CASE("apply_rule: worked instances")
{
    auto r12 = parse_expression("r1->2(a<1>)", Dialect::Fuse, 2);
    CHECK(text_of(apply_rule(r12, r12.root, 12)) == "a<2>");

    auto r1 = fx("f1(j2,3((a<1> + b<1>) + (c<2> + d<3>)))");
    auto after1 = apply_rule(r1, r1.root, 1);
    CHECK(text_of(after1) == "j2,3(f1((a<1> + b<1>) + (c<2> + d<3>)))");
    CHECK(graphs_equal(evaluate(after1), evaluate(r1)));

    auto r3 = fx("f1(r2->1(j1,2(a<1> + b<2>)))");
    auto after3 = apply_rule(r3, r3.root, 3);
    CHECK(text_of(after3) == "f1(r2->1(a<1> + b<2>))");
    CHECK(graphs_equal(evaluate(after3), evaluate(r3)));

    auto r9 = fx("f1(r2->1(a<2> + b<1>))");
    auto after9 = apply_rule(r9, r9.root, 9);
    CHECK(text_of(after9) == "f1(r2->1(a<2>) + r2->1(b<1>))");
    CHECK(graphs_equal(evaluate(after9), evaluate(r9)));
}

TEST_CASE("apply_rule: side conditions")
{
    auto e = fx("f1(j2,3((a<1> + b<1>) + (c<2> + d<3>)))");
    CHECK_THROWS_AS(apply_rule(e, e.root, 2), RuleNotApplicable);
    CHECK_THROWS_AS(apply_rule(e, e.root, 12), RuleNotApplicable);
    CHECK_THROWS_AS(apply_rule(e, e.root, 15), RuleNotApplicable);
    CHECK_THROWS_AS(apply_rule(e, -1, 1), RuleNotApplicable);
    // both joined labels outside {a_1..a_q, i}: rule 3 does not fit, rule 5 does
    auto j = fx("f1(r2->1(j3,4((a<1> + b<2>) + (c<3> + d<4>))))");
    CHECK_THROWS_AS(apply_rule(j, j.root, 3), RuleNotApplicable);
    CHECK(graphs_equal(evaluate(apply_rule(j, j.root, 5)), evaluate(j)));
    try {
        apply_rule(j, j.root, 4);
        FAIL("rule 4 applied");
    }
    catch (const RuleNotApplicable & ex) {
        CHECK(std::string(ex.what()).find("exactly one joined label") != std::string::npos);
    }
}

TEST_CASE("shift_fuses_to_unions")
{
    for (auto text : {"f1(r2->1(a<2> + b<1>))", "f1(j1,2((a<1> + b<2>) + c<1>))",
             "f1(r2->1(j1,2(a<1> + b<2>) + c<2>))"}) {
        auto e = fx(text);
        RewriteStats st;
        auto out = shift_fuses_to_unions(e, &st);
        CHECK(graphs_equal(evaluate(out), evaluate(e)));
        CHECK(check_shifted(out) == "");
        CHECK(st.bound_violations == 0);
    }
    auto join_over = shift_fuses_to_unions(fx("f1(j1,2((a<1> + b<2>) + c<1>))"));
    CHECK(join_over.node(join_over.root).kind == Kind::Join);

    // already in shape: nothing moves
    auto ready = fx("j1,2(f1(a<1> + c<1>) + b<2>)");
    CHECK(structurally_equal(shift_fuses_to_unions(ready), ready));
}

TEST_CASE("localize_fuses")
{
    auto e = fx("f1((a<1> + b<1>) + c<1>)");
    auto out = localize_fuses(e);
    CHECK(graphs_equal(evaluate(out), evaluate(e)));
    CHECK(check_localized(out) == "");
    CHECK(count_kind(out, Kind::Fuse) == 2);

    auto local = fx("f1(a<1> + b<1>)");
    CHECK(structurally_equal(localize_fuses(local), local));
    auto plain = shapes::fuse(shapes::k3);
    CHECK(structurally_equal(localize_fuses(plain), plain));
}

TEST_CASE("fuse_to_glue")
{
    CHECK(text_of(fuse_to_glue(fx("f1(a<1> + b<1>)"))) == "(a<1> ~ a<1>)");

    auto plain = fuse_to_glue(shapes::fuse(shapes::k3));
    CHECK(count_kind(plain, Kind::Union) == 0);
    CHECK(graphs_equal(evaluate(plain), evaluate(shapes::fuse(shapes::k3))));

    auto path = fx("f1(j1,2(a<1> + x<2>) + j1,2(b<1> + y<2>))");
    auto g = fuse_to_glue(path);
    CHECK(g.dialect == Dialect::Glue);
    CHECK(count_kind(g, Kind::Fuse) == 0);
    CHECK(count_kind(g, Kind::Union) == 0);
    CHECK(graphs_equal(evaluate(g), evaluate(path)));
    CHECK(evaluate(g).neighbours("a") == std::set<std::string>{"x", "y"});
}

TEST_CASE("reduce_glue")
{
    auto twice = parse_expression("(j1,2(a<1> ~ b<2>) ~ j1,2(a<1> ~ b<2>))", Dialect::Glue);
    auto r = reduce_glue(twice);
    CHECK(graphs_equal(evaluate(r), evaluate(twice)));
    CHECK(check_reduced(r) == "");
    CHECK(count_kind(r, Kind::Join) == 1);
    CHECK(check_reduced(twice) != "");

    auto lonely = parse_expression("(j1,2(a<1> ~ v<2>) ~ (v<2> ~ c<1>))", Dialect::Glue);
    auto r2 = reduce_glue(lonely);
    CHECK(graphs_equal(evaluate(r2), evaluate(lonely)));
    CHECK(check_reduced(r2) == "");
    CHECK(count_kind(r2, Kind::Introduce) == 3);

    auto dup = parse_expression("j1,2(j1,2(a<1> ~ b<2>))", Dialect::Glue);
    CHECK(count_kind(reduce_glue(dup), Kind::Join) == 1);
}

TEST_CASE("fuse_to_reduced_glue")
{
    CHECK(text_of(fuse_to_reduced_glue(fx("a<1>"))) == "a<1>");
    auto k3 = fuse_to_reduced_glue(shapes::fuse(shapes::k3));
    CHECK(k3.size() <= glue_size_bound(3, 3, 3));
    CHECK(glue_size_bound(3, 3, 3) == glue_size_constant * 9 * 6);
    CHECK(check_reduced(k3) == "");
    CHECK(graphs_equal(evaluate(k3), evaluate(shapes::fuse(shapes::k3))));
}

TEST_CASE("fuse_to_multi")
{
    auto one = fuse_to_multi(fx("f1(a<1> + b<1>)"));
    CHECK(one.dialect == Dialect::Multi);
    auto g = evaluate(one);
    CHECK(g.size() == 1);
    CHECK(g.has_vertex("a"));
    CHECK((labels_used(one) >> 2) == 0);

    auto plain = shapes::fuse(shapes::p4);
    auto m = fuse_to_multi(plain);
    CHECK(count_kind(m, Kind::Fuse) == 0);
    CHECK(same_shape(evaluate(m), evaluate(plain)));
    CHECK(text_of(as_multi(shapes::clique(shapes::p4))) == text_of(m));

    auto star = fx("f1((j1,2(c<1> + x<2>) + j1,2(d<1> + y<2>)) + j1,2(e<1> + z<2>))");
    auto ms = fuse_to_multi(star);
    CHECK(same_shape(evaluate(ms), evaluate(star)));
    CHECK(evaluate(ms).neighbours("c") == std::set<std::string>{"x", "y", "z"});
    CHECK(ms.k <= 3);
}

TEST_CASE("normalize_multi")
{
    auto split = parse_expression("r1->{2,3}(a<1>)", Dialect::Multi);
    CHECK(text_of(normalize_multi(split)) == "r1->{}(r1->{1,3}(r1->{1,2}(a<1>)))");
    auto intro = parse_expression("a<1,2>", Dialect::Multi);
    CHECK(text_of(normalize_multi(intro)) == "r1->{1,2}(a<1>)");

    auto done = normalize_multi(fuse_to_multi(shapes::fuse(shapes::c5)));
    CHECK(check_normalized_multi(done) == "");
    auto again = normalize_multi(done);
    CHECK(again.size() == done.size());
    CHECK(graphs_equal(evaluate(again), evaluate(done)));

    CHECK(check_normalized_multi(split) != "");
    CHECK(check_normalized_multi(intro) != "");
}

TEST_CASE("pipelines on generated fuse expressions")
{
    int shifted_bad = 0, local_bad = 0, bound_bad = 0;
    for (auto & e : roundtrip_corpus(200, 5)) {
        auto g = evaluate(e);
        RewriteStats st;
        auto sh = shift_fuses_to_unions(e, &st);
        CHECK(graphs_equal(evaluate(sh), g));
        shifted_bad += check_shifted(sh) != "";
        auto lo = localize_fuses(e, &st);
        CHECK(graphs_equal(evaluate(lo), g));
        local_bad += check_localized(lo) != "";
        bound_bad += st.bound_violations;

        auto gl = fuse_to_glue(e);
        CHECK(graphs_equal(evaluate(gl), g));
        auto red = reduce_glue(gl);
        CHECK(graphs_equal(evaluate(red), g));
        CHECK(check_reduced(red) == "");

        auto f = check_roundtrip(e);
        CHECK(f.roundtrip.empty());
        CHECK(f.bounds.empty());
        CHECK(f.multi.empty());
    }
    CHECK(shifted_bad == 0);
    CHECK(local_bad == 0);
    CHECK(bound_bad == 0);
}
