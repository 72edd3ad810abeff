#include "common.hpp"

using namespace tf;
using namespace tf::test;

TEST_CASE("component meeting a set") {
    auto G = fixture("fig2");
    VSet X = vs(G, {"x1", "x2"}), Y = vs(G, {"x1", "y2"});
    auto cs = components(G, X);
    auto l = component_meeting(*cs, Y);
    REQUIRE(l);
    CHECK(*l == cs->locate(parse_vref(G, "y2")));
    CHECK_FALSE(component_meeting(*cs, X));

    SymbolicGraph c4 = fixture("finite");
    VSet ac = vs(c4, {"a", "c"}), bd = vs(c4, {"b", "d"});
    CHECK_THROWS_AS(component_meeting(c4, ac, bd), NotPrincipal);
    std::vector<YMember> ys{{-1, {}, ac, components(c4, ac)}, {-1, {}, bd, components(c4, bd)}};
    CHECK_THROWS_WITH(check_principal(ys), Catch::Matchers::ContainsSubstring("two components met"));
}

TEST_CASE("problem cases") {
    auto G = fixture("fig2");
    CHECK(is_problem_case(G, vs(G, {"x1", "x2"}), vs(G, {"x1", "y2"})));
    CHECK_FALSE(is_problem_case(G, vs(G, {"x1"}), vs(G, {"x1", "x2"})));
    auto T = fixture("tree3");
    CHECK(is_problem_case(T, vs(T, {"r"}), vs(T, {"C1[0].v"})));
    CHECK(is_problem_case(T, vs(T, {"C1[0].v"}), vs(T, {"C1[3].v"})));
}

TEST_CASE("strongly admissible functions") {
    SECTION("fig2: 𝒦(X) is class A and 𝒦(Y) is class B") {
        auto G = fixture("fig2");
        auto ys = window_members(G, crit_patterns(G), 4);
        REQUIRE(ys.size() == 2);
        auto k = strongly_admissible(ys, false);
        CHECK(is_admissible(ys, k));
        REQUIRE(k.excluded[0]);
        REQUIRE(k.excluded[1]);
        CHECK(*k.excluded[0] == ys[0].cs->locate(parse_vref(G, "y2")));
        CHECK(*k.excluded[1] == ys[1].cs->locate(parse_vref(G, "x2")));
        OSep big = make_osep(ys[0].cs, k_selection(*ys[0].cs, k.excluded[0]));
        CHECK(big.strictly_B(parse_vref(G, "A[9].a")));
        CHECK_FALSE(big.strictly_B(parse_vref(G, "y2")));
        CHECK_FALSE(big.strictly_B(parse_vref(G, "u")));
    }
    SECTION("without problem cases nothing is excluded") {
        auto G = fixture("mixed");
        auto ys = window_members(G, crit_patterns(G), 4);
        auto k = strongly_admissible(ys, false);
        for (const auto& e : k.excluded) CHECK_FALSE(e);
        CHECK(is_admissible(ys, k));
    }
    SECTION("tree3: the root drops its first child, every child drops the root") {
        auto G = fixture("tree3");
        auto ys = window_members(G, crit_patterns(G), 4);
        auto k = strongly_admissible(ys, false);
        CHECK(is_admissible(ys, k));
        for (size_t y = 0; y < ys.size(); ++y) {
            REQUIRE(k.excluded[y]);
            if (ys[y].x == vs(G, {"r"}))
                CHECK(*k.excluded[y] == ys[y].cs->locate(parse_vref(G, "C1[0].v")));
            else
                CHECK(*k.excluded[y] == ys[y].cs->locate(parse_vref(G, "r")));
        }
    }
}

TEST_CASE("the tree set of principal separations") {
    SECTION("fig2: (X, A), (Y, B) and the families of small members; nested") {
        auto G = fixture("fig2");
        auto ys = window_members(G, crit_patterns(G), 4);
        auto t = build_T(G, crit_patterns(G), ys, strongly_admissible(ys, false), 4);
        int big = 0, small_a = 0, small_b = 0;
        for (const auto& m : t.members) {
            if (m.kind == TreeMember::Kind::Big) ++big;
            else if (m.sep.strictly_B(parse_vref(G, "A[" + std::to_string(m.k.j) + "].a"))) ++small_a;
            else ++small_b;
        }
        CHECK(big == 2);
        CHECK(small_a == 4);
        CHECK(small_b == 4);
        CHECK(is_nested_set(t.sys));
        CHECK(is_regular(t.sys));
    }
    SECTION("tree3 with 𝒦 = 𝒞̌ everywhere: (X, 𝒞̌_X) is small") {
        auto G = fixture("tree3");
        for (const char* x : {"r", "C1[1].v"}) {
            auto cs = components(G, vs(G, {x}));
            OSep s = make_osep(cs, k_selection(*cs, std::nullopt));
            auto table = side_table(G, {s}, 6);
            CHECK(small_sides(table.s[0]));
            CHECK(classify(system_of(table.s), 0) == SepKind::Small);
        }
    }
    SECTION("no principal sets, no members") {
        auto G = fixture("finite");
        auto t = build_T(G, {}, {}, {}, 4);
        CHECK(t.size() == 0);
        CHECK(starting_tree_set(G, 4).size() == 0);
    }
    SECTION("σ_X in fig2: (X, A) with every (a, X); a star with interior X") {
        auto G = fixture("fig2");
        auto ys = window_members(G, crit_patterns(G), 4);
        auto t = build_T(G, crit_patterns(G), ys, strongly_admissible(ys, false), 4);
        auto sg = sigma_star(t, 0);
        CHECK(sg.size() == 5);
        CHECK(is_star(t.sys, sg));
        CHECK(is_consistent(t.sys, down_closure(t.sys, sg)));
        SuiteResult r;
        tree_set_checks(t, "fig2", r);
        CHECK(r.counterexamples.empty());
        CHECK(r.ok());
    }
}

TEST_CASE("generous subsets of critical sets") {
    SECTION("fig2: X, Y and {x1}") {
        auto G = fixture("fig2");
        auto pats = generous_patterns(G);
        std::set<VSet> got;
        for (const auto& p : pats) got.insert(p.instantiate({}));
        CHECK(got == std::set<VSet>{vs(G, {"x1", "x2"}), vs(G, {"x1", "y2"}), vs(G, {"x1"})});
        // Oracle: at least two full-neighbourhood components on an expansion.
        for (const char* v : {"x1", "x2", "y2"}) {
            VSet s = vs(G, {v});
            CHECK(is_generous_set(G, s) == (direct_hat_count(expand(G, 3), s) >= 2));
        }
    }
    SECTION("tree3: exactly the critical sets, and the tree set is regular") {
        auto G = fixture("tree3");
        CHECK(generous_patterns(G) == crit_patterns(G));
        auto t = starting_tree_set(G, 4);
        CHECK(is_regular(t.sys));
        CHECK(is_nested_set(t.sys));
    }
    SECTION("every fixture passes the tree set checks") {
        for (const char* name : {"fig2", "tree3", "mixed", "hub", "comb3", "cliques", "finite"}) {
            auto r = principal_suite(fixture(name));
            INFO(name << ": " << (r.counterexamples.empty() ? "" : r.counterexamples[0]));
            CHECK(r.ok());
        }
    }
}
