#include "common.hpp"

using namespace tf;
using namespace tf::test;

TEST_CASE("separations of a set: (V,V) is degenerate, (∅,V) small, edges of a path proper") {
    auto objs = all_set_separations(3);
    auto sys = set_system(objs);
    CHECK(sys.validate().empty());
    CHECK(classify(sys, index_of(objs, set_sep(3, {0, 1, 2}, {0, 1, 2}))) == SepKind::Degenerate);
    CHECK(classify(sys, index_of(objs, set_sep(3, {}, {0, 1, 2}))) != SepKind::Proper);
    CHECK(sys.le(index_of(objs, set_sep(3, {}, {0, 1, 2})), index_of(objs, set_sep(3, {0, 1, 2}, {}))));

    Tree path{3, {{0, 1}, {1, 2}}};
    auto e = edge_tree_set(path);
    CHECK(e.validate().empty());
    for (int s = 0; s < e.size(); ++s) CHECK(classify(e, s) == SepKind::Proper);
}

TEST_CASE("only (∅,V) and (V,V)-adjacent separations of a set are small") {
    auto objs = all_set_separations(3);
    auto sys = set_system(objs);
    for (int s = 0; s < sys.size(); ++s) {
        bool small = sys.le(s, sys.inv[s]);
        CHECK(small == objs[s].a.is_subset_of(objs[s].b));
    }
}

TEST_CASE("nestedness") {
    SECTION("edge tree sets of finite trees are nested") {
        Rng rng(11);
        for (int rep = 0; rep < 30; ++rep) {
            int n = rng.between(1, 10);
            Tree t{n, {}};
            for (int v = 1; v < n; ++v) t.edges.emplace_back(rng.below(v), v);
            CHECK(is_nested_set(edge_tree_set(t)));
        }
    }
    SECTION("a separation is nested with itself") {
        auto e = edge_tree_set(Tree{2, {{0, 1}}});
        CHECK(is_nested(e, 0, 0));
    }
    SECTION("{12|34} and {13|24} cross") {
        std::vector<Sides> objs{set_sep(4, {0, 1}, {2, 3}), set_sep(4, {2, 3}, {0, 1}), set_sep(4, {0, 2}, {1, 3}), set_sep(4, {1, 3}, {0, 2})};
        auto sys = set_system(objs);
        CHECK_FALSE(is_nested(sys, 0, 2));
    }
}

TEST_CASE("consistency") {
    Tree star{4, {{0, 1}, {0, 2}, {0, 3}}};
    auto sys = edge_tree_set(star);
    SECTION("down-closures of the stars at each node are consistent orientations") {
        for (int node = 0; node < star.n; ++node) {
            std::vector<int> at;  // the edges at node, oriented toward it
            for (int e = 0; e < 3; ++e) {
                if (star.edges[e].second == node) at.push_back(2 * e);
                if (star.edges[e].first == node) at.push_back(2 * e + 1);
            }
            CHECK(is_star(sys, at));
            auto o = down_closure(sys, at);
            CHECK(o.size() == 3);
            CHECK(is_consistent(sys, o));
        }
    }
    SECTION("s together with its inverse is rejected") { CHECK_THROWS(is_consistent(sys, {0, 1})); }
    SECTION("all edges pointing away from the centre is inconsistent") {
        CHECK_FALSE(is_consistent(sys, {0, 2, 4}));
        CHECK(is_consistent(sys, {1, 3, 5}));
    }
}

TEST_CASE("splitting stars and tree reconstruction") {
    SECTION("splitting stars of an edge tree set are the node stars") {
        Tree t{4, {{0, 1}, {1, 2}, {1, 3}}};
        auto stars = splitting_stars(edge_tree_set(t));
        CHECK(stars.size() == 4);
        std::multiset<size_t> sizes;
        for (const auto& s : stars) sizes.insert(s.size());
        CHECK(sizes == std::multiset<size_t>{1, 1, 1, 3});
    }
    SECTION("a single proper separation gives two singleton stars") {
        auto stars = splitting_stars(edge_tree_set(Tree{2, {{0, 1}}}));
        REQUIRE(stars.size() == 2);
        CHECK(stars[0].size() == 1);
        CHECK(stars[1].size() == 1);
    }
    SECTION("tree_from_tree_set inverts edge_tree_set on random trees") {
        Rng rng(5);
        for (int rep = 0; rep < 40; ++rep) {
            int n = rng.between(1, 10);
            Tree t{n, {}};
            for (int v = 1; v < n; ++v) t.edges.emplace_back(rng.below(v), v);
            CHECK(tree_canonical(tree_from_tree_set(edge_tree_set(t))) == tree_canonical(t));
        }
    }
    SECTION("the empty tree set is a single node") {
        SepSystem empty;
        Tree t = tree_from_tree_set(empty);
        CHECK(t.n == 1);
        CHECK(t.edges.empty());
    }
    SECTION("path on three vertices: four elements ordered along the path") {
        auto sys = edge_tree_set(Tree{3, {{0, 1}, {1, 2}}});
        REQUIRE(sys.size() == 4);
        CHECK(sys.le(0, 2));  // (0,1) ≤ (1,2)
        CHECK(sys.le(3, 1));  // (2,1) ≤ (1,0)
        CHECK_FALSE(sys.le(2, 0));
        CHECK_FALSE(sys.le(0, 3));
    }
}
