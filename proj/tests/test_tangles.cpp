#include "common.hpp"

using namespace tf;
using namespace tf::test;

namespace {

OSep toward(const SymbolicGraph& G, const VSet& x, std::initializer_list<const char*> through) {
    auto cs = components(G, x);
    Selection s = empty_selection(*cs);
    for (const char* n : through) {
        Loc l = cs->locate(parse_vref(G, n));
        if (l.named >= 0) s.named[l.named] = 1;
        if (l.fam >= 0) s.fam[l.fam].mode = FamilyPick::All;
    }
    return make_osep(cs, s);
}

TanglePoint ray_point(const SymbolicGraph& G, const std::string& id) {
    for (int r = 0; r < static_cast<int>(G.rays.size()); ++r)
        if (G.rays[r].id == id) return TanglePoint::ray(r);
    throw std::invalid_argument(id);
}

}  // namespace

TEST_CASE("orientation by tangle points") {
    SECTION("a critical point follows its ω-many components") {
        auto G = fixture("fig2");
        VSet X = vs(G, {"x1", "x2"});
        auto cx = TanglePoint::critical(X);
        CHECK(orient(cx, toward(G, X, {"A[0].a"})));
        CHECK_FALSE(orient(cx, toward(G, X, {"y2"})));
    }
    SECTION("an end follows its tail") {
        auto G = fixture("mixed");
        OSep s = toward(G, vs(G, {"p2"}), {"p3"});
        CHECK(orient(ray_point(G, "R"), s));
        CHECK_FALSE(orient(ray_point(G, "R'"), s));
        CHECK(oriented_by(ray_point(G, "R'"), s).same_as(s.inv()));
    }
    SECTION("splitting the ω-many components both ways is ambiguous") {
        auto G = fixture("fig2");
        VSet X = vs(G, {"x1", "x2"});
        auto cs = components(G, X);
        Selection sel = empty_selection(*cs);
        sel.fam[0].mode = FamilyPick::Even;
        CHECK_THROWS_AS(orient(TanglePoint::critical(X), make_osep(cs, sel)), AmbiguousOrientation);
    }
}

TEST_CASE("minimum-order distinction against the brute-force oracle") {
    SECTION("mixed: the two ends are split by one vertex") {
        auto G = fixture("mixed");
        auto a = ray_point(G, "R"), b = ray_point(G, "R'");
        auto m = min_order_separator(G, a, b);
        CHECK(m.order == 1);
        CHECK(distinguishes(m.sep, a, b));
        CHECK(brute_force_distinction(G, a, b, 2).order == 1);
    }
    SECTION("fig2: X and Y need two vertices") {
        auto G = fixture("fig2");
        auto a = TanglePoint::critical(vs(G, {"x1", "x2"})), b = TanglePoint::critical(vs(G, {"x1", "y2"}));
        CHECK(distinction_order(G, a, b) == 2);
        auto bf = brute_force_distinction(G, a, b, 3);
        CHECK(bf.order == 2);
        // Any separator contains x1 and splits x2 from y2.
        CHECK(std::binary_search(bf.separator.begin(), bf.separator.end(), parse_vref(G, "x1")));
        OSep s = toward(G, vs(G, {"x1", "x2"}), {"A[0].a"});
        CHECK(efficiently_distinguishes(s, a, b));
    }
    SECTION("a point is not distinguished from itself") {
        auto G = fixture("mixed");
        CHECK_THROWS(min_order_separator(G, ray_point(G, "R"), ray_point(G, "R")));
    }
    SECTION("every pair of points on every fixture agrees with the oracle") {
        for (const char* name : {"fig2", "tree3", "mixed", "hub", "comb3", "cliques"}) {
            auto G = fixture(name);
            auto pts = tangle_points(G, 2);
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = i + 1; j < pts.size(); ++j) {
                    auto m = min_order_separator(G, pts[i], pts[j]);
                    CHECK(distinguishes(m.sep, pts[i], pts[j]));
                    CHECK(m.order == brute_force_distinction(G, pts[i], pts[j], 4).order);
                }
        }
    }
}

TEST_CASE("the star of small separations at the root of tree3 distinguishes nothing") {
    auto G = fixture("tree3");
    VSet r = vs(G, {"r"});
    auto cs = components(G, r);
    HatView h = hat_components(*cs);
    Selection sel = empty_selection(*cs);
    for (int f : h.families) sel.fam[f].mode = FamilyPick::All;
    for (int i : h.named) sel.named[i] = 1;
    OSep s = make_osep(cs, sel);
    auto root = TanglePoint::critical(r), child = TanglePoint::critical(vs(G, {"C1[2].v"}));
    CHECK(orient(root, s) == orient(child, s));
    CHECK_FALSE(distinguishes(s, root, child));
}

TEST_CASE("cofinal bound above a separation") {
    auto G = fixture("fig2");
    VSet X = vs(G, {"x1", "x2"});
    auto cx = TanglePoint::critical(X);
    SECTION("({x1}, x2-side) lies below the bound, which is cofinite in 𝒞̌_X") {
        OSep s = toward(G, vs(G, {"x1"}), {"x2"});
        REQUIRE(orient(cx, s));
        OSep b = cofinal_bound(cx, s);
        CHECK(sep_le(s, b));
        CHECK(b.separator() == X);
        CHECK(is_tame(b));
    }
    SECTION("(X, 𝒞̌_X minus one member) is its own bound") {
        auto cs = components(G, X);
        Selection sel = empty_selection(*cs);
        sel.fam[0].mode = FamilyPick::All;
        sel.fam[0].flip.insert(0);
        sel.named[cs->locate(parse_vref(G, "y2")).named] = 1;
        OSep s = make_osep(cs, sel);
        CHECK(sep_equal(cofinal_bound(cx, s), s));
    }
    SECTION("the trivial separation (∅, G) is bounded by (X, 𝒞̌_X)") {
        OSep s = toward(G, {}, {"x1"});
        OSep b = cofinal_bound(cx, s);
        CHECK(sep_le(s, b));
        HatView h = hat_components(*b.cs);
        for (int i : h.named) CHECK(b.sel.named[i]);
        for (int f : h.families) CHECK(b.sel.fam[f].mode == FamilyPick::All);
    }
}
