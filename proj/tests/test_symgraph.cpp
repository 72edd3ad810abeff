#include "common.hpp"

using namespace tf;
using namespace tf::test;

namespace {

// The separation (X, 𝒞) with 𝒞 the components through the given vertices plus whole families.
OSep toward(const SymbolicGraph& G, const VSet& x, std::initializer_list<const char*> through, FamilyPick::Mode fam_mode = FamilyPick::None) {
    auto cs = components(G, x);
    Selection s = empty_selection(*cs);
    for (const char* n : through) {
        Loc l = cs->locate(parse_vref(G, n));
        if (l.named >= 0) s.named[l.named] = 1;
        if (l.fam >= 0) s.fam[l.fam].mode = FamilyPick::All;
    }
    if (fam_mode != FamilyPick::None)
        for (auto& f : s.fam) f.mode = fam_mode;
    return make_osep(cs, s);
}

OSep hat_sep(const SymbolicGraph& G, const VSet& x) {
    auto cs = components(G, x);
    Selection s = empty_selection(*cs);
    HatView h = hat_components(*cs);
    for (int i : h.named) s.named[i] = 1;
    for (int f : h.families) s.fam[f].mode = FamilyPick::All;
    return make_osep(cs, s);
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(fixture("fig2")).empty());
    SymbolicGraph g = fixture("fig2");
    g.core_edges.erase(std::remove(g.core_edges.begin(), g.core_edges.end(), std::pair<int, int>{3, 0}), g.core_edges.end());
    auto diag = validate(g);
    REQUIRE_FALSE(diag.empty());
    CHECK(diag[0].find("disconnected") != std::string::npos);
    CHECK_FALSE(validate(SymbolicGraph{}).empty());
}

TEST_CASE("expansion sizes") {
    auto G = fixture("fig2");
    CHECK(expand(G, 1).size() == 6);
    CHECK(expand(G, 3).size() == 10);
    CHECK(expand(G, 3).edge_count() == 2 + 2 * 3 + 2 * 3);
    auto F = fixture("finite");
    for (int k : {1, 2, 5}) {
        CHECK(expand(F, k).size() == 4);
        CHECK(expand(F, k).edge_count() == 4);
    }
    auto T = fixture("tree3");
    CHECK(expand(T, 3).size() == 1 + 3 + 9);
}

TEST_CASE("components after deleting a finite set") {
    SECTION("fig2 minus X: {u}, the y2-component, and class A") {
        auto G = fixture("fig2");
        auto cs = components(G, vs(G, {"x1", "x2"}));
        CHECK(cs->named_count() == 2);
        REQUIRE(cs->family_count() == 1);
        CHECK(G.classes[cs->families[0].cls].id == "A");
        Loc y2 = cs->locate(parse_vref(G, "y2"));
        CHECK(cs->locate(parse_vref(G, "B[5].b")) == y2);
        CHECK_FALSE(cs->locate(parse_vref(G, "u")) == y2);
        CHECK(cs->locate(parse_vref(G, "A[7].a")).fam == 0);
    }
    SECTION("nothing deleted: one component") {
        auto G = fixture("fig2");
        auto cs = components(G, {});
        CHECK(cs->named_count() == 1);
        CHECK(cs->family_count() == 0);
    }
    SECTION("mixed minus {p1,p2}: p3 with the tail of R, the R′ tail, and class M") {
        auto G = fixture("mixed");
        auto cs = components(G, vs(G, {"p1", "p2"}));
        CHECK(cs->named_count() == 2);
        REQUIRE(cs->family_count() == 1);
        CHECK(G.classes[cs->families[0].cls].id == "M");
        CHECK(cs->locate(parse_vref(G, "p3")) == cs->locate(parse_vref(G, "R#40")));
        CHECK_FALSE(cs->locate(parse_vref(G, "p3")) == cs->locate(parse_vref(G, "R'#40")));
    }
}

TEST_CASE("full-neighbourhood components") {
    auto G = fixture("fig2");
    SECTION("𝒞̌ of X is class A plus the y2-component") {
        auto cs = components(G, vs(G, {"x1", "x2"}));
        HatView h = hat_components(*cs);
        CHECK(h.families.size() == 1);
        REQUIRE(h.named.size() == 1);
        CHECK(cs->locate(parse_vref(G, "y2")).named == h.named[0]);
    }
    SECTION("𝒞̌ of {x1} is finite: {u} and the component of x2, y2, A and B") {
        VSet x1 = vs(G, {"x1"});
        auto cs = components(G, x1);
        HatView h = hat_components(*cs);
        CHECK_FALSE(h.infinite());
        CHECK(h.named.size() == 2);
        CHECK(direct_hat_count(expand(G, 3), x1) == 2);
        CHECK(direct_hat_count(expand(G, 4), x1) == 2);
    }
    SECTION("𝒞̌ of ∅ is G itself") {
        HatView h = hat_components(*components(G, {}));
        CHECK(h.named.size() == 1);
    }
}

TEST_CASE("critical vertex sets") {
    SECTION("fig2: X and Y") {
        auto G = fixture("fig2");
        auto w = crit_window(G, 3);
        CHECK(w == std::vector<VSet>{vs(G, {"x1", "x2"}), vs(G, {"x1", "y2"})});
    }
    SECTION("tree3: {r} plus the singletons of C1 instances") {
        auto G = fixture("tree3");
        auto entries = crit(G);
        REQUIRE(entries.size() == 2);
        int named = 0, family = 0;
        for (const auto& e : entries) (e.family ? family : named) += 1;
        CHECK(named == 1);
        CHECK(family == 1);
        CHECK(is_critical(G, vs(G, {"r"})));
        CHECK(is_critical(G, vs(G, {"C1[4].v"})));
        CHECK_FALSE(is_critical(G, vs(G, {"C1[4].C2[1].l"})));
    }
    SECTION("finite graphs have none") { CHECK(crit(fixture("finite")).empty()); }
    SECTION("criticality agrees with hat-count growth on expansions") {
        for (const char* name : {"fig2", "tree3", "mixed", "hub", "comb3", "cliques"}) {
            auto G = fixture(name);
            for (const auto& x : crit_window(G, 2)) {
                int k = touch_bound(G, x) + 2;
                CHECK(direct_hat_count(expand(G, k + 1), x) > direct_hat_count(expand(G, k), x));
            }
        }
    }
}

TEST_CASE("order on separations") {
    auto G = fixture("fig2");
    VSet X = vs(G, {"x1", "x2"}), Y = vs(G, {"x1", "y2"});
    SECTION("(X, C_X(Y)) ≤ (Y, 𝒞̌_Y minus C_Y(X))") {
        OSep p = toward(G, X, {"y2"});
        OSep q = toward(G, Y, {"B[0].b"});
        CHECK(sep_le(p, q));
        CHECK(sep_le(p, p));
    }
    SECTION("(X,𝒞̌_X) and (Y,𝒞̌_Y) are not nested") {
        OSep p = hat_sep(G, X), q = hat_sep(G, Y);
        CHECK_FALSE(sep_le(p, q));
        CHECK_FALSE(sep_le(p, q.inv()));
        CHECK_FALSE(sep_le(p.inv(), q));
        CHECK_FALSE(sep_le(p.inv(), q.inv()));
        CHECK_FALSE(sep_nested(p, q));
    }
    SECTION("symbolic comparison matches the expansion") {
        OSep p = toward(G, X, {"y2"});
        OSep q = toward(G, Y, {"B[0].b"});
        for (int k = 3; k <= 5; ++k) {
            Expansion e = expand(G, k);
            CHECK(direct_le(p, q, e));
            CHECK_FALSE(direct_le(q, p, e));
        }
    }
}

TEST_CASE("supremum and infimum") {
    auto G = fixture("fig2");
    Rng rng(3);
    Expansion e = expand(G, 4);
    VSet pool = deletable(G, e, 1);
    for (int rep = 0; rep < 200; ++rep) {
        auto cp = components(G, random_subset(rng, pool, 2));
        auto cq = components(G, random_subset(rng, pool, 2));
        OSep r = make_osep(cp, random_selection(*cp, rng, 2));
        OSep s = make_osep(cq, random_selection(*cq, rng, 2));
        CHECK(sep_equal(sep_sup(r, s).inv(), sep_inf(r.inv(), s.inv())));
        CHECK(sep_equal(sep_sup(s, s), s));
        CHECK(sep_le(r, sep_sup(r, s)));
        CHECK(sep_le(sep_inf(r, s), s));
        // Submodularity of the order.
        CHECK(sep_sup(r, s).order() + sep_inf(r, s).order() <= r.order() + s.order());
    }
}

TEST_CASE("tameness and generosity") {
    auto G = fixture("fig2");
    VSet X = vs(G, {"x1", "x2"});
    CHECK(is_tame(toward(G, X, {"A[0].a"})));
    CHECK_FALSE(is_tame(toward(G, X, {}, FamilyPick::Even)));
    CHECK(is_generous_set(G, X));
    CHECK_FALSE(is_generous_set(G, vs(G, {"u"})));
    CHECK_FALSE(is_generous_set(G, {}));
    auto F = fixture("finite");
    auto cs = components(F, vs(F, {"a", "c"}));
    CHECK(is_tame(select_named(cs, {0})));
}

TEST_CASE("clique-ification") {
    auto G = fixture("fig2");
    auto H = clique_ify(G, crit_patterns(G));
    auto has = [&](const char* a, const char* b) {
        int x = parse_vref(H, a).id, y = parse_vref(H, b).id;
        for (auto [p, q] : H.core_edges)
            if ((p == x && q == y) || (p == y && q == x)) return true;
        return false;
    };
    CHECK(has("x1", "x2"));
    CHECK(has("x1", "y2"));
    CHECK(H.core_edges.size() == G.core_edges.size() + 2);
    auto again = clique_ify(H, crit_patterns(H));
    CHECK(again.core_edges.size() == H.core_edges.size());
}

TEST_CASE("clique-ification keeps the finite-order separations of small expansions") {
    auto G = fixture("fig2");
    auto H = clique_ify(G, crit_patterns(G));
    for (int k : {2, 3}) {
        Expansion eg = expand(G, k), eh = expand(H, k);
        REQUIRE(eg.size() == eh.size());
        int n = eg.size();
        // A separation is a pair of sides covering V without an edge from A∖B to B∖A; scan all bipartitions with separators ≤ 2.
        auto separations = [&](const Expansion& e) {
            std::set<std::pair<std::vector<char>, std::vector<char>>> out;
            for (int mask = 0; mask < (1 << n); ++mask)
                for (int sx = 0; sx < n; ++sx)
                    for (int sy = sx; sy < n; ++sy) {
                        std::vector<char> sep(n, 0), a(n), b(n);
                        sep[sx] = sep[sy] = 1;
                        bool jump = false;
                        for (int v = 0; v < n; ++v) {
                            a[v] = sep[v] || !((mask >> v) & 1);
                            b[v] = sep[v] || ((mask >> v) & 1);
                        }
                        for (int v = 0; v < n && !jump; ++v)
                            for (int w : e.adj[v]) jump = jump || (a[v] && !b[v] && b[w] && !a[w]);
                        if (!jump) out.insert({a, b});
                    }
            return out;
        };
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = eh.at(eg.refs[v]);
        CHECK(std::all_of(perm.begin(), perm.end(), [&](int i) { return perm[i] == i; }));
        CHECK(separations(eg) == separations(eh));
    }
}
