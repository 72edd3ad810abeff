#include "common.hpp"

using namespace tf;
using namespace tf::test;

namespace {

void require_clean(const std::vector<Check>& cs) {
    for (const auto& c : cs) {
        CAPTURE(c.name, c.detail);
        CHECK(c.ok);
    }
}

bool nested_all(const std::vector<OSep>& all) {
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (!sep_nested(all[i], all[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("decomposition of fig2 needs no torso") {
    auto d = decompose(fixture("fig2"));
    require_clean(d->checks);
    CHECK(d->torsos.empty());
    REQUIRE(d->certs.size() == 1);
    const auto& c = d->certs[0];
    CHECK(c.ok);
    CHECK(c.order == 2);
    CHECK(c.oracle == 2);
    CHECK(c.z == vs(*d->g, {"x1", "x2"}));
    // Z is critical, so a member of T with that separator already distinguishes the pair.
    auto m = member_inside_crit(d->t, c.t1, c.t2, c.z);
    REQUIRE(m);
    CHECK(*m == c.member);
    CHECK(d->prov[c.member].from_T);
}

TEST_CASE("decomposition of the hub lifts one torso separation") {
    auto d = decompose(fixture("hub"));
    require_clean(d->checks);
    REQUIRE(d->torsos.size() == 1);
    const auto& run = d->torsos[0];
    CHECK(run.z == vs(*d->g, {"a"}));
    REQUIRE(run.th.size() == 1);
    REQUIRE(run.lifted.size() == 1);
    CHECK_FALSE(d->prov[run.lifted[0]].from_T);
    CHECK(d->prov[run.lifted[0]].torso == 0);
    CHECK(d->certs.size() == 3);
    for (const auto& c : d->certs) {
        CHECK(c.ok);
        CHECK(c.order == 1);
        CHECK(c.oracle == c.order);
    }
    CHECK(nested_all(d->all));
    for (const auto& s : d->all) CHECK(is_tame(s));
}

TEST_CASE("decomposition of mixed and tree3") {
    for (const char* name : {"mixed", "tree3", "comb3", "cliques"}) {
        CAPTURE(name);
        auto d = decompose(fixture(name));
        require_clean(d->checks);
        CHECK(nested_all(d->all));
        int n = static_cast<int>(d->points.size());
        CHECK(static_cast<int>(d->certs.size()) == n * (n - 1) / 2);
        for (const auto& c : d->certs) {
            CHECK(c.ok);
            CHECK(c.oracle == c.order);
            CHECK(distinguishes(d->all[c.member], c.t1, c.t2));
            CHECK(d->all[c.member].order() == c.order);
        }
    }
    auto m = decompose(fixture("mixed"));
    CHECK(m->points.size() == 3);
    for (const auto& c : m->certs) CHECK(c.order == 1);
}

TEST_CASE("decomposition of a finite graph is empty") {
    auto d = decompose(fixture("finite"));
    require_clean(d->checks);
    CHECK(d->t.size() == 0);
    CHECK(d->all.empty());
    CHECK(d->points.empty());
    CHECK(d->certs.empty());
}

TEST_CASE("the end tree set of a modified torso") {
    SymbolicGraph h;
    h.core = {"a", "b", "c"};
    h.core_edges = {{0, 1}, {1, 2}};
    h.rays = {{"R", 0, {}}, {"S", 2, {}}};
    h.cliques = {{"Q", {1}}};
    auto th = end_tree_set(h);
    CHECK(th.size() == 2);
    CHECK(nested_all(th));
    for (const auto& s : th) {
        CHECK(is_H_relevant(h, s));
        CHECK(s.order() == 1);
    }
    auto ends = ends_of(h);
    for (size_t i = 0; i < ends.size(); ++i)
        for (size_t j = i + 1; j < ends.size(); ++j) {
            bool split = false;
            for (const auto& s : th) split = split || distinguishes(s, ends[i], ends[j]);
            CHECK(split);
        }
}

TEST_CASE("tough torsos") {
    auto G = fixture("tree3");
    CHECK_FALSE(is_tough(G));
    auto r = tough_decomposition(G);
    require_clean(r.checks);
    CHECK(r.torsos.size() > 1);
    for (const auto& tt : r.torsos) {
        CAPTURE(to_string(G, tt.part));
        CHECK(tt.tough);
        CHECK(tt.stable);
    }
    auto fin = tough_decomposition(fixture("finite"));
    REQUIRE(fin.torsos.size() == 1);
    CHECK(fin.torsos[0].tough);
    for (const char* name : {"fig2", "hub", "mixed", "comb3", "cliques"}) {
        CAPTURE(name);
        auto s = tough_suite(fixture(name));
        for (const auto& c : s.counterexamples) UNSCOPED_INFO(c);
        CHECK(s.ok());
    }
}
