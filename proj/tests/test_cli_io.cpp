#include "common.hpp"

using namespace tf;
using namespace tf::test;

namespace {

const char* kFixtures[] = {"fig2", "tree3", "hub", "mixed", "finite", "comb3", "cliques"};

}  // namespace

TEST_CASE("graphs survive a JSON round trip") {
    for (const char* name : kFixtures) {
        CAPTURE(name);
        auto g = fixture(name);
        json j = graph_to_json(g);
        auto back = graph_from_json(j);
        CHECK(graph_to_json(back) == j);
        CHECK(expand(back, 2).size() == expand(g, 2).size());
        CHECK(crit_window(back, 4) == crit_window(g, 4));
    }
}

TEST_CASE("input errors") {
    CHECK_THROWS_AS(graph_from_string("{\"core\": "), InputError);
    CHECK_THROWS_AS(graph_from_string("[]"), InputError);
    CHECK_THROWS_WITH(graph_from_string(R"({"core": {"vertices": ["a"], "edges": [["a", "z"]]}})"),
                      Catch::Matchers::ContainsSubstring("unknown vertex 'z'"));
    CHECK_THROWS_AS(load_graph(std::string(TF_FIXTURES) + "/no_such_file.json"), InputError);
    CHECK_THROWS_AS(load_valid_graph(std::string(TF_FIXTURES) + "/bad/malformed.json"), InputError);
    CHECK_THROWS_WITH(load_valid_graph(std::string(TF_FIXTURES) + "/bad/disconnected.json"),
                      Catch::Matchers::ContainsSubstring("disconnected"));
    auto g = load_graph(std::string(TF_FIXTURES) + "/bad/disconnected.json");
    CHECK_FALSE(validate(g).empty());
}

TEST_CASE("bipartition tree sets survive a JSON round trip") {
    for (const char* name : {"finite", "chain", "star"}) {
        CAPTURE(name);
        std::ifstream in(std::string(TF_FIXTURES) + "/bip/" + name + ".json");
        REQUIRE(in);
        auto t = bip::bip_from_json(json::parse(in));
        auto back = bip::bip_from_json(bip::bip_json(t));
        CHECK(bip::bip_json(back) == bip::bip_json(t));
        auto a = bip::representatives(t), b = bip::representatives(back);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].z == b[i].z);
    }
}

TEST_CASE("decomposition output is deterministic and complete") {
    for (const char* name : {"fig2", "hub", "mixed", "tree3"}) {
        CAPTURE(name);
        auto g = fixture(name);
        auto d1 = decompose(g);
        auto d2 = decompose(g);
        json j1 = decomposition_json(*d1, {7, 4, 4});
        json j2 = decomposition_json(*d2, {7, 4, 4});
        CHECK(j1.dump() == j2.dump());
        CHECK(decomposition_dot(*d1) == decomposition_dot(*d2));

        REQUIRE(j1.contains("tree_set"));
        REQUIRE(j1.contains("certificates"));
        REQUIRE(j1.contains("provenance"));
        REQUIRE(j1.contains("metadata"));
        for (const char* key : {"enumeration_order", "bounds", "oracle_k"}) CHECK(j1["metadata"].contains(key));
        CHECK(j1["certificates"].size() == d1->certs.size());
        for (const auto& c : j1["certificates"]) {
            for (const char* key : {"t1", "t2", "separator", "order", "oracle_order"}) CHECK(c.contains(key));
            CHECK(c["order"] == c["oracle_order"]);
        }
    }
}

TEST_CASE("DOT output labels families") {
    auto d = decompose(fixture("fig2"));
    std::string dot = decomposition_dot(*d);
    CHECK(dot.rfind("graph decomposition {", 0) == 0);
    CHECK(dot.find("×ω") != std::string::npos);
    CHECK(dot.find("{x1,x2} |2|") != std::string::npos);
}

TEST_CASE("crit and tough reports") {
    auto g = fixture("tree3");
    json c = crit_json(g);
    CHECK_FALSE(c.empty());
    json t = tough_json(tough_decomposition(g));
    CHECK(t.contains("torsos"));
    REQUIRE_FALSE(t["checks"].empty());
    for (const auto& chk : t["checks"]) {
        CAPTURE(chk.dump());
        CHECK(chk["ok"].get<bool>());
    }
}
