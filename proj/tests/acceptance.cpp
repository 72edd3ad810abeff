// One PASS/FAIL line per acceptance criterion; nonzero exit when any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "tangleforge/tangleforge.hpp"

using namespace tf;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kModels = 120;

SymbolicGraph fixture(const std::string& name) { return load_valid_graph(std::string(TF_FIXTURES) + "/" + name + ".json"); }

VSet vs(const SymbolicGraph& G, std::initializer_list<const char*> names) {
    VSet s;
    for (const char* n : names) s.push_back(parse_vref(G, n));
    return normalized(s);
}

struct Criterion {
    Criterion(int i, std::string w, std::string suite) : id(i), what(std::move(w)), r(std::move(suite)) {}
    int id;
    std::string what;
    SuiteResult r;
    double seconds = 0;
    double limit = 0;  // 0: none
    std::string extra;
    bool ok() const { return r.ok() && r.cases > 0 && (limit == 0 || seconds <= limit); }
};

double timed(const std::function<void()>& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<SymbolicGraph> sweep_models() {
    ModelBounds mb;
    mb.max_depth = 2;
    std::vector<SymbolicGraph> out;
    for (int i = 0; i < kModels; ++i) {
        Rng rng(kSeed + static_cast<std::uint64_t>(i));
        out.push_back(random_model(rng, mb));
    }
    return out;
}

bool few_points(const SymbolicGraph& G) { return tangle_points(clique_ify(G, generous_patterns(G)), 3).size() <= 4; }

bool is_lift_check(const std::string& name) {
    for (const char* key : {"lift", "proxy", "proxies", "H-relevant", "corridor separators", "part contains Z"})
        if (name.find(key) != std::string::npos) return true;
    return false;
}

OSep hat_sep(const SymbolicGraph& G, const VSet& x) {
    auto cs = components(G, x);
    Selection s = empty_selection(*cs);
    HatView h = hat_components(*cs);
    for (int i : h.named) s.named[i] = 1;
    for (int f : h.families) s.fam[f].mode = FamilyPick::All;
    return make_osep(cs, s);
}

void regressions(SuiteResult& r) {
    auto T = fixture("tree3");
    VSet root = vs(T, {"r"});
    // (X, 𝒞̌_X) with nothing excluded is small at the root and at a child.
    for (const char* x : {"r", "C1[1].v"}) {
        OSep s = hat_sep(T, vs(T, {x}));
        auto table = side_table(T, {s}, 6);
        r.check(small_sides(table.s[0]), std::string("tree3: (X,𝒞̌_X) is not small for X=") + x);
    }
    auto crit_r = TanglePoint::critical(root);
    for (int i = 0; i < 3; ++i) {
        std::string v = "C1[" + std::to_string(i) + "].v";
        auto crit_v = TanglePoint::critical(vs(T, {v.c_str()}));
        r.check(!distinguishes(hat_sep(T, root), crit_r, crit_v), "tree3: the raw star at the root distinguishes Crit({r}) and Crit({" + v + "})");
    }
    auto d = decompose(T);
    int seen = 0;
    for (const auto& c : d->certs) {
        bool root_pair = (c.t1.same(crit_r) || c.t2.same(crit_r));
        if (!root_pair) continue;
        ++seen;
        r.check(c.ok && c.order == 1 && c.member >= 0 && d->all[c.member].order() == 1 && distinguishes(d->all[c.member], c.t1, c.t2),
                "tree3: T' does not distinguish " + to_string(*d->g, c.t1) + " / " + to_string(*d->g, c.t2) + " at order 1");
    }
    r.check(seen >= 3, "tree3: fewer than three Crit({r}) pairs certified");

    auto F = fixture("fig2");
    VSet X = vs(F, {"x1", "x2"}), Y = vs(F, {"x1", "y2"});
    r.check(!sep_nested(hat_sep(F, X), hat_sep(F, Y)), "fig2: {X,𝒞̌_X} and {Y,𝒞̌_Y} are nested");
    auto FG = clique_ify(F, generous_patterns(F));
    auto t = starting_tree_set(FG, 4);
    r.check(t.size() > 0 && is_nested_set(t.sys), "fig2: T after exclusion is not nested");
    r.check(is_regular(t.sys), "fig2: T after exclusion is not regular");
}

}  // namespace

int main() {
    std::vector<Criterion> cs;
    auto models = sweep_models();
    std::vector<std::shared_ptr<Decomposition>> decomposed;

    {
        Criterion c(1, "expansion oracle on " + std::to_string(kModels) + " random models, k=1..4", "oracle");
        c.limit = 60;
        c.seconds = timed([&] {
            for (size_t i = 0; i < models.size(); ++i) {
                Rng rng(kSeed + 7919 * (i + 1));
                c.r.guarded("model " + std::to_string(i) + ": ", [&] { return oracle_suite(models[i], 4, rng); });
            }
        });
        cs.push_back(c);
    }
    {
        Criterion c(2, "strongly admissible 𝒦, nested regular T, σ_X stars, partial orientation", "principal");
        c.seconds = timed([&] {
            for (size_t i = 0; i < models.size(); ++i) c.r.guarded("model " + std::to_string(i) + ": ", [&] { return principal_suite(models[i]); });
            for (const char* name : {"fig2", "tree3", "hub", "mixed", "comb3", "cliques", "finite"})
                c.r.guarded(std::string(name) + ": ", [&] { return principal_suite(fixture(name)); });
        });
        cs.push_back(c);
    }
    {
        Criterion c(3, "end-to-end decomposition with certificates", "decompose");
        c.limit = 300;
        int randoms = 0;
        c.seconds = timed([&] {
            std::vector<std::pair<std::string, SymbolicGraph>> inputs;
            for (const char* name : {"fig2", "tree3", "mixed", "hub"}) inputs.emplace_back(name, fixture(name));
            for (size_t i = 0; i < models.size(); ++i)
                if (few_points(models[i])) {
                    inputs.emplace_back("model " + std::to_string(i), models[i]);
                    ++randoms;
                }
            for (const auto& [name, g] : inputs) {
                std::shared_ptr<Decomposition> d;
                try {
                    d = decompose(g);
                } catch (const std::exception& e) {
                    c.r.check(false, name + ": exception: " + e.what());
                    continue;
                }
                absorb(c.r, d->checks, name);
                for (const auto& cert : d->certs)
                    c.r.check(cert.ok && cert.oracle == cert.order, name + ": certificate order " + std::to_string(cert.order) + " vs oracle " +
                                                                        std::to_string(cert.oracle));
                decomposed.push_back(d);
            }
        });
        c.r.check(randoms >= 20, "only " + std::to_string(randoms) + " random models have at most four tangle points");
        c.extra = std::to_string(randoms) + " random models";
        cs.push_back(c);
    }
    {
        Criterion c(4, "tough torsos over crit(G) with stable component counts", "tough");
        c.seconds = timed([&] {
            for (const char* name : {"fig2", "tree3", "hub", "mixed", "comb3", "cliques", "finite"})
                c.r.guarded(std::string(name) + ": ", [&] { return tough_suite(fixture(name)); });
            for (size_t i = 0; i < models.size(); ++i) c.r.guarded("model " + std::to_string(i) + ": ", [&] { return tough_suite(models[i]); });
        });
        cs.push_back(c);
    }
    {
        Criterion c(5, "finite corridor suite on 200 random graphs", "finite");
        c.seconds = timed([&] {
            Rng rng(kSeed);
            c.r.merge(finite_suite(rng, 200));
        });
        cs.push_back(c);
    }
    {
        Criterion c(6, "lifts: same separators, nested, tame, proxy transfer, order preserved", "lift");
        int lifts = 0;
        c.seconds = timed([&] {
            for (const auto& d : decomposed) {
                lifts += static_cast<int>(d->all.size()) - d->t.size();
                for (const auto& ch : d->checks)
                    if (is_lift_check(ch.name) || ch.name == "T' is nested" || ch.name == "members of T' are tame")
                        c.r.check(ch.ok, ch.name + (ch.detail.empty() ? "" : ": " + ch.detail));
            }
        });
        c.r.check(lifts > 0, "no lifted separations were exercised");
        c.extra = std::to_string(lifts) + " lifted separations";
        cs.push_back(c);
    }
    {
        Criterion c(7, "bipartition witnesses, 60 chain-kind and 60 star-kind", "bipartitions");
        c.seconds = timed([&] {
            c.r.merge(bip_random_suite(kSeed, 60, true), "chain: ");
            c.r.merge(bip_random_suite(kSeed + 1000, 60, false), "star: ");
        });
        cs.push_back(c);
    }
    {
        Criterion c(8, "regressions: tree3 root star and fig2 crossing principal separations", "regressions");
        c.seconds = timed([&] {
            try {
                regressions(c.r);
            } catch (const std::exception& e) {
                c.r.check(false, std::string("exception: ") + e.what());
            }
        });
        cs.push_back(c);
    }

    bool all = true;
    for (const auto& c : cs) {
        std::printf("%s criterion %d: %s (%ld cases, %ld failures, %.2fs%s%s)\n", c.ok() ? "PASS" : "FAIL", c.id, c.what.c_str(), c.r.cases,
                    c.r.failures, c.seconds, c.limit > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit)) + "s").c_str() : "",
                    c.extra.empty() ? "" : (", " + c.extra).c_str());
        for (const auto& e : c.r.counterexamples) std::printf("    counterexample: %s\n", e.c_str());
        all = all && c.ok();
    }
    return all ? 0 : 1;
}
