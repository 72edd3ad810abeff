#pragma once

#include <random>

#include "model.hpp"

namespace tf {

// Portable draws: std distributions differ across standard libraries, which would break seed pinning.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool chance(int percent) { return below(100) < percent; }
};

struct ModelBounds {
    int max_core = 6;
    int max_classes = 3;
    int max_depth = 1;  // nesting depth: 0 core-scoped, 1 one level of per-instance classes
    int max_rays = 2;
    int max_cliques = 1;
    int max_gadget = 2;
};

// A connected symbolic graph; retries until validate passes.
inline SymbolicGraph random_model(Rng& rng, const ModelBounds& b = {}) {
    while (true) {
        SymbolicGraph g;
        int n = rng.between(1, b.max_core);
        for (int i = 0; i < n; ++i) g.core.push_back("v" + std::to_string(i));
        for (int i = 1; i < n; ++i) g.core_edges.emplace_back(rng.below(i), i);
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (rng.chance(15)) g.core_edges.emplace_back(i, j);
        int nc = rng.between(0, b.max_classes);
        for (int c = 0; c < nc; ++c) {
            GadgetClass gc;
            gc.id = "C" + std::to_string(c);
            if (c > 0 && rng.chance(30)) {
                int p = rng.below(c);
                if (g.depth(p) < b.max_depth) gc.parent = p;
            }
            int nv = rng.between(1, b.max_gadget);
            for (int v = 0; v < nv; ++v) gc.gadget.verts.push_back("g" + std::to_string(v));
            for (int v = 1; v < nv; ++v) gc.gadget.edges.emplace_back(v - 1, v);
            int scope = gc.parent < 0 ? n : static_cast<int>(g.classes[gc.parent].gadget.verts.size());
            std::set<std::pair<int, int>> att;
            att.insert({0, rng.below(scope)});
            int extra = rng.below(3);
            for (int a = 0; a < extra; ++a) att.insert({rng.below(nv), rng.below(scope)});
            gc.attach.assign(att.begin(), att.end());
            gc.mult = rng.chance(65) ? kOmega : rng.between(1, 2);
            g.classes.push_back(gc);
        }
        int nr = rng.between(0, b.max_rays);
        for (int r = 0; r < nr; ++r) {
            RayClass rc{"R" + std::to_string(r), rng.below(n), {}};
            if (rng.chance(15)) rc.dom.push_back(rng.below(n));
            g.rays.push_back(rc);
        }
        int nq = rng.between(0, b.max_cliques);
        for (int q = 0; q < nq; ++q) {
            std::set<int> att{rng.below(n)};
            if (rng.chance(50)) att.insert(rng.below(n));
            g.cliques.push_back({"Q" + std::to_string(q), std::vector<int>(att.begin(), att.end())});
        }
        if (validate(g).empty()) return g;
    }
}

// A connected finite graph on n vertices: random tree plus extra edges.
inline std::vector<std::vector<int>> random_finite_graph(Rng& rng, int n, int extra_percent = 20) {
    std::vector<std::vector<int>> adj(n);
    auto link = [&](int a, int c) {
        if (a == c || std::find(adj[a].begin(), adj[a].end(), c) != adj[a].end()) return;
        adj[a].push_back(c);
        adj[c].push_back(a);
    };
    for (int i = 1; i < n; ++i) link(rng.below(i), i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(extra_percent)) link(i, j);
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

}  // namespace tf
