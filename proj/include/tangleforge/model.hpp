#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tf {

inline constexpr int kOmega = -1;

struct Gadget {
    std::vector<std::string> verts;
    std::vector<std::pair<int, int>> edges;
};

struct GadgetClass {
    std::string id;
    int parent = -1;  // -1: scope is the core
    Gadget gadget;
    std::vector<std::pair<int, int>> attach;  // (gadget vertex, scope vertex)
    int mult = kOmega;
};

struct RayClass {
    std::string id;
    int attach = 0;
    std::vector<int> dom;
};

struct CliqueClass {
    std::string id;
    std::vector<int> attach;
};

struct SymbolicGraph {
    std::vector<std::string> core;
    std::vector<std::pair<int, int>> core_edges;
    std::vector<GadgetClass> classes;
    std::vector<RayClass> rays;
    std::vector<CliqueClass> cliques;

    // Classes from the outermost ancestor down to c.
    std::vector<int> chain(int c) const {
        std::vector<int> out;
        for (int x = c; x >= 0; x = classes[x].parent) out.push_back(x);
        std::reverse(out.begin(), out.end());
        return out;
    }
    int depth(int c) const { return static_cast<int>(chain(c).size()) - 1; }
    bool omega(int c) const { return classes[c].mult == kOmega; }
    bool has_omega_above(int c) const {
        for (int x : chain(c))
            if (omega(x)) return true;
        return false;
    }
    int core_index(const std::string& name) const {
        for (int i = 0; i < static_cast<int>(core.size()); ++i)
            if (core[i] == name) return i;
        return -1;
    }
    int class_index(const std::string& id) const {
        for (int i = 0; i < static_cast<int>(classes.size()); ++i)
            if (classes[i].id == id) return i;
        return -1;
    }
    int max_depth() const {
        int d = -1;
        for (int c = 0; c < static_cast<int>(classes.size()); ++c) d = std::max(d, depth(c));
        return d;
    }
    bool has_omega_features() const {
        if (!rays.empty() || !cliques.empty()) return true;
        for (const auto& c : classes)
            if (c.mult == kOmega) return true;
        return false;
    }
};

struct VRef {
    enum class Kind : std::uint8_t { Core, Inst, Ray, Clique };
    Kind kind = Kind::Core;
    int id = 0;             // core vertex, class, ray or clique
    int v = 0;              // gadget vertex, ray position or clique vertex
    std::vector<int> path;  // instance indices, outermost first

    static VRef core_v(int i) { return {Kind::Core, i, 0, {}}; }
    static VRef inst(int cls, std::vector<int> path, int gv) { return {Kind::Inst, cls, gv, std::move(path)}; }
    static VRef ray(int r, int pos) { return {Kind::Ray, r, pos, {}}; }
    static VRef clique(int q, int n) { return {Kind::Clique, q, n, {}}; }

    bool is_core() const { return kind == Kind::Core; }
    bool is_inst() const { return kind == Kind::Inst; }
    bool is_ray() const { return kind == Kind::Ray; }
    bool is_clique() const { return kind == Kind::Clique; }

    auto operator<=>(const VRef&) const = default;
    bool operator==(const VRef&) const = default;
};

using VSet = std::vector<VRef>;

inline VSet normalized(VSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool subset_of(const VSet& a, const VSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string to_string(const SymbolicGraph& g, const VRef& v) {
    switch (v.kind) {
        case VRef::Kind::Core: return g.core.at(v.id);
        case VRef::Kind::Inst: {
            auto ch = g.chain(v.id);
            std::string s;
            for (size_t d = 0; d < ch.size(); ++d) {
                if (d) s += ".";
                s += g.classes[ch[d]].id + "[" + std::to_string(v.path.at(d)) + "]";
            }
            return s + "." + g.classes[v.id].gadget.verts.at(v.v);
        }
        case VRef::Kind::Ray: return g.rays.at(v.id).id + "#" + std::to_string(v.v);
        case VRef::Kind::Clique: return g.cliques.at(v.id).id + "#" + std::to_string(v.v);
    }
    return "?";
}

inline std::string to_string(const SymbolicGraph& g, const VSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(g, s[i]);
    return out + "}";
}

inline VRef parse_vref(const SymbolicGraph& g, const std::string& s) {
    if (int c = g.core_index(s); c >= 0) return VRef::core_v(c);
    if (auto h = s.rfind('#'); h != std::string::npos) {
        std::string id = s.substr(0, h);
        int pos = std::stoi(s.substr(h + 1));
        for (int r = 0; r < static_cast<int>(g.rays.size()); ++r)
            if (g.rays[r].id == id) return VRef::ray(r, pos);
        for (int q = 0; q < static_cast<int>(g.cliques.size()); ++q)
            if (g.cliques[q].id == id) return VRef::clique(q, pos);
    }
    std::vector<int> path;
    int cls = -1;
    size_t at = 0;
    while (true) {
        auto lb = s.find('[', at);
        auto rb = s.find(']', at);
        if (lb == std::string::npos || rb == std::string::npos) break;
        int c = g.class_index(s.substr(at, lb - at));
        if (c < 0 || g.classes[c].parent != cls) throw std::invalid_argument("bad vertex reference: " + s);
        cls = c;
        path.push_back(std::stoi(s.substr(lb + 1, rb - lb - 1)));
        at = rb + 2;
    }
    if (cls < 0 || at > s.size()) throw std::invalid_argument("bad vertex reference: " + s);
    const auto& verts = g.classes[cls].gadget.verts;
    auto it = std::find(verts.begin(), verts.end(), s.substr(at));
    if (it == verts.end()) throw std::invalid_argument("bad vertex reference: " + s);
    return VRef::inst(cls, path, static_cast<int>(it - verts.begin()));
}

// Finite graph with a VRef for every vertex.
struct Expansion {
    int k = 1;
    std::vector<VRef> refs;
    std::map<VRef, int> index;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<std::vector<int>>> instances;  // per class: instance paths

    int size() const { return static_cast<int>(refs.size()); }
    int find(const VRef& v) const {
        auto it = index.find(v);
        return it == index.end() ? -1 : it->second;
    }
    int at(const VRef& v) const {
        int i = find(v);
        if (i < 0) throw std::out_of_range("vertex not in expansion");
        return i;
    }
    int add(const VRef& v) {
        int i = size();
        refs.push_back(v);
        index.emplace(v, i);
        adj.emplace_back();
        return i;
    }
    void link(int a, int b) {
        if (a == b) return;
        if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) return;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    size_t edge_count() const {
        size_t e = 0;
        for (const auto& a : adj) e += a.size();
        return e / 2;
    }
};

// Every ω replaced by k copies, rays cut to k vertices, ω-cliques to k-cliques.
inline Expansion expand(const SymbolicGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("expand needs k >= 1");
    Expansion e;
    e.k = k;
    for (int i = 0; i < static_cast<int>(g.core.size()); ++i) e.add(VRef::core_v(i));
    for (auto [a, b] : g.core_edges) e.link(a, b);
    e.instances.resize(g.classes.size());
    for (int c = 0; c < static_cast<int>(g.classes.size()); ++c) {
        const auto& gc = g.classes[c];
        int copies = gc.mult == kOmega ? k : gc.mult;
        std::vector<std::vector<int>> parents;
        if (gc.parent < 0)
            parents.push_back({});
        else
            parents = e.instances[gc.parent];
        for (const auto& pp : parents)
            for (int i = 0; i < copies; ++i) {
                auto path = pp;
                path.push_back(i);
                e.instances[c].push_back(path);
                std::vector<int> ids;
                for (int v = 0; v < static_cast<int>(gc.gadget.verts.size()); ++v) ids.push_back(e.add(VRef::inst(c, path, v)));
                for (auto [a, b] : gc.gadget.edges) e.link(ids[a], ids[b]);
                for (auto [gv, sv] : gc.attach) {
                    int target = gc.parent < 0 ? e.at(VRef::core_v(sv)) : e.at(VRef::inst(gc.parent, pp, sv));
                    e.link(ids[gv], target);
                }
            }
    }
    for (int r = 0; r < static_cast<int>(g.rays.size()); ++r) {
        int prev = -1;
        for (int n = 0; n < k; ++n) {
            int x = e.add(VRef::ray(r, n));
            e.link(x, prev >= 0 ? prev : e.at(VRef::core_v(g.rays[r].attach)));
            for (int d : g.rays[r].dom) e.link(x, e.at(VRef::core_v(d)));
            prev = x;
        }
    }
    for (int q = 0; q < static_cast<int>(g.cliques.size()); ++q) {
        std::vector<int> ids;
        for (int n = 0; n < k; ++n) ids.push_back(e.add(VRef::clique(q, n)));
        for (int a : ids) {
            for (int b : ids) e.link(a, b);
            for (int x : g.cliques[q].attach) e.link(a, e.at(VRef::core_v(x)));
        }
    }
    return e;
}

inline std::vector<int> finite_components(const std::vector<std::vector<int>>& adj, const std::vector<char>& removed, int* count) {
    int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!removed[w] && comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

// Structural invariants plus connectivity of the 1-expansion.
inline std::vector<std::string> validate(const SymbolicGraph& g) {
    std::vector<std::string> diag;
    size_t total = g.core.size();
    for (const auto& c : g.classes) total += c.gadget.verts.size();
    total += g.rays.size() + g.cliques.size();
    if (total == 0) {
        diag.push_back("empty vertex set");
        return diag;
    }
    std::set<std::string> names;
    for (const auto& v : g.core)
        if (!names.insert(v).second) diag.push_back("duplicate core vertex " + v);
    int nc = static_cast<int>(g.core.size());
    auto core_ok = [&](int i) { return i >= 0 && i < nc; };
    for (auto [a, b] : g.core_edges)
        if (!core_ok(a) || !core_ok(b)) diag.push_back("core edge with unknown endpoint");
    std::set<std::string> ids;
    for (int c = 0; c < static_cast<int>(g.classes.size()); ++c) {
        const auto& gc = g.classes[c];
        std::string where = "class " + gc.id + ": ";
        if (!ids.insert(gc.id).second) diag.push_back(where + "duplicate id");
        if (gc.parent >= c) diag.push_back(where + "parent must be declared earlier");
        if (gc.mult != kOmega && gc.mult < 1) diag.push_back(where + "multiplicity must be >= 1 or omega");
        int nv = static_cast<int>(gc.gadget.verts.size());
        if (nv == 0) diag.push_back(where + "empty gadget");
        for (auto [a, b] : gc.gadget.edges)
            if (a < 0 || a >= nv || b < 0 || b >= nv) diag.push_back(where + "gadget edge with unknown endpoint");
        int scope = gc.parent < 0 ? nc : (gc.parent < c ? static_cast<int>(g.classes[gc.parent].gadget.verts.size()) : 0);
        for (auto [gv, sv] : gc.attach)
            if (gv < 0 || gv >= nv || sv < 0 || sv >= scope) diag.push_back(where + "attachment target missing from scope");
    }
    for (const auto& r : g.rays) {
        if (!ids.insert(r.id).second) diag.push_back("ray " + r.id + ": duplicate id");
        if (!core_ok(r.attach)) diag.push_back("ray " + r.id + ": attachment not in core");
        for (int d : r.dom)
            if (!core_ok(d)) diag.push_back("ray " + r.id + ": dominating vertex not in core");
    }
    for (const auto& q : g.cliques) {
        if (!ids.insert(q.id).second) diag.push_back("clique " + q.id + ": duplicate id");
        for (int x : q.attach)
            if (!core_ok(x)) diag.push_back("clique " + q.id + ": attachment not in core");
    }
    if (!diag.empty()) return diag;
    Expansion e = expand(g, 1);
    int count = 0;
    finite_components(e.adj, std::vector<char>(e.size(), 0), &count);
    if (count != 1) diag.push_back("disconnected: the 1-expansion has " + std::to_string(count) + " components");
    return diag;
}

// Replace every index from b upward by b: the generic slot of a frame.
inline VRef fold(const SymbolicGraph& g, VRef v, int b) {
    if (v.is_inst()) {
        auto ch = g.chain(v.id);
        for (size_t d = 0; d < ch.size(); ++d)
            if (g.omega(ch[d]) && v.path[d] > b) v.path[d] = b;
    } else if ((v.is_ray() || v.is_clique()) && v.v > b) {
        v.v = b;
    }
    return v;
}

// Map indices at or beyond m onto the parity-preserving slots m-2, m-1.
inline int fold_periodic_index(int j, int m) {
    if (j < m) return j;
    return m - 2 + ((j - (m - 2)) % 2);
}

inline VRef fold_periodic(const SymbolicGraph& g, VRef v, int m) {
    if (v.is_inst()) {
        auto ch = g.chain(v.id);
        for (size_t d = 0; d < ch.size(); ++d)
            if (g.omega(ch[d])) v.path[d] = fold_periodic_index(v.path[d], m);
    } else if (v.is_ray() || v.is_clique()) {
        v.v = fold_periodic_index(v.v, m);
    }
    return v;
}

// One past the largest index a vertex set touches at an unbounded position.
inline int touch_bound(const SymbolicGraph& g, const VSet& x) {
    int b = 0;
    for (const auto& v : x) {
        if (v.is_inst()) {
            auto ch = g.chain(v.id);
            for (size_t d = 0; d < ch.size(); ++d)
                if (g.omega(ch[d])) b = std::max(b, v.path[d] + 1);
        } else if (v.is_ray() || v.is_clique()) {
            b = std::max(b, v.v + 1);
        }
    }
    return b;
}

inline bool resolves(const SymbolicGraph& g, const VRef& v) {
    switch (v.kind) {
        case VRef::Kind::Core: return v.id >= 0 && v.id < static_cast<int>(g.core.size());
        case VRef::Kind::Inst: {
            if (v.id < 0 || v.id >= static_cast<int>(g.classes.size())) return false;
            auto ch = g.chain(v.id);
            if (v.path.size() != ch.size()) return false;
            for (size_t d = 0; d < ch.size(); ++d) {
                if (v.path[d] < 0) return false;
                if (!g.omega(ch[d]) && v.path[d] >= g.classes[ch[d]].mult) return false;
            }
            return v.v >= 0 && v.v < static_cast<int>(g.classes[v.id].gadget.verts.size());
        }
        case VRef::Kind::Ray: return v.id >= 0 && v.id < static_cast<int>(g.rays.size()) && v.v >= 0;
        case VRef::Kind::Clique: return v.id >= 0 && v.id < static_cast<int>(g.cliques.size()) && v.v >= 0;
    }
    return false;
}

}  // namespace tf
