#pragma once

#include "principal.hpp"

namespace tf {

using Adj = std::vector<std::vector<int>>;

inline Bits part_of(const std::vector<Sides>& o, size_t n) {
    Bits p(n);
    p.set();
    for (const auto& s : o) p &= s.b;
    return p;
}

// Corridors of a consistent orientation of a regular finite tree set, one per maximal element.
struct Corridors {
    Bits part;
    std::vector<int> top;        // maximal member of each corridor
    std::vector<int> of_member;  // member -> corridor
    std::vector<Bits> region;    // A_γ
    std::vector<Bits> xi;        // A_γ ∩ Π
    std::vector<int> of_vertex;  // -1 on Π
    int size() const { return static_cast<int>(top.size()); }
};

inline Corridors corridors(const std::vector<Sides>& o, size_t n) {
    Corridors c;
    c.part = part_of(o, n);
    int m = static_cast<int>(o.size());
    for (int i = 0; i < m; ++i) {
        if (small_sides(o[i])) throw std::invalid_argument("corridors need a regular tree set");
        bool maximal = true;
        for (int j = 0; j < m && maximal; ++j)
            if (j != i && sides_le(o[i], o[j]) && !sides_le(o[j], o[i])) maximal = false;
        bool dup = false;
        for (int t : c.top)
            if (sides_le(o[t], o[i]) && sides_le(o[i], o[t])) dup = true;
        if (maximal && !dup) c.top.push_back(i);
    }
    c.of_member.assign(m, -1);
    c.region.assign(c.top.size(), Bits(n));
    for (int i = 0; i < m; ++i) {
        for (int g = 0; g < c.size(); ++g) {
            if (!sides_le(o[i], o[c.top[g]])) continue;
            if (c.of_member[i] >= 0) throw std::logic_error("member below two maximal elements");
            c.of_member[i] = g;
        }
        if (c.of_member[i] < 0) throw std::logic_error("member below no maximal element");
        c.region[c.of_member[i]] |= o[i].a;
    }
    for (const auto& r : c.region) c.xi.push_back(r & c.part);
    c.of_vertex.assign(n, -1);
    for (size_t v = 0; v < n; ++v) {
        if (c.part[v]) continue;
        for (int g = 0; g < c.size(); ++g) {
            if (!c.region[g][v]) continue;
            if (c.of_vertex[v] >= 0) throw std::logic_error("corridor regions overlap outside the part");
            c.of_vertex[v] = g;
        }
        if (c.of_vertex[v] < 0) throw std::logic_error("vertex outside the part lies in no corridor region");
    }
    return c;
}

// G[Π] plus an edge between any two vertices of Π sharing a separator of O.
inline Adj torso(const Adj& g, const std::vector<Sides>& o, const Bits& part) {
    size_t n = g.size();
    std::vector<std::set<int>> nb(n);
    for (size_t v = 0; v < n; ++v)
        if (part[v])
            for (int w : g[v])
                if (part[w]) nb[v].insert(w);
    for (const auto& s : o) {
        Bits sep = s.a & s.b & part;
        for (size_t x = sep.find_first(); x != Bits::npos; x = sep.find_next(x))
            for (size_t y = sep.find_next(x); y != Bits::npos; y = sep.find_next(y)) {
                nb[x].insert(static_cast<int>(y));
                nb[y].insert(static_cast<int>(x));
            }
    }
    Adj out(n);
    for (size_t v = 0; v < n; ++v) out[v].assign(nb[v].begin(), nb[v].end());
    return out;
}

inline bool connected_within(const Adj& g, const Bits& s) {
    size_t first = s.find_first();
    if (first == Bits::npos) return true;
    Bits seen(g.size());
    std::vector<int> stack{static_cast<int>(first)};
    seen[first] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g[v])
            if (s[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return seen == s;
}

// Executable forms of the corridor lemmas on a finite graph; each returns an empty string on success.
namespace corridor_checks {

inline std::string partition(const Corridors& c, size_t n) {
    for (size_t v = 0; v < n; ++v) {
        int hits = 0;
        for (const auto& r : c.region) hits += r[v] && !c.part[v];
        if (!c.part[v] && hits != 1) return "vertex " + std::to_string(v) + " lies in " + std::to_string(hits) + " regions outside the part";
    }
    return {};
}

inline std::string comparable(const std::vector<Sides>& o) {
    for (size_t i = 0; i < o.size(); ++i)
        for (size_t j = 0; j < o.size(); ++j) {
            if (i == j) continue;
            if ((o[i].a - o[j].b).none()) continue;
            if (!sides_le(o[i], o[j]) && !sides_le(o[j], o[i])) return "members " + std::to_string(i) + "," + std::to_string(j) + " incomparable";
        }
    return {};
}

// Some member of γ has U ⊆ C and U \ Π ⊆ C \ D, for U ⊆ A_γ.
inline std::string covering_member(const std::vector<Sides>& o, const Corridors& c, const Bits& u, int g) {
    Bits outside = u - c.part;
    for (size_t i = 0; i < o.size(); ++i) {
        if (c.of_member[i] != g) continue;
        if (u.is_subset_of(o[i].a) && outside.is_subset_of(o[i].a - o[i].b)) return {};
    }
    return "no member of corridor " + std::to_string(g) + " covers the set";
}

inline std::string membership_by_region(const std::vector<Sides>& o, const Corridors& c) {
    for (size_t i = 0; i < o.size(); ++i)
        for (int g = 0; g < c.size(); ++g) {
            bool in = c.of_member[i] == g;
            bool inside = (o[i].a - o[i].b).is_subset_of(c.region[g]);
            if (in != inside) return "member " + std::to_string(i) + " vs corridor " + std::to_string(g);
        }
    return {};
}

inline std::string strict_container(const std::vector<Sides>& o, const Bits& f) {
    for (const auto& s : o)
        if (f.is_subset_of(s.a - s.b)) return {};
    return "connected set outside the part not strictly inside any member";
}

inline bool is_clique(const Adj& g, const Bits& s) {
    for (size_t x = s.find_first(); x != Bits::npos; x = s.find_next(x))
        for (size_t y = s.find_next(x); y != Bits::npos; y = s.find_next(y))
            if (std::find(g[x].begin(), g[x].end(), static_cast<int>(y)) == g[x].end()) return false;
    return true;
}

inline std::string xi_cliques(const Adj& g, const Corridors& c) {
    for (int k = 0; k < c.size(); ++k)
        if (!is_clique(g, c.xi[k])) return "A_γ ∩ Π of corridor " + std::to_string(k) + " is not a clique";
    return {};
}

// Every path through G - Π between two vertices of Π has its ends in a common separator.
inline std::string part_paths(const Adj& g, const std::vector<Sides>& o, const Bits& part) {
    size_t n = g.size();
    std::vector<char> removed(n);
    for (size_t v = 0; v < n; ++v) removed[v] = part[v];
    int cnt = 0;
    auto comp = finite_components(g, removed, &cnt);
    for (int k = 0; k < cnt; ++k) {
        Bits nb(n);
        for (size_t v = 0; v < n; ++v)
            if (comp[v] == k)
                for (int w : g[v])
                    if (part[w]) nb[w] = true;
        for (size_t x = nb.find_first(); x != Bits::npos; x = nb.find_next(x))
            for (size_t y = nb.find_next(x); y != Bits::npos; y = nb.find_next(y)) {
                bool ok = false;
                for (const auto& s : o)
                    if (s.a[x] && s.b[x] && s.a[y] && s.b[y]) ok = true;
                if (!ok) return "ends " + std::to_string(x) + "," + std::to_string(y) + " share no separator";
            }
    }
    return {};
}

}  // namespace corridor_checks

// An orientation of a window tree set together with its part, completed beyond the window.
struct PartView {
    const WindowTreeSet* t = nullptr;
    std::vector<int> o;       // element ids of t->sys
    std::vector<Sides> sides;
    std::vector<int> analog;  // universe vertex -> vertex with ω indices clamped into the window
    Corridors cor;

    const Universe& u() const { return t->table.u; }
    OSep oriented(int idx) const {
        int e = o[idx];
        return e & 1 ? t->members[e / 2].sep.inv() : t->members[e / 2].sep;
    }
};

inline std::vector<int> analog_map(const SymbolicGraph& G, const Universe& u, int w) {
    std::vector<int> out(u.size());
    for (int i = 0; i < u.size(); ++i) {
        VRef v = u.ref(i);
        if (v.is_inst()) {
            auto ch = G.chain(v.id);
            for (size_t d = 0; d < ch.size(); ++d)
                if (G.omega(ch[d]) && v.path[d] >= w) v.path[d] = w - 1;
        }
        out[i] = u.e.at(v);
    }
    return out;
}

inline bool beyond_window(const Universe& u, const std::vector<int>& analog, int i) { return analog[i] != i && u.ref(i).is_inst(); }

inline PartView part_view(const WindowTreeSet& t, std::vector<int> o) {
    if (!is_consistent(t.sys, o) || static_cast<int>(o.size()) != t.size()) throw std::invalid_argument("not a consistent orientation of the tree set");
    PartView p;
    p.t = &t;
    p.o = std::move(o);
    for (int e : p.o) {
        const Sides& s = t.table.s[e / 2];
        p.sides.push_back(e & 1 ? Sides{s.b, s.a} : s);
    }
    const Universe& u = t.table.u;
    p.analog = analog_map(*t.g, u, t.w);
    size_t n = u.size();
    p.cor = corridors(p.sides, n);
    Bits raw = p.cor.part;
    for (size_t v = 0; v < n; ++v) {
        p.cor.part[v] = raw[p.analog[v]];
        if (p.cor.part[v] && beyond_window(u, p.analog, static_cast<int>(v)))
            throw std::logic_error("part contains infinitely many instances");
    }
    for (int g = 0; g < p.cor.size(); ++g) p.cor.xi[g] = p.cor.region[g] & p.cor.part;
    for (size_t v = 0; v < n; ++v) p.cor.of_vertex[v] = p.cor.part[v] ? -1 : p.cor.of_vertex[p.analog[v]];
    return p;
}

inline VSet part_vertices(const PartView& p) {
    VSet out;
    for (int i = 0; i < p.u().size(); ++i)
        if (p.cor.part[i]) out.push_back(p.u().ref(i));
    return normalized(out);
}

// Modified torso: G[Π] with the rays and cliques of G inside Π, plus one ω-clique per distinct A_γ ∩ Π.
struct ModifiedTorso {
    SymbolicGraph h;
    std::vector<int> core_of;        // universe vertex -> H core index or -1
    std::vector<int> ray_of;         // G ray -> H ray or -1
    std::vector<int> clique_of;      // G clique -> H clique or -1
    std::vector<int> corridor_clique;  // corridor -> H clique
};

inline ModifiedTorso modified_torso(const PartView& p) {
    const auto& G = *p.t->g;
    const Universe& u = p.u();
    ModifiedTorso mt;
    mt.core_of.assign(u.size(), -1);
    for (int i = 0; i < u.size(); ++i) {
        const VRef& v = u.ref(i);
        if (!p.cor.part[i] || v.is_ray() || v.is_clique()) continue;
        mt.core_of[i] = static_cast<int>(mt.h.core.size());
        mt.h.core.push_back(to_string(G, v));
    }
    if (mt.h.core.empty()) throw std::invalid_argument("empty part");
    for (int i = 0; i < u.size(); ++i)
        for (int j : u.e.adj[i])
            if (i < j && mt.core_of[i] >= 0 && mt.core_of[j] >= 0) mt.h.core_edges.emplace_back(mt.core_of[i], mt.core_of[j]);
    auto core_idx = [&](int c) { return mt.core_of[u.e.at(VRef::core_v(c))]; };
    mt.ray_of.assign(G.rays.size(), -1);
    for (int r = 0; r < static_cast<int>(G.rays.size()); ++r) {
        if (!p.cor.part[u.e.at(VRef::ray(r, u.m - 1))]) continue;
        RayClass rc{G.rays[r].id, core_idx(G.rays[r].attach), {}};
        for (int d : G.rays[r].dom) rc.dom.push_back(core_idx(d));
        mt.ray_of[r] = static_cast<int>(mt.h.rays.size());
        mt.h.rays.push_back(rc);
    }
    mt.clique_of.assign(G.cliques.size(), -1);
    for (int q = 0; q < static_cast<int>(G.cliques.size()); ++q) {
        if (!p.cor.part[u.e.at(VRef::clique(q, u.m - 1))]) continue;
        CliqueClass cc{G.cliques[q].id, {}};
        for (int a : G.cliques[q].attach) cc.attach.push_back(core_idx(a));
        mt.clique_of[q] = static_cast<int>(mt.h.cliques.size());
        mt.h.cliques.push_back(cc);
    }
    std::map<std::vector<int>, int> by_xi;
    for (int g = 0; g < p.cor.size(); ++g) {
        std::vector<int> att;
        const Bits& xi = p.cor.xi[g];
        for (size_t v = xi.find_first(); v != Bits::npos; v = xi.find_next(v)) {
            if (mt.core_of[v] < 0) throw std::logic_error("corridor separator outside the torso core");
            att.push_back(mt.core_of[v]);
        }
        if (att.empty()) throw std::logic_error("corridor with empty separator");
        auto it = by_xi.find(att);
        if (it == by_xi.end()) {
            it = by_xi.emplace(att, static_cast<int>(mt.h.cliques.size())).first;
            mt.h.cliques.push_back({"K" + std::to_string(by_xi.size() - 1), att});
        }
        mt.corridor_clique.push_back(it->second);
    }
    return mt;
}

inline std::vector<TanglePoint> ends_of(const SymbolicGraph& h) {
    std::vector<TanglePoint> out;
    for (int r = 0; r < static_cast<int>(h.rays.size()); ++r) out.push_back(TanglePoint::ray(r));
    for (int q = 0; q < static_cast<int>(h.cliques.size()); ++q) out.push_back(TanglePoint::clique(q));
    return out;
}

struct ProxyUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The corridor a tangle point walks, or -1 when it lies in the closure of the part.
inline int walked_corridor(const PartView& p, const TanglePoint& t) {
    const Universe& u = p.u();
    if (t.kind == TanglePoint::Kind::Ray) return p.cor.of_vertex[u.e.at(VRef::ray(t.anchor, u.m - 1))];
    if (t.kind == TanglePoint::Kind::Clique) return p.cor.of_vertex[u.e.at(VRef::clique(t.anchor, u.m - 1))];
    int found = -1;
    for (int i = 0; i < static_cast<int>(p.o.size()); ++i) {
        if (orient(t, p.oriented(i))) continue;
        int g = p.cor.of_member[i];
        if (found >= 0 && found != g) throw std::logic_error("tangle point walks two corridors");
        found = g;
    }
    if (found < 0) throw ProxyUndefined("proxy undefined: the orientation contains the star of " + to_string(*p.t->g, t));
    return found;
}

inline TanglePoint tangle_proxy(const PartView& p, const ModifiedTorso& mt, const TanglePoint& t) {
    int g = walked_corridor(p, t);
    if (g >= 0) return TanglePoint::clique(mt.corridor_clique[g]);
    if (t.kind == TanglePoint::Kind::Ray) return TanglePoint::ray(mt.ray_of[t.anchor]);
    return TanglePoint::clique(mt.clique_of[t.anchor]);
}

inline VRef h_vertex(const ModifiedTorso& mt, const Universe& u, int i) {
    const VRef& v = u.ref(i);
    if (v.is_ray()) return VRef::ray(mt.ray_of[v.id], v.v);
    if (v.is_clique()) return VRef::clique(mt.clique_of[v.id], v.v);
    return VRef::core_v(mt.core_of[i]);
}

inline VSet to_graph_vertices(const ModifiedTorso& mt, const Universe& u, const VSet& hs) {
    VSet out;
    for (const auto& hv : hs) {
        if (!hv.is_core()) throw std::logic_error("torso separator meets an added clique");
        for (int i = 0; i < u.size(); ++i)
            if (mt.core_of[i] == hv.id) out.push_back(u.ref(i));
    }
    return normalized(out);
}

// Some pair of ends of H is distinguished by s at their distinction order.
inline bool is_H_relevant(const SymbolicGraph& h, const OSep& s) {
    auto ends = ends_of(h);
    for (size_t i = 0; i < ends.size(); ++i)
        for (size_t j = i + 1; j < ends.size(); ++j)
            if (distinguishes(s, ends[i], ends[j]) && s.order() == distinction_order(h, ends[i], ends[j])) return true;
    return false;
}

// Agrees with s on Π; each corridor region goes to the side of its proxy.
inline OSep lift(const PartView& p, const ModifiedTorso& mt, const OSep& s) {
    const Universe& u = p.u();
    Bits a(u.size()), b(u.size());
    int generic = s.cs->b + 4;
    for (int i = 0; i < u.size(); ++i) {
        if (p.cor.part[i]) {
            VRef hv = h_vertex(mt, u, i);
            a[i] = s.in_A(hv);
            b[i] = s.in_B(hv);
        } else {
            bool to_b = s.strictly_B(VRef::clique(mt.corridor_clique[p.cor.of_vertex[i]], generic));
            a[i] = !to_b;
            b[i] = to_b;
        }
    }
    OSep out = from_sides(*p.t->g, u, a, b);
    if (out.separator() != to_graph_vertices(mt, u, s.separator())) throw std::logic_error("lift changed the separator");
    return out;
}

}  // namespace tf
