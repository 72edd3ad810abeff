#pragma once

#include <limits>

#include "separation.hpp"

namespace tf {

struct TanglePoint {
    enum class Kind : std::uint8_t { Ray, Clique, Crit };
    Kind kind = Kind::Ray;
    int anchor = -1;  // ray or clique class
    VSet x;           // the critical set
    int entry = -1;   // crit entry this set instantiates
    bool family = false;

    static TanglePoint ray(int r) { return {Kind::Ray, r, {}, -1, false}; }
    static TanglePoint clique(int q) { return {Kind::Clique, q, {}, -1, false}; }
    static TanglePoint critical(VSet x, int entry = -1, bool family = false) {
        return {Kind::Crit, -1, normalized(std::move(x)), entry, family};
    }

    bool is_end() const { return kind != Kind::Crit; }
    bool same(const TanglePoint& o) const { return kind == o.kind && anchor == o.anchor && x == o.x; }
};

inline std::string to_string(const SymbolicGraph& g, const TanglePoint& t) {
    switch (t.kind) {
        case TanglePoint::Kind::Ray: return "End(" + g.rays[t.anchor].id + ")";
        case TanglePoint::Kind::Clique: return "End(" + g.cliques[t.anchor].id + ")";
        case TanglePoint::Kind::Crit: return "Crit(" + to_string(g, t.x) + ")";
    }
    return "?";
}

struct AmbiguousOrientation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Where a tangle point lives relative to G - X: one component, or the full-neighbourhood families of its set.
struct PointLoc {
    bool hat = false;
    Loc loc;
    VSet hat_of;
};

inline PointLoc locate_point(const ComponentSet& cs, const TanglePoint& t) {
    PointLoc p;
    switch (t.kind) {
        case TanglePoint::Kind::Ray: p.loc = cs.locate(VRef::ray(t.anchor, cs.b)); break;
        case TanglePoint::Kind::Clique: p.loc = cs.locate(VRef::clique(t.anchor, cs.b)); break;
        case TanglePoint::Kind::Crit:
            for (const auto& v : t.x)
                if (!cs.in_x(v)) {
                    p.loc = cs.locate(v);
                    return p;
                }
            p.hat = true;
            p.hat_of = t.x;
            break;
    }
    return p;
}

inline std::vector<int> families_with_nbhd(const ComponentSet& cs, const VSet& nb) {
    std::vector<int> out;
    for (int f = 0; f < cs.family_count(); ++f)
        if (cs.families[f].nbhd == nb) out.push_back(f);
    return out;
}

// True iff the tangle point lives on the B side, i.e. s itself belongs to it.
inline bool orient(const TanglePoint& t, const OSep& s) {
    PointLoc p = locate_point(*s.cs, t);
    if (!p.hat) return s.selected(p.loc);
    auto fams = families_with_nbhd(*s.cs, p.hat_of);
    if (fams.empty()) throw std::logic_error("critical set without full-neighbourhood families");
    bool in = false, out = false;
    for (int f : fams) {
        in = in || s.sel.fam[f].infinitely_in();
        out = out || s.sel.fam[f].infinitely_out();
    }
    if (in && out) throw AmbiguousOrientation("ambiguous orientation: infinitely many full-neighbourhood components on both sides");
    return in;
}

inline OSep oriented_by(const TanglePoint& t, const OSep& s) { return orient(t, s) ? s : s.inv(); }

inline bool distinguishes(const OSep& s, const TanglePoint& t1, const TanglePoint& t2) {
    if (t1.same(t2)) throw std::invalid_argument("a tangle point cannot be distinguished from itself");
    return orient(t1, s) != orient(t2, s);
}

inline bool locs_differ(const PointLoc& a, const PointLoc& b) {
    if (a.hat && b.hat) return a.hat_of != b.hat_of;
    if (a.hat != b.hat) return true;
    return !(a.loc == b.loc);
}

// Some separation with separator exactly cs.x distinguishes the two points.
inline bool separable_at(const ComponentSet& cs, const TanglePoint& t1, const TanglePoint& t2) {
    return locs_differ(locate_point(cs, t1), locate_point(cs, t2));
}

// A separation with separator cs.x that puts t1 on the A side and t2 on the B side.
inline OSep witness_at(std::shared_ptr<const ComponentSet> cs, const TanglePoint& t1, const TanglePoint& t2) {
    PointLoc p1 = locate_point(*cs, t1), p2 = locate_point(*cs, t2);
    if (!locs_differ(p1, p2)) throw std::invalid_argument("separator does not distinguish the points");
    Selection s = empty_selection(*cs);
    if (p2.hat) {
        for (int f : families_with_nbhd(*cs, p2.hat_of)) s.fam[f].mode = FamilyPick::All;
    } else if (p2.loc.named >= 0) {
        s.named[p2.loc.named] = 1;
    } else {
        s.fam[p2.loc.fam].flip.insert(p2.loc.j);
    }
    if (!p1.hat && p1.loc.fam >= 0 && s.fam[p1.loc.fam].has(p1.loc.j)) s.fam[p1.loc.fam].flip.insert(p1.loc.j);
    return make_osep(std::move(cs), std::move(s));
}

// Tangle points with family members limited to ω indices below `reps`.
inline std::vector<TanglePoint> tangle_points(const SymbolicGraph& G, int reps = 3) {
    std::vector<TanglePoint> out;
    for (int r = 0; r < static_cast<int>(G.rays.size()); ++r) out.push_back(TanglePoint::ray(r));
    for (int q = 0; q < static_cast<int>(G.cliques.size()); ++q) out.push_back(TanglePoint::clique(q));
    auto entries = crit(G);
    for (int e = 0; e < static_cast<int>(entries.size()); ++e)
        for (const auto& ctx : instance_paths(G, entries[e].scope, reps))
            out.push_back(TanglePoint::critical(entries[e].instantiate(ctx), e, entries[e].family));
    return out;
}

inline bool has_infinitely_many_points(const SymbolicGraph& G) {
    for (const auto& e : crit(G))
        if (e.family) return true;
    return false;
}

// Vertices over which the brute-force oracle enumerates separators.
inline VSet relevant_universe(const SymbolicGraph& G, int inst = 3, int ray_pos = 5, int clique_n = 3) {
    Expansion e = expand(G, std::max({inst, ray_pos, clique_n}));
    VSet out;
    for (const auto& v : e.refs) {
        if (v.is_inst()) {
            auto ch = G.chain(v.id);
            bool ok = true;
            for (size_t d = 0; d < ch.size(); ++d)
                if (G.omega(ch[d]) && v.path[d] >= inst) ok = false;
            if (ok) out.push_back(v);
        } else if (v.is_ray()) {
            if (v.v < ray_pos) out.push_back(v);
        } else if (v.is_clique()) {
            if (v.v < clique_n) out.push_back(v);
        } else {
            out.push_back(v);
        }
    }
    return normalized(out);
}

struct OracleResult {
    int order = -1;  // -1: nothing found up to the bound
    VSet separator;
};

// Smallest (then lexicographically first) separator over the relevant universe.
inline OracleResult brute_force_distinction(const SymbolicGraph& G, const TanglePoint& t1, const TanglePoint& t2, int max_order = 4,
                                            const VSet* universe = nullptr) {
    if (t1.same(t2)) throw std::invalid_argument("a tangle point cannot be distinguished from itself");
    VSet uni = universe ? *universe : relevant_universe(G);
    int n = static_cast<int>(uni.size());
    for (int k = 0; k <= max_order && k <= n; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VSet y;
            for (int i : idx) y.push_back(uni[i]);
            if (separable_at(*components(G, y), t1, t2)) return {k, normalized(y)};
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {};
}

namespace detail {

// Unit-capacity vertex cuts by augmenting paths on the split graph.
class VertexCut {
public:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    VertexCut(const std::vector<std::vector<int>>& adj, const std::vector<int>& cap, const std::vector<int>& src, const std::vector<int>& snk)
        : n_(static_cast<int>(adj.size())), s_(2 * n_), t_(2 * n_ + 1), g_(2 * n_ + 2) {
        for (int v = 0; v < n_; ++v) {
            add(2 * v, 2 * v + 1, cap[v]);
            for (int w : adj[v]) add(2 * v + 1, 2 * w, kInf);
        }
        for (int v : src) add(s_, 2 * v, kInf);
        for (int v : snk) add(2 * v + 1, t_, kInf);
    }

    int maxflow(int limit) {
        int flow = 0;
        while (flow < limit) {
            std::vector<int> pe(g_.size(), -1), pv(g_.size(), -1);
            std::queue<int> q;
            q.push(s_);
            pv[s_] = s_;
            while (!q.empty() && pv[t_] < 0) {
                int v = q.front();
                q.pop();
                for (int i = 0; i < static_cast<int>(g_[v].size()); ++i) {
                    const auto& e = edges_[g_[v][i]];
                    if (e.cap > 0 && pv[e.to] < 0) {
                        pv[e.to] = v;
                        pe[e.to] = g_[v][i];
                        q.push(e.to);
                    }
                }
            }
            if (pv[t_] < 0) break;
            int f = kInf;
            for (int v = t_; v != s_; v = pv[v]) f = std::min(f, edges_[pe[v]].cap);
            if (f >= kInf) return kInf;
            for (int v = t_; v != s_; v = pv[v]) {
                edges_[pe[v]].cap -= f;
                edges_[pe[v] ^ 1].cap += f;
            }
            flow += f;
        }
        return flow;
    }

private:
    struct E {
        int to, cap;
    };
    void add(int a, int b, int c) {
        g_[a].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({b, c});
        g_[b].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({a, 0});
    }
    int n_, s_, t_;
    std::vector<std::vector<int>> g_;
    std::vector<E> edges_;
};

inline VSet other_anchor_vertices(const TanglePoint& t) {
    if (t.kind != TanglePoint::Kind::Crit) return {};
    return t.x;
}

// Expansion vertices standing for the tail of an end or the full-neighbourhood components of a critical set.
inline std::vector<int> terminals(const SymbolicGraph& G, const Expansion& e, const TanglePoint& t, const TanglePoint& other) {
    std::vector<int> out;
    if (t.kind == TanglePoint::Kind::Ray) return {e.at(VRef::ray(t.anchor, e.k - 1))};
    if (t.kind == TanglePoint::Kind::Clique) return {e.at(VRef::clique(t.anchor, e.k - 1))};
    auto cs = components(G, t.x);
    auto fams = families_with_nbhd(*cs, t.x);
    VSet avoid = other_anchor_vertices(other);
    std::set<std::pair<int, int>> blocked;
    for (const auto& v : avoid) {
        if (cs->in_x(v)) continue;
        Loc l = cs->locate(v);
        if (l.fam >= 0) blocked.insert({l.fam, l.j});
    }
    for (int i = 0; i < e.size(); ++i) {
        if (cs->in_x(e.refs[i])) continue;
        Loc l = cs->locate(e.refs[i]);
        if (l.fam < 0 || std::find(fams.begin(), fams.end(), l.fam) == fams.end()) continue;
        if (blocked.count({l.fam, l.j})) continue;
        out.push_back(i);
    }
    return out;
}

}  // namespace detail

struct MinSeparator {
    int order = -1;
    OSep sep;  // t1 on the A side, t2 on the B side
    int k = 0;  // expansion size that certified the cut
};

// Minimum-order separator via vertex cuts on expansions, lexicographically least among minimum cuts.
inline MinSeparator min_order_separator(const SymbolicGraph& G, const TanglePoint& t1, const TanglePoint& t2, int k_start = 0) {
    if (t1.same(t2)) throw std::invalid_argument("anchors are identical; no separator exists");
    int bound = static_cast<int>(G.core.size());
    auto touch = [&](const TanglePoint& t) { return t.kind == TanglePoint::Kind::Crit ? touch_bound(G, t.x) : 0; };
    int k = std::max({k_start, bound + 1, touch(t1) + 2, touch(t2) + 2, 2});
    for (int attempt = 0; attempt < 6; ++attempt, k += 2) {
        Expansion e = expand(G, k);
        auto src = detail::terminals(G, e, t1, t2);
        auto snk = detail::terminals(G, e, t2, t1);
        std::vector<int> cap(e.size(), 1);
        for (int v : src) cap[v] = detail::VertexCut::kInf;
        for (int v : snk) cap[v] = detail::VertexCut::kInf;
        auto flow_with = [&](const std::vector<char>& forced) {
            std::vector<int> c = cap;
            std::vector<std::vector<int>> adj = e.adj;
            for (int v = 0; v < e.size(); ++v)
                if (forced[v]) {
                    adj[v].clear();
                    c[v] = 0;
                }
            for (auto& a : adj) a.erase(std::remove_if(a.begin(), a.end(), [&](int w) { return forced[w] != 0; }), a.end());
            detail::VertexCut vc(adj, c, src, snk);
            return vc.maxflow(k + 1);
        };
        std::vector<char> forced(e.size(), 0);
        int d = flow_with(forced);
        if (d >= k) continue;
        std::vector<int> order(e.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return e.refs[a] < e.refs[b]; });
        int remaining = d;
        VSet y;
        for (int v : order) {
            if (remaining == 0) break;
            if (cap[v] != 1) continue;
            forced[v] = 1;
            if (flow_with(forced) == remaining - 1) {
                --remaining;
                y.push_back(e.refs[v]);
            } else {
                forced[v] = 0;
            }
        }
        auto cs = components(G, y);
        if (!separable_at(*cs, t1, t2)) continue;
        return {d, witness_at(cs, t1, t2), k};
    }
    throw std::runtime_error("no finite separator found for " + to_string(G, t1) + " / " + to_string(G, t2));
}

inline int distinction_order(const SymbolicGraph& G, const TanglePoint& t1, const TanglePoint& t2) {
    return min_order_separator(G, t1, t2).order;
}

inline bool efficiently_distinguishes(const OSep& s, const TanglePoint& t1, const TanglePoint& t2) {
    return distinguishes(s, t1, t2) && s.order() == distinction_order(s.graph(), t1, t2);
}

// Smallest cofinal shape above s for a critical point: (X, C) with C the full-neighbourhood components of X inside the strict B side.
inline OSep cofinal_bound(const TanglePoint& t, const OSep& s) {
    if (t.kind != TanglePoint::Kind::Crit) throw std::invalid_argument("cofinal bound needs a critical tangle point");
    if (!orient(t, s)) throw std::invalid_argument("separation does not point towards the tangle point");
    const auto& G = s.graph();
    auto cs = components(G, t.x);
    Universe u(G, std::max(s.bound(), cs->b) + 2);
    std::vector<char> bad_named(cs->named_count(), 0);
    std::set<std::pair<int, int>> bad_member;
    for (int i = 0; i < u.size(); ++i) {
        const VRef& v = u.ref(i);
        Loc l = cs->locate(v);
        if (l.in_x) continue;
        if (s.strictly_B(v)) continue;
        if (l.named >= 0) bad_named[l.named] = 1;
        if (l.fam >= 0) bad_member.insert({l.fam, l.j});
    }
    HatView h = hat_components(*cs);
    Selection sel = empty_selection(*cs);
    for (int i : h.named) sel.named[i] = !bad_named[i];
    for (int f : h.families) {
        auto& p = sel.fam[f];
        p.mode = FamilyPick::All;
        for (auto [ff, j] : bad_member)
            if (ff == f) {
                if (j >= u.m - 2) throw std::logic_error("cofinal bound is not cofinite");
                p.flip.insert(j);
            }
    }
    return make_osep(cs, sel);
}

}  // namespace tf
