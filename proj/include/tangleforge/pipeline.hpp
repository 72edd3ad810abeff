#pragma once

#include <deque>

#include "corridor.hpp"

namespace tf {

// Each member points to the side holding the component of G - X that Z meets.
inline std::vector<int> orientation_from_Z(const WindowTreeSet& t, const VSet& z) {
    if (!is_generous_set(*t.g, z)) throw std::invalid_argument("Z is not generous");
    for (const auto& c : crit_window(*t.g, t.w))
        if (subset_of(z, c)) throw std::invalid_argument("Z lies inside a critical vertex set");
    std::vector<int> o;
    for (int i = 0; i < t.size(); ++i) {
        const OSep& s = t.members[i].sep;
        auto loc = component_meeting(*s.cs, z);
        if (!loc) throw std::logic_error("Z inside a separator of the tree set");
        o.push_back(s.selected(*loc) ? 2 * i : 2 * i + 1);
    }
    if (!is_consistent(t.sys, o)) throw std::logic_error("orientation towards Z is inconsistent");
    return o;
}

inline bool inside_critical_set(const SymbolicGraph& G, const VSet& z, int w) {
    for (const auto& c : crit_window(G, w))
        if (subset_of(z, c)) return true;
    return false;
}

// A member of T with separator Z distinguishing the points, when Z lies inside a critical set.
inline std::optional<int> member_inside_crit(const WindowTreeSet& t, const TanglePoint& t1, const TanglePoint& t2, const VSet& z) {
    if (!inside_critical_set(*t.g, z, t.w)) return std::nullopt;
    for (int i = 0; i < t.size(); ++i) {
        const OSep& s = t.members[i].sep;
        if (s.separator() == z && distinguishes(s, t1, t2)) return i;
    }
    throw std::logic_error("no member of T with separator " + to_string(*t.g, z) + " distinguishes " + to_string(*t.g, t1) + " and " +
                           to_string(*t.g, t2));
}

// Nested separations of H distinguishing every two ends efficiently; greedy in increasing distinction order.
inline std::vector<OSep> end_tree_set(const SymbolicGraph& h) {
    auto ends = ends_of(h);
    struct Pair {
        int d, i, j;
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < static_cast<int>(ends.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(ends.size()); ++j) pairs.push_back({distinction_order(h, ends[i], ends[j]), i, j});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d < b.d; });
    VSet uni = relevant_universe(h, 0, 3, 0);
    std::vector<OSep> out;
    for (const auto& p : pairs) {
        const auto& e1 = ends[p.i];
        const auto& e2 = ends[p.j];
        bool done = false;
        for (const auto& m : out)
            if (m.order() == p.d && distinguishes(m, e1, e2)) done = true;
        if (done) continue;
        int n = static_cast<int>(uni.size());
        std::vector<int> idx(p.d);
        std::iota(idx.begin(), idx.end(), 0);
        std::optional<OSep> pick;
        while (!pick && p.d <= n) {
            VSet y;
            for (int i : idx) y.push_back(uni[i]);
            auto cs = components(h, y);
            int nc = cs->named_count();
            if (cs->family_count() > 0) throw std::logic_error("modified torso with replicated classes");
            for (int mask = 1; mask + 1 < (1 << nc) && !pick; ++mask) {
                Selection s = empty_selection(*cs);
                for (int c = 0; c < nc; ++c) s.named[c] = mask >> c & 1;
                OSep cand = make_osep(cs, s);
                if (!distinguishes(cand, e1, e2)) continue;
                bool nested = true;
                for (const auto& m : out)
                    if (!sep_nested(m, cand)) nested = false;
                if (nested) pick = cand;
            }
            int i = p.d - 1;
            while (i >= 0 && idx[i] == n - p.d + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < p.d; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!pick)
            throw std::runtime_error("no nested separator of order " + std::to_string(p.d) + " for " + to_string(h, e1) + " / " + to_string(h, e2));
        out.push_back(*pick);
    }
    return out;
}

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

inline void record(std::vector<Check>& cs, const std::string& name, bool ok, const std::string& detail = {}) {
    for (auto& c : cs)
        if (c.name == name) {
            if (c.ok && !ok) {
                c.ok = false;
                c.detail = detail;
            }
            return;
        }
    cs.push_back({name, ok, ok ? std::string() : detail});
}

inline bool all_ok(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.ok) return false;
    return true;
}

struct Certificate {
    TanglePoint t1, t2;
    VSet z;            // canonical efficient separator
    int order = -1;    // distinction order from the flow engine
    int oracle = -1;   // brute-force order, -1 when not run
    int member = -1;   // index into Decomposition::all
    bool ok = false;
};

struct TorsoRun {
    VSet z;
    PartView view;
    ModifiedTorso mt;
    std::vector<OSep> th;
    std::vector<int> lifted;  // indices into Decomposition::all
};

struct Provenance {
    bool from_T = true;
    int torso = -1;
    int h_member = -1;
};

struct Decomposition {
    std::shared_ptr<const SymbolicGraph> g0;
    std::shared_ptr<const SymbolicGraph> g;  // clique-ified on 𝒴
    WindowTreeSet t;
    std::deque<TorsoRun> torsos;  // separations of H point into each run; never moved
    std::vector<OSep> all;  // T′: members of T first, then lifts
    std::vector<Provenance> prov;
    std::vector<TanglePoint> points;
    std::vector<Certificate> certs;
    std::vector<Check> checks;
    int w = 0;
    int reps = 0;
};

struct PipelineOptions {
    int w = 4;
    int reps = 3;
    bool oracle = true;
    int oracle_bound = 4;
};

inline std::vector<int> same_orientation_run(const Decomposition& d, const std::vector<int>& o) {
    for (int r = 0; r < static_cast<int>(d.torsos.size()); ++r)
        if (d.torsos[r].view.o == o) return {r};
    return {};
}

inline void lift_checks(Decomposition& d, TorsoRun& run, int r) {
    const auto& h = run.mt.h;
    for (size_t i = 0; i < run.th.size(); ++i) {
        record(d.checks, "end tree set members are H-relevant", is_H_relevant(h, run.th[i]), describe(run.th[i]));
        const OSep& lifted = d.all[run.lifted[i]];
        record(d.checks, "lift keeps the separator", lifted.separator() == to_graph_vertices(run.mt, run.view.u(), run.th[i].separator()));
        record(d.checks, "lifts are tame", is_tame(lifted), describe(lifted));
    }
    for (size_t i = 0; i < run.th.size(); ++i)
        for (size_t j = 0; j < run.th.size(); ++j) {
            if (i == j) continue;
            for (int fi = 0; fi < 2; ++fi)
                for (int fj = 0; fj < 2; ++fj) {
                    OSep a = fi ? run.th[i].inv() : run.th[i];
                    OSep b = fj ? run.th[j].inv() : run.th[j];
                    if (!sep_le(a, b)) continue;
                    OSep la = fi ? d.all[run.lifted[i]].inv() : d.all[run.lifted[i]];
                    OSep lb = fj ? d.all[run.lifted[j]].inv() : d.all[run.lifted[j]];
                    record(d.checks, "lift preserves the order", sep_le(la, lb), "torso " + std::to_string(r));
                }
        }
    for (const auto& t : d.points) {
        TanglePoint proxy;
        try {
            proxy = tangle_proxy(run.view, run.mt, t);
        } catch (const ProxyUndefined&) {
            continue;
        }
        for (size_t i = 0; i < run.th.size(); ++i)
            record(d.checks, "proxy orientation transfers to the lift", orient(proxy, run.th[i]) == orient(t, d.all[run.lifted[i]]),
                   to_string(*d.g, t) + " on torso " + std::to_string(r));
    }
    for (int g = 0; g < run.view.cor.size(); ++g)
        record(d.checks, "corridor separators are cliques", corridor_checks::is_clique(run.view.u().e.adj, run.view.cor.xi[g]));
}

// T plus lifts of end tree sets of modified torsos, with one certificate per pair of tangle points.
inline std::shared_ptr<Decomposition> decompose(const SymbolicGraph& G0, const PipelineOptions& opt = {}) {
    if (opt.reps >= opt.w) throw std::invalid_argument("representatives must stay below the analog index");
    auto d = std::make_shared<Decomposition>();
    d->w = opt.w;
    d->reps = opt.reps;
    d->g0 = std::make_shared<const SymbolicGraph>(G0);
    d->g = std::make_shared<const SymbolicGraph>(clique_ify(G0, generous_patterns(G0)));
    const SymbolicGraph& G = *d->g;
    d->t = starting_tree_set(G, opt.w);
    for (const auto& m : d->t.members) {
        d->all.push_back(m.sep);
        d->prov.push_back({});
    }
    record(d->checks, "T is nested", is_nested_set(d->t.sys));
    record(d->checks, "T is regular", is_regular(d->t.sys));
    for (const auto& m : d->t.members) {
        record(d->checks, "members of T are tame", is_tame(m.sep), describe(m.sep));
        record(d->checks, "members of T are generous", is_generous(m.sep), describe(m.sep));
    }
    d->points = tangle_points(G, opt.reps);
    for (size_t i = 0; i < d->points.size(); ++i)
        for (size_t j = i + 1; j < d->points.size(); ++j) {
            const auto& t1 = d->points[i];
            const auto& t2 = d->points[j];
            Certificate c{t1, t2, {}, -1, -1, -1, false};
            auto ms = min_order_separator(G, t1, t2);
            c.z = ms.sep.separator();
            c.order = ms.order;
            if (opt.oracle) c.oracle = brute_force_distinction(*d->g0, t1, t2, opt.oracle_bound).order;
            if (auto k = member_inside_crit(d->t, t1, t2, c.z)) {
                c.member = *k;
            } else {
                auto o = orientation_from_Z(d->t, c.z);
                int r;
                if (auto hit = same_orientation_run(*d, o); !hit.empty()) {
                    r = hit[0];
                } else {
                    r = static_cast<int>(d->torsos.size());
                    TorsoRun& run = d->torsos.emplace_back();
                    run.z = c.z;
                    run.view = part_view(d->t, o);
                    record(d->checks, "part contains Z", subset_of(c.z, part_vertices(run.view)), to_string(G, c.z));
                    run.mt = modified_torso(run.view);
                    run.th = end_tree_set(run.mt.h);
                    for (size_t k = 0; k < run.th.size(); ++k) {
                        run.lifted.push_back(static_cast<int>(d->all.size()));
                        d->all.push_back(lift(run.view, run.mt, run.th[k]));
                        d->prov.push_back({false, r, static_cast<int>(k)});
                    }
                    lift_checks(*d, d->torsos.back(), r);
                }
                const TorsoRun& run = d->torsos[r];
                TanglePoint p1 = tangle_proxy(run.view, run.mt, t1), p2 = tangle_proxy(run.view, run.mt, t2);
                record(d->checks, "proxies are distinguished at the order of Z",
                       !p1.same(p2) && distinction_order(run.mt.h, p1, p2) == static_cast<int>(c.z.size()),
                       to_string(G, t1) + " / " + to_string(G, t2));
                for (size_t k = 0; k < run.th.size() && c.member < 0; ++k)
                    if (!p1.same(p2) && distinguishes(run.th[k], p1, p2) && run.th[k].order() == c.order) c.member = run.lifted[k];
            }
            if (c.member >= 0) {
                const OSep& s = d->all[c.member];
                c.ok = distinguishes(s, t1, t2) && s.order() == c.order && (c.oracle < 0 || c.oracle == c.order);
            }
            record(d->checks, "every pair has an efficient certificate", c.ok, to_string(G, t1) + " / " + to_string(G, t2));
            d->certs.push_back(c);
        }
    auto table = side_table(G, d->all, opt.w + 2);
    auto sys = system_of(table.s);
    record(d->checks, "T' is nested", is_nested_set(sys));
    for (const auto& s : d->all) record(d->checks, "members of T' are tame", is_tame(s), describe(s));
    return d;
}

inline bool is_tough(const SymbolicGraph& g) { return crit(g).empty(); }

// G[Π] plus the edges inside separators of the orientation, with the rays and cliques of G inside Π.
inline SymbolicGraph torso_graph(const PartView& p) {
    const auto& G = *p.t->g;
    const Universe& u = p.u();
    Adj adj = torso(u.e.adj, p.sides, p.cor.part);
    SymbolicGraph h;
    std::vector<int> core_of(u.size(), -1);
    for (int i = 0; i < u.size(); ++i) {
        const VRef& v = u.ref(i);
        if (!p.cor.part[i] || v.is_ray() || v.is_clique()) continue;
        core_of[i] = static_cast<int>(h.core.size());
        h.core.push_back(to_string(G, v));
    }
    for (int i = 0; i < u.size(); ++i)
        for (int j : adj[i])
            if (i < j && core_of[i] >= 0 && core_of[j] >= 0) h.core_edges.emplace_back(core_of[i], core_of[j]);
    auto core_idx = [&](int c) { return core_of[u.e.at(VRef::core_v(c))]; };
    for (const auto& r : G.rays)
        if (p.cor.part[u.e.at(VRef::ray(static_cast<int>(&r - G.rays.data()), u.m - 1))]) {
            RayClass rc{r.id, core_idx(r.attach), {}};
            for (int x : r.dom) rc.dom.push_back(core_idx(x));
            h.rays.push_back(rc);
        }
    for (const auto& q : G.cliques)
        if (p.cor.part[u.e.at(VRef::clique(static_cast<int>(&q - G.cliques.data()), u.m - 1))]) {
            CliqueClass cc{q.id, {}};
            for (int a : q.attach) cc.attach.push_back(core_idx(a));
            h.cliques.push_back(cc);
        }
    return h;
}

struct ToughTorso {
    std::vector<int> o;
    VSet part;
    SymbolicGraph torso;
    bool tough = false;
    bool stable = false;
};

struct ToughDecomposition {
    std::shared_ptr<const SymbolicGraph> g;
    WindowTreeSet t;
    std::vector<ToughTorso> torsos;
    std::vector<Check> checks;
};

// A vertex inside the window that no separator of T contains.
inline int reference_vertex(const WindowTreeSet& t, const std::vector<int>& analog) {
    const Universe& u = t.table.u;
    for (int i = 0; i < u.size(); ++i) {
        if (analog[i] != i) continue;
        const VRef& v = u.ref(i);
        bool low = true;
        for (int j : v.path) low = low && j < t.w - 1;
        if (!low) continue;
        bool free = true;
        for (const auto& s : t.table.s) free = free && !(s.a[i] && s.b[i]);
        if (free) return i;
    }
    throw std::logic_error("no reference vertex outside all separators");
}

inline bool touches_analog(const TreeMember& m, int a) {
    for (const auto& v : m.sep.separator())
        for (int j : v.path)
            if (j == a) return true;
    return m.kind == TreeMember::Kind::Small && m.k.fam >= 0 && m.k.j == a;
}

// Components of expand(G,k) - Ξ meeting the given vertex set.
inline int components_meeting(const SymbolicGraph& G, int k, const VSet& xi, const VSet& within) {
    Expansion e = expand(G, k);
    std::vector<char> removed(e.size(), 0);
    for (const auto& v : xi) removed[e.at(v)] = 1;
    int cnt = 0;
    auto comp = finite_components(e.adj, removed, &cnt);
    std::set<int> met;
    for (const auto& v : within) {
        int i = e.find(v);
        if (i >= 0 && !removed[i]) met.insert(comp[i]);
    }
    return static_cast<int>(met.size());
}

inline bool stable_counts(const SymbolicGraph& G, const ToughTorso& tt, int w) {
    VSet core;
    for (const auto& v : tt.part)
        if (v.is_core() || v.is_inst()) core.push_back(v);
    VSet tcore;
    for (int i = 0; i < static_cast<int>(tt.torso.core.size()); ++i) tcore.push_back(VRef::core_v(i));
    int n = static_cast<int>(core.size());
    for (int size = 0; size <= std::min(3, n); ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VSet xi, txi;
            for (int i : idx) {
                xi.push_back(core[i]);
                txi.push_back(tcore[i]);
            }
            int base = components_meeting(G, w, xi, tt.part);
            for (int k = w + 1; k <= w + 2; ++k)
                if (components_meeting(G, k, xi, tt.part) != base) return false;
            VSet tall;
            Expansion te = expand(tt.torso, 2);
            int tb = components_meeting(tt.torso, 2, txi, te.refs);
            for (int k = 3; k <= 4; ++k)
                if (components_meeting(tt.torso, k, txi, expand(tt.torso, k).refs) != tb) return false;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

// T(crit(G), 𝒦) and the torsos of its consistent orientations inside the window.
inline ToughDecomposition tough_decomposition(const SymbolicGraph& G0, int w = 4) {
    ToughDecomposition r;
    r.g = std::make_shared<const SymbolicGraph>(G0);
    const SymbolicGraph& G = *r.g;
    r.t = crit_tree_set(G, w);
    record(r.checks, "tree set is nested", is_nested_set(r.t.sys));
    std::set<VSet> seps, crits;
    for (const auto& m : r.t.members) seps.insert(m.sep.separator());
    for (const auto& c : crit_window(G, w)) crits.insert(c);
    record(r.checks, "separators are exactly the critical sets", seps == crits);
    if (r.t.size() == 0) {
        ToughTorso tt;
        tt.torso = G;
        tt.tough = is_tough(G);
        tt.stable = true;
        record(r.checks, "torsos are tough", tt.tough);
        r.torsos.push_back(tt);
        return r;
    }
    auto analog = analog_map(G, r.t.table.u, w);
    int ref = reference_vertex(r.t, analog);
    std::vector<int> forced;
    for (int i = 0; i < r.t.size(); ++i)
        if (touches_analog(r.t.members[i], w - 1)) forced.push_back(r.t.table.s[i].b[ref] && !r.t.table.s[i].a[ref] ? 2 * i : 2 * i + 1);
    for (const auto& o : consistent_orientations(r.t.sys, forced)) {
        ToughTorso tt;
        tt.o = o;
        PartView p = part_view(r.t, o);
        tt.part = part_vertices(p);
        tt.torso = torso_graph(p);
        tt.tough = is_tough(tt.torso);
        tt.stable = stable_counts(G, tt, w);
        record(r.checks, "torsos are tough", tt.tough, to_string(G, tt.part));
        record(r.checks, "component counts stable across expansions", tt.stable, to_string(G, tt.part));
        r.torsos.push_back(std::move(tt));
    }
    return r;
}

// A ray tail or a full-neighbourhood component of t inside its walked corridor, outside the part.
inline VSet find_pointer(const PartView& p, const TanglePoint& t) {
    int g = walked_corridor(p, t);
    if (g < 0) throw std::invalid_argument("tangle point lies in the closure of the part");
    const Universe& u = p.u();
    Bits inside = p.cor.region[g] - p.cor.part;
    VSet out;
    if (t.kind != TanglePoint::Kind::Crit) {
        for (int pos = u.m - 1; pos >= 0; --pos) {
            VRef v = t.kind == TanglePoint::Kind::Ray ? VRef::ray(t.anchor, pos) : VRef::clique(t.anchor, pos);
            if (!inside[u.e.at(v)]) break;
            out.push_back(v);
        }
        return normalized(out);
    }
    auto cs = components(*p.t->g, t.x);
    for (const auto& l : hat_locs(*cs, p.t->w)) {
        VSet comp;
        bool ok = true;
        for (int i = 0; i < u.size() && ok; ++i) {
            if (p.analog[i] != i || cs->in_x(u.ref(i))) continue;
            if (!(cs->locate(u.ref(i)) == l)) continue;
            comp.push_back(u.ref(i));
            ok = inside[i];
        }
        if (ok && !comp.empty()) return normalized(comp);
    }
    throw std::logic_error("no pointer found for " + to_string(*p.t->g, t));
}

}  // namespace tf
