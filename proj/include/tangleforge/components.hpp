#pragma once

#include <memory>
#include <optional>

#include "model.hpp"

namespace tf {

// Infinitely many components of G - X, one per untouched instance at one level.
struct Family {
    int cls = -1;
    int level = 0;
    std::vector<int> ctx;    // indices above `level`
    std::set<int> excluded;  // touched indices at `level`; not members
    int rep_comp = -1;       // frame component of the generic member
    VSet nbhd;

    bool member(int j) const { return j >= 0 && !excluded.count(j); }
};

struct Loc {
    bool in_x = false;
    int named = -1;
    int fam = -1;
    int j = -1;
    bool operator==(const Loc&) const = default;
};

// Components of G - X, read off the frame expand(G, b+1) with b = touch_bound(X).
struct ComponentSet {
    const SymbolicGraph* g = nullptr;
    VSet x;
    int b = 0;
    Expansion frame;
    std::vector<int> comp;  // frame vertex -> component, -1 on X
    int ncomp = 0;
    std::vector<int> named;        // frame components described explicitly
    std::vector<int> named_of;     // frame component -> index in `named` or -1
    std::vector<int> family_of;    // frame component -> family whose generic member it is, or -1
    std::vector<Family> families;
    std::vector<VSet> comp_nbhd;   // per frame component
    std::vector<int> comp_first;   // a frame vertex of each component
    std::set<std::pair<int, std::vector<int>>> touched;  // (class, instance path) prefixes met by X

    bool in_x(const VRef& v) const { return std::binary_search(x.begin(), x.end(), v); }
    int order() const { return static_cast<int>(x.size()); }
    int named_count() const { return static_cast<int>(named.size()); }
    int family_count() const { return static_cast<int>(families.size()); }

    const VSet& named_nbhd(int i) const { return comp_nbhd[named[i]]; }
    VRef named_rep(int i) const { return frame.refs[comp_first[named[i]]]; }

    // A vertex of member j of family f.
    VRef family_rep(int f, int j) const {
        VRef v = frame.refs[comp_first[families[f].rep_comp]];
        v.path[families[f].level] = j;
        return v;
    }

    bool prefix_touched(int cls, const std::vector<int>& path, int level) const {
        return touched.count({cls, std::vector<int>(path.begin(), path.begin() + level + 1)}) > 0;
    }

    Loc locate(const VRef& v) const {
        Loc out;
        if (in_x(v)) {
            out.in_x = true;
            return out;
        }
        const auto& G = *g;
        if (v.is_inst()) {
            auto ch = G.chain(v.id);
            for (size_t d = 0; d < ch.size(); ++d) {
                if (!G.omega(ch[d]) || prefix_touched(ch[d], v.path, static_cast<int>(d))) continue;
                VRef rep = v;
                rep.path[d] = b;
                rep = fold(G, rep, b);
                int c = comp[frame.at(rep)];
                if (c >= 0 && family_of[c] >= 0 && families[family_of[c]].level == static_cast<int>(d)) {
                    out.fam = family_of[c];
                    out.j = v.path[d];
                    return out;
                }
                break;
            }
        }
        int c = comp[frame.at(fold(G, v, b))];
        if (c < 0 || named_of[c] < 0) throw std::logic_error("vertex " + to_string(G, v) + " has no named component");
        out.named = named_of[c];
        return out;
    }

    VSet nbhd_of(const Loc& l) const {
        if (l.named >= 0) return named_nbhd(l.named);
        if (l.fam >= 0) return families[l.fam].nbhd;
        return {};
    }
};

inline std::shared_ptr<const ComponentSet> components(const SymbolicGraph& G, VSet x) {
    x = normalized(std::move(x));
    for (const auto& v : x)
        if (!resolves(G, v)) throw std::invalid_argument("unresolvable vertex in deletion set");
    auto cs = std::make_shared<ComponentSet>();
    cs->g = &G;
    cs->x = x;
    cs->b = touch_bound(G, x);
    cs->frame = expand(G, cs->b + 1);
    const auto& fr = cs->frame;
    for (const auto& v : x)
        if (v.is_inst()) {
            auto ch = G.chain(v.id);
            for (size_t d = 0; d < ch.size(); ++d)
                cs->touched.insert({ch[d], std::vector<int>(v.path.begin(), v.path.begin() + d + 1)});
        }
    std::vector<char> removed(fr.size(), 0);
    for (const auto& v : x) removed[fr.at(v)] = 1;
    cs->comp = finite_components(fr.adj, removed, &cs->ncomp);
    int n = cs->ncomp;
    cs->comp_nbhd.assign(n, {});
    cs->comp_first.assign(n, -1);
    std::vector<std::vector<int>> members(n);
    for (int i = 0; i < fr.size(); ++i) {
        int c = cs->comp[i];
        if (c < 0) continue;
        if (cs->comp_first[c] < 0) cs->comp_first[c] = i;
        members[c].push_back(i);
        for (int w : fr.adj[i])
            if (cs->comp[w] < 0) cs->comp_nbhd[c].push_back(fr.refs[w]);
    }
    for (auto& nb : cs->comp_nbhd) nb = normalized(nb);
    cs->named_of.assign(n, -1);
    cs->family_of.assign(n, -1);
    for (int c = 0; c < n; ++c) {
        const VRef& u = fr.refs[cs->comp_first[c]];
        int level = -1;
        if (u.is_inst()) {
            auto ch = G.chain(u.id);
            for (size_t d = 0; d < ch.size(); ++d) {
                if (!G.omega(ch[d]) || cs->prefix_touched(ch[d], u.path, static_cast<int>(d))) continue;
                level = static_cast<int>(d);
                break;
            }
        }
        bool inside = level >= 0;
        if (inside) {
            int cls = G.chain(u.id)[level];
            std::vector<int> pre(u.path.begin(), u.path.begin() + level + 1);
            for (int i : members[c]) {
                const VRef& w = fr.refs[i];
                if (!w.is_inst() || w.path.size() <= static_cast<size_t>(level) || G.chain(w.id)[level] != cls ||
                    !std::equal(pre.begin(), pre.end(), w.path.begin())) {
                    inside = false;
                    break;
                }
            }
        }
        if (!inside) {
            cs->named_of[c] = static_cast<int>(cs->named.size());
            cs->named.push_back(c);
            continue;
        }
        if (u.path[level] != cs->b) continue;  // explicit member of a family
        Family f;
        f.cls = G.chain(u.id)[level];
        f.level = level;
        f.ctx.assign(u.path.begin(), u.path.begin() + level);
        for (const auto& v : x)
            if (v.is_inst() && v.path.size() > static_cast<size_t>(level) && G.chain(v.id)[level] == f.cls &&
                std::equal(f.ctx.begin(), f.ctx.end(), v.path.begin()))
                f.excluded.insert(v.path[level]);
        f.rep_comp = c;
        f.nbhd = cs->comp_nbhd[c];
        cs->family_of[c] = static_cast<int>(cs->families.size());
        cs->families.push_back(std::move(f));
    }
    return cs;
}

// Components whose neighbourhood is the whole deletion set.
struct HatView {
    std::vector<int> named;     // indices into ComponentSet::named
    std::vector<int> families;  // indices into ComponentSet::families
    bool infinite() const { return !families.empty(); }
    bool at_least_two() const { return !families.empty() || named.size() >= 2; }
};

inline HatView hat_components(const ComponentSet& cs) {
    HatView h;
    for (int i = 0; i < cs.named_count(); ++i)
        if (cs.named_nbhd(i) == cs.x) h.named.push_back(i);
    for (int f = 0; f < cs.family_count(); ++f)
        if (cs.families[f].nbhd == cs.x) h.families.push_back(f);
    return h;
}

inline bool is_critical(const SymbolicGraph& G, const VSet& x) {
    if (x.empty()) return false;
    return hat_components(*components(G, x)).infinite();
}

inline bool is_generous_set(const SymbolicGraph& G, const VSet& x) { return hat_components(*components(G, x)).at_least_two(); }

// A critical set up to the choice of the instance it lives in.
struct CritEntry {
    int scope = -1;          // -1: core; otherwise the class whose gadget holds the vertices
    std::vector<int> slots;  // core or gadget vertex indices
    bool family = false;     // infinitely many instances
    int source_class = -1;   // an ω-class whose pieces have this neighbourhood

    VSet instantiate(const std::vector<int>& ctx) const {
        VSet s;
        for (int v : slots) s.push_back(scope < 0 ? VRef::core_v(v) : VRef::inst(scope, ctx, v));
        return normalized(s);
    }
};

// Instance paths of a class with ω levels limited to indices below w.
inline std::vector<std::vector<int>> instance_paths(const SymbolicGraph& G, int cls, int w) {
    std::vector<std::vector<int>> out{{}};
    if (cls < 0) return out;
    for (int c : G.chain(cls)) {
        int n = G.omega(c) ? w : G.classes[c].mult;
        std::vector<std::vector<int>> next;
        for (const auto& p : out)
            for (int i = 0; i < n; ++i) {
                auto q = p;
                q.push_back(i);
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

// Critical sets are the neighbourhoods of the connected pieces of ω-class instance subtrees.
inline std::vector<CritEntry> crit(const SymbolicGraph& G) {
    std::vector<CritEntry> out;
    Expansion e = expand(G, 2);
    for (int c = 0; c < static_cast<int>(G.classes.size()); ++c) {
        if (!G.omega(c)) continue;
        auto ch = G.chain(c);
        int depth = static_cast<int>(ch.size()) - 1;
        std::vector<int> path(depth + 1, 0);
        std::vector<char> in_sub(e.size(), 0);
        for (int i = 0; i < e.size(); ++i) {
            const VRef& v = e.refs[i];
            if (!v.is_inst() || v.path.size() <= static_cast<size_t>(depth)) continue;
            if (G.chain(v.id)[depth] != c) continue;
            if (std::equal(path.begin(), path.end(), v.path.begin())) in_sub[i] = 1;
        }
        std::vector<char> removed(e.size());
        for (int i = 0; i < e.size(); ++i) removed[i] = !in_sub[i];
        int pieces = 0;
        auto comp = finite_components(e.adj, removed, &pieces);
        for (int p = 0; p < pieces; ++p) {
            std::set<int> slots;
            for (int i = 0; i < e.size(); ++i) {
                if (comp[i] != p) continue;
                for (int w : e.adj[i])
                    if (!in_sub[w]) slots.insert(e.refs[w].is_core() ? e.refs[w].id : e.refs[w].v);
            }
            CritEntry ce;
            ce.scope = G.classes[c].parent;
            ce.slots.assign(slots.begin(), slots.end());
            ce.family = ce.scope >= 0 && G.has_omega_above(ce.scope);
            ce.source_class = c;
            bool dup = false;
            for (const auto& o : out)
                if (o.scope == ce.scope && o.slots == ce.slots) dup = true;
            if (!dup && !ce.slots.empty()) out.push_back(ce);
        }
    }
    return out;
}

// Concrete critical sets whose ω indices stay below w.
inline std::vector<VSet> crit_window(const SymbolicGraph& G, int w) {
    std::vector<VSet> out;
    for (const auto& ce : crit(G))
        for (const auto& ctx : instance_paths(G, ce.scope, w)) out.push_back(ce.instantiate(ctx));
    return out;
}

}  // namespace tf
