#pragma once

#include "tangles.hpp"

namespace tf {

// A vertex set up to the instance it lives in: slots of the core or of one gadget.
struct YPattern {
    int scope = -1;
    std::vector<int> slots;
    bool family = false;

    VSet instantiate(const std::vector<int>& ctx) const { return CritEntry{scope, slots, family, -1}.instantiate(ctx); }
    bool operator==(const YPattern& o) const { return scope == o.scope && slots == o.slots; }
};

struct YMember {
    int pattern = -1;
    std::vector<int> ctx;
    VSet x;
    std::shared_ptr<const ComponentSet> cs;
};

inline std::vector<YPattern> crit_patterns(const SymbolicGraph& G) {
    std::vector<YPattern> out;
    for (const auto& e : crit(G)) out.push_back({e.scope, e.slots, e.family});
    return out;
}

// Generous subsets of critical sets; each critical set precedes its proper subsets.
inline std::vector<YPattern> generous_patterns(const SymbolicGraph& G) {
    std::vector<YPattern> out;
    for (const auto& e : crit(G)) {
        int n = static_cast<int>(e.slots.size());
        std::vector<std::vector<int>> subsets;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(e.slots[i]);
            subsets.push_back(s);
        }
        std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() > b.size() : a < b;
        });
        for (const auto& s : subsets) {
            YPattern p{e.scope, s, e.family};
            if (std::find(out.begin(), out.end(), p) != out.end()) continue;
            std::vector<int> ctx(e.scope < 0 ? 0 : G.chain(e.scope).size(), 0);
            if (is_generous_set(G, p.instantiate(ctx))) out.push_back(p);
        }
    }
    return out;
}

// Concrete members with ω indices below w: single-instance patterns first, then families by (pattern, ctx).
inline std::vector<YMember> window_members(const SymbolicGraph& G, const std::vector<YPattern>& pats, int w) {
    std::vector<YMember> out;
    for (int pass = 0; pass < 2; ++pass)
        for (int p = 0; p < static_cast<int>(pats.size()); ++p) {
            if (pats[p].family != (pass == 1)) continue;
            for (const auto& ctx : instance_paths(G, pats[p].scope, w)) {
                VSet x = pats[p].instantiate(ctx);
                out.push_back({p, ctx, x, components(G, x)});
            }
        }
    return out;
}

struct NotPrincipal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The unique component of G - X meeting s; nullopt when s ⊆ X.
inline std::optional<Loc> component_meeting(const ComponentSet& cs, const VSet& s) {
    std::optional<Loc> found;
    for (const auto& v : s) {
        if (cs.in_x(v)) continue;
        Loc l = cs.locate(v);
        if (found && !(*found == l)) throw NotPrincipal("two components met by " + to_string(*cs.g, s) + " in G - " + to_string(*cs.g, cs.x));
        found = l;
    }
    return found;
}

inline std::optional<Loc> component_meeting(const SymbolicGraph& G, const VSet& x, const VSet& s) {
    return component_meeting(*components(G, x), s);
}

inline bool incomparable(const VSet& a, const VSet& b) { return !subset_of(a, b) && !subset_of(b, a); }

inline bool is_problem_case(const ComponentSet& cx, const ComponentSet& cy) {
    if (!incomparable(cx.x, cy.x)) return false;
    auto a = component_meeting(cx, cy.x);
    auto b = component_meeting(cy, cx.x);
    return a && b && cx.nbhd_of(*a) == cx.x && cy.nbhd_of(*b) == cy.x;
}

inline bool is_problem_case(const SymbolicGraph& G, const VSet& x, const VSet& y) {
    return is_problem_case(*components(G, x), *components(G, y));
}

inline void check_principal(const std::vector<YMember>& ys) {
    for (const auto& a : ys)
        for (const auto& b : ys)
            if (&a != &b) component_meeting(*a.cs, b.x);
}

// 𝒦(X) = 𝒞̌_X minus at most one component.
struct Admissible {
    std::vector<std::optional<Loc>> excluded;
    std::vector<int> partner;  // problem-case partner that fixed the exclusion, or -1

    bool contains(const ComponentSet& cs, int y, const Loc& l) const {
        if (l.in_x || cs.nbhd_of(l) != cs.x) return false;
        return !(excluded[y] && *excluded[y] == l);
    }
};

inline Loc canonical_hat(const ComponentSet& cs) {
    HatView h = hat_components(cs);
    if (!h.named.empty()) return Loc{false, h.named.front(), -1, -1};
    if (h.families.empty()) throw std::logic_error("no full-neighbourhood component to exclude");
    int f = h.families.front();
    int j = 0;
    while (!cs.families[f].member(j)) ++j;
    return Loc{false, -1, f, j};
}

// Greedy over the enumeration order: exclude C_X(Y) for the first Y forming a problem case with X.
inline Admissible strongly_admissible(const std::vector<YMember>& ys, bool exclude_one_everywhere) {
    check_principal(ys);
    int n = static_cast<int>(ys.size());
    Admissible k;
    k.excluded.assign(n, std::nullopt);
    k.partner.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !is_problem_case(*ys[i].cs, *ys[j].cs)) continue;
            k.excluded[i] = component_meeting(*ys[i].cs, ys[j].x);
            k.partner[i] = j;
            break;
        }
        if (!k.excluded[i] && exclude_one_everywhere) k.excluded[i] = canonical_hat(*ys[i].cs);
    }
    return k;
}

// Either C_X(Y) ∉ 𝒦(X) or C_Y(X) ∉ 𝒦(Y) for incomparable X, Y; at most one exclusion each by construction.
inline bool is_admissible(const std::vector<YMember>& ys, const Admissible& k) {
    for (size_t i = 0; i < ys.size(); ++i)
        for (size_t j = i + 1; j < ys.size(); ++j) {
            if (!incomparable(ys[i].x, ys[j].x)) continue;
            auto a = component_meeting(*ys[i].cs, ys[j].x);
            auto b = component_meeting(*ys[j].cs, ys[i].x);
            if (k.contains(*ys[i].cs, static_cast<int>(i), *a) && k.contains(*ys[j].cs, static_cast<int>(j), *b)) return false;
        }
    return true;
}

struct TreeMember {
    enum class Kind : std::uint8_t { Big, Small };
    OSep sep;  // (X, 𝒦(X)) or (X, K)
    int y = -1;
    Kind kind = Kind::Big;
    Loc k;              // K for small members
    bool family = false;  // one of infinitely many alike members
};

// T(𝒴, 𝒦) restricted to members whose ω indices stay below w.
struct WindowTreeSet {
    const SymbolicGraph* g = nullptr;
    int w = 0;
    std::vector<YPattern> patterns;
    std::vector<YMember> ys;
    Admissible k;
    std::vector<TreeMember> members;
    SideTable table;
    SepSystem sys;  // element 2i = members[i].sep, 2i+1 its inverse

    int size() const { return static_cast<int>(members.size()); }
    std::vector<OSep> seps() const {
        std::vector<OSep> out;
        for (const auto& m : members) out.push_back(m.sep);
        return out;
    }
};

inline Selection k_selection(const ComponentSet& cs, const std::optional<Loc>& excluded) {
    Selection s = empty_selection(cs);
    HatView h = hat_components(cs);
    for (int i : h.named) s.named[i] = 1;
    for (int f : h.families) s.fam[f].mode = FamilyPick::All;
    if (excluded) {
        if (excluded->named >= 0) s.named[excluded->named] = 0;
        if (excluded->fam >= 0) s.fam[excluded->fam].flip.insert(excluded->j);
    }
    return s;
}

// Drops members equal to an earlier one as unoriented separations.
inline void finish_tree_set(WindowTreeSet& t) {
    t.table = side_table(*t.g, t.seps(), t.w + 2);
    std::vector<TreeMember> keep;
    std::vector<Sides> kept;
    for (int i = 0; i < t.size(); ++i) {
        const Sides& s = t.table.s[i];
        bool dup = false;
        for (const auto& o : kept)
            if ((o.a == s.a && o.b == s.b) || (o.a == s.b && o.b == s.a)) dup = true;
        if (dup) continue;
        keep.push_back(t.members[i]);
        kept.push_back(s);
    }
    t.members = std::move(keep);
    t.table.s = std::move(kept);
    t.sys = system_of(t.table.s);
}

inline WindowTreeSet build_T(const SymbolicGraph& G, std::vector<YPattern> pats, std::vector<YMember> ys, Admissible k, int w) {
    if (!is_admissible(ys, k)) throw std::logic_error("function is not admissible");
    WindowTreeSet t;
    t.g = &G;
    t.w = w;
    t.patterns = std::move(pats);
    t.ys = std::move(ys);
    t.k = std::move(k);
    for (int y = 0; y < static_cast<int>(t.ys.size()); ++y) {
        const auto& cs = t.ys[y].cs;
        bool fam_x = t.patterns[t.ys[y].pattern].family;
        t.members.push_back({make_osep(cs, k_selection(*cs, t.k.excluded[y])), y, TreeMember::Kind::Big, {}, fam_x});
        HatView h = hat_components(*cs);
        for (int i : h.named) {
            Loc l{false, i, -1, -1};
            if (!t.k.contains(*cs, y, l)) continue;
            t.members.push_back({select_named(cs, {i}), y, TreeMember::Kind::Small, l, fam_x});
        }
        for (int f : h.families)
            for (int j = 0; j < w; ++j) {
                Loc l{false, -1, f, j};
                if (!cs->families[f].member(j) || !t.k.contains(*cs, y, l)) continue;
                Selection s = empty_selection(*cs);
                s.fam[f].flip.insert(j);
                t.members.push_back({make_osep(cs, s), y, TreeMember::Kind::Small, l, true});
            }
    }
    finish_tree_set(t);
    return t;
}

inline std::vector<Loc> hat_locs(const ComponentSet& cs, int w) {
    std::vector<Loc> out;
    HatView h = hat_components(cs);
    for (int i : h.named) out.push_back({false, i, -1, -1});
    for (int f : h.families)
        for (int j = 0; j < w; ++j)
            if (cs.families[f].member(j)) out.push_back({false, -1, f, j});
    return out;
}

// Starting tree set over generous subsets of critical sets, one exclusion per member.
inline WindowTreeSet starting_tree_set(const SymbolicGraph& G, int w) {
    auto pats = generous_patterns(G);
    auto ys = window_members(G, pats, w);
    auto k = strongly_admissible(ys, true);
    return build_T(G, std::move(pats), std::move(ys), std::move(k), w);
}

// The tree set over crit(G) alone, as used for tough torsos.
inline WindowTreeSet crit_tree_set(const SymbolicGraph& G, int w) {
    auto pats = crit_patterns(G);
    auto ys = window_members(G, pats, w);
    auto k = strongly_admissible(ys, true);
    return build_T(G, std::move(pats), std::move(ys), std::move(k), w);
}

// Element ids of σ_X in the system: (X, 𝒦(X)) and every (K, X).
inline std::vector<int> sigma_star(const WindowTreeSet& t, int y) {
    std::vector<int> out;
    for (int i = 0; i < t.size(); ++i) {
        if (t.members[i].y != y) continue;
        out.push_back(t.members[i].kind == TreeMember::Kind::Big ? 2 * i : 2 * i + 1);
    }
    return out;
}

// The separations (𝒦(X), X) with 𝒦(X) ⊊ 𝒞_X.
inline std::vector<int> k_partial_orientation(const WindowTreeSet& t) {
    std::vector<int> out;
    for (int i = 0; i < t.size(); ++i)
        if (t.members[i].kind == TreeMember::Kind::Big && !small_sides(t.table.s[i])) out.push_back(2 * i + 1);
    return out;
}

inline bool is_regular(const SepSystem& sys) {
    for (int s = 0; s < sys.size(); ++s)
        if (classify(sys, s) != SepKind::Proper) return false;
    return true;
}

// G with every member of 𝒴 completed to a clique, edge-wise per pattern.
inline SymbolicGraph clique_ify(SymbolicGraph G, const std::vector<YPattern>& pats) {
    for (const auto& p : pats)
        for (size_t i = 0; i < p.slots.size(); ++i)
            for (size_t j = i + 1; j < p.slots.size(); ++j) {
                auto& edges = p.scope < 0 ? G.core_edges : G.classes[p.scope].gadget.edges;
                std::pair<int, int> e{p.slots[i], p.slots[j]}, r{p.slots[j], p.slots[i]};
                if (std::find(edges.begin(), edges.end(), e) == edges.end() && std::find(edges.begin(), edges.end(), r) == edges.end())
                    edges.push_back(e);
            }
    return G;
}

}  // namespace tf
