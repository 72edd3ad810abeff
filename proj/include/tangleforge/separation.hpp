#pragma once

#include <boost/dynamic_bitset.hpp>

#include "components.hpp"
#include "sep_core.hpp"

namespace tf {

using Bits = boost::dynamic_bitset<>;

// Which members of one family are selected: a base pattern toggled at finitely many indices.
struct FamilyPick {
    enum Mode : std::uint8_t { None, All, Even, Odd };
    Mode mode = None;
    std::set<int> flip;

    bool base(int j) const {
        switch (mode) {
            case None: return false;
            case All: return true;
            case Even: return j % 2 == 0;
            case Odd: return j % 2 == 1;
        }
        return false;
    }
    bool has(int j) const { return base(j) != (flip.count(j) > 0); }
    bool infinitely_in() const { return mode != None; }
    bool infinitely_out() const { return mode != All; }
    bool operator==(const FamilyPick&) const = default;
};

struct Selection {
    std::vector<char> named;
    std::vector<FamilyPick> fam;
    bool operator==(const Selection&) const = default;
};

inline Selection empty_selection(const ComponentSet& cs) {
    Selection s;
    s.named.assign(cs.named_count(), 0);
    s.fam.assign(cs.family_count(), {});
    return s;
}

inline Selection complement(const ComponentSet& cs, Selection s) {
    for (auto& c : s.named) c = !c;
    for (size_t f = 0; f < s.fam.size(); ++f) {
        auto& p = s.fam[f];
        p.mode = p.mode == FamilyPick::None ? FamilyPick::All
               : p.mode == FamilyPick::All  ? FamilyPick::None
               : p.mode == FamilyPick::Even ? FamilyPick::Odd
                                            : FamilyPick::Even;
        (void)cs;
    }
    return s;
}

// Drop flips on indices that are not members and flips that restate the base.
inline void canonicalize(const ComponentSet& cs, Selection& s) {
    for (size_t f = 0; f < s.fam.size(); ++f) {
        std::set<int> keep;
        for (int j : s.fam[f].flip)
            if (cs.families[f].member(j)) keep.insert(j);
        s.fam[f].flip = keep;
    }
}

// Oriented separation (X, C) = (V \ V[C], X ∪ V[C]); it points towards the components in C.
struct OSep {
    std::shared_ptr<const ComponentSet> cs;
    Selection sel;

    const VSet& separator() const { return cs->x; }
    int order() const { return cs->order(); }
    const SymbolicGraph& graph() const { return *cs->g; }

    OSep inv() const { return {cs, complement(*cs, sel)}; }

    bool selected(const Loc& l) const {
        if (l.named >= 0) return sel.named[l.named] != 0;
        if (l.fam >= 0) return sel.fam[l.fam].has(l.j);
        return false;
    }
    bool in_B(const VRef& v) const {
        Loc l = cs->locate(v);
        return l.in_x || selected(l);
    }
    bool in_A(const VRef& v) const {
        Loc l = cs->locate(v);
        return l.in_x || !selected(l);
    }
    bool strictly_B(const VRef& v) const {
        Loc l = cs->locate(v);
        return !l.in_x && selected(l);
    }

    // Beyond this bound every side is 2-periodic in each index.
    int bound() const {
        int b = cs->b;
        for (const auto& p : sel.fam)
            for (int j : p.flip) b = std::max(b, j + 1);
        return b;
    }

    bool same_as(const OSep& o) const { return cs->x == o.cs->x && sel == o.sel; }
};

inline OSep make_osep(std::shared_ptr<const ComponentSet> cs, Selection s) {
    canonicalize(*cs, s);
    return {std::move(cs), std::move(s)};
}

inline OSep select_named(std::shared_ptr<const ComponentSet> cs, const std::vector<int>& named) {
    Selection s = empty_selection(*cs);
    for (int i : named) s.named[i] = 1;
    return make_osep(std::move(cs), std::move(s));
}

// Finite stand-in for V(G): indices beyond m-1 fold onto the two parity slots m-2, m-1.
struct Universe {
    const SymbolicGraph* g = nullptr;
    int m = 2;
    Expansion e;

    Universe() = default;
    Universe(const SymbolicGraph& G, int m_) : g(&G), m(std::max(2, m_)), e(expand(G, std::max(2, m_))) {}

    int size() const { return e.size(); }
    int id(const VRef& v) const { return e.at(fold_periodic(*g, v, m)); }
    const VRef& ref(int i) const { return e.refs[i]; }
};

struct Sides {
    Bits a, b;
};

inline Sides sides(const OSep& s, const Universe& u) {
    Sides out{Bits(u.size()), Bits(u.size())};
    for (int i = 0; i < u.size(); ++i) {
        Loc l = s.cs->locate(u.ref(i));
        bool sel = !l.in_x && s.selected(l);
        out.a[i] = l.in_x || !sel;
        out.b[i] = l.in_x || sel;
    }
    return out;
}

inline bool sides_le(const Sides& p, const Sides& q) { return p.a.is_subset_of(q.a) && q.b.is_subset_of(p.b); }

inline int universe_bound(std::initializer_list<const OSep*> seps) {
    int b = 0;
    for (auto* s : seps) b = std::max(b, s->bound());
    return b + 2;
}

// (A,B) <= (C,D) iff A ⊆ C and B ⊇ D.
inline bool sep_le(const OSep& p, const OSep& q) {
    if (p.cs->g != q.cs->g) throw std::invalid_argument("separations of different graphs");
    Universe u(*p.cs->g, universe_bound({&p, &q}));
    return sides_le(sides(p, u), sides(q, u));
}

inline bool sep_equal(const OSep& p, const OSep& q) { return sep_le(p, q) && sep_le(q, p); }

inline bool sep_nested(const OSep& p, const OSep& q) {
    Universe u(*p.cs->g, universe_bound({&p, &q}));
    Sides sp = sides(p, u), sq = sides(q, u);
    Sides ip{sp.b, sp.a}, iq{sq.b, sq.a};
    for (const Sides* x : {&sp, &ip})
        for (const Sides* y : {&sq, &iq})
            if (sides_le(*x, *y) || sides_le(*y, *x)) return true;
    return false;
}

inline bool small_sides(const Sides& s) { return s.a.is_subset_of(s.b); }

inline bool has_jumping_edge(const Universe& u, const Bits& a, const Bits& b) {
    for (int x = 0; x < u.size(); ++x) {
        if (!(a[x] && !b[x])) continue;
        for (int y : u.e.adj[x])
            if (b[y] && !a[y]) return true;
    }
    return false;
}

// Normal form {Y, C} of a separation given by its sides on a universe.
inline OSep from_sides(const SymbolicGraph& G, const Universe& u, const Bits& a, const Bits& b) {
    if ((a | b).count() != static_cast<size_t>(u.size())) throw std::logic_error("sides do not cover the universe");
    if (has_jumping_edge(u, a, b)) throw std::logic_error("edge jumps the separator");
    VSet y;
    Bits sep = a & b;
    for (int i = 0; i < u.size(); ++i)
        if (sep[i]) y.push_back(u.ref(i));
    auto cs = components(G, y);
    if (cs->b + 2 > u.m) throw std::logic_error("universe too small for separator");
    Selection s = empty_selection(*cs);
    auto strict_b = [&](const VRef& v) {
        int i = u.id(v);
        return b[i] && !a[i];
    };
    for (int i = 0; i < cs->named_count(); ++i) s.named[i] = strict_b(cs->named_rep(i));
    for (int f = 0; f < cs->family_count(); ++f) {
        int m = u.m;
        bool hi0 = strict_b(cs->family_rep(f, m - 2)), hi1 = strict_b(cs->family_rep(f, m - 1));
        bool even = (m - 2) % 2 == 0 ? hi0 : hi1;
        bool odd = (m - 2) % 2 == 0 ? hi1 : hi0;
        auto& p = s.fam[f];
        p.mode = even && odd ? FamilyPick::All : !even && !odd ? FamilyPick::None : even ? FamilyPick::Even : FamilyPick::Odd;
        for (int j = 0; j < m - 2; ++j)
            if (cs->families[f].member(j) && strict_b(cs->family_rep(f, j)) != p.base(j)) p.flip.insert(j);
    }
    return make_osep(cs, s);
}

inline OSep sep_sup(const OSep& p, const OSep& q) {
    Universe u(*p.cs->g, universe_bound({&p, &q}));
    Sides sp = sides(p, u), sq = sides(q, u);
    return from_sides(*p.cs->g, u, sp.a | sq.a, sp.b & sq.b);
}

inline OSep sep_inf(const OSep& p, const OSep& q) {
    Universe u(*p.cs->g, universe_bound({&p, &q}));
    Sides sp = sides(p, u), sq = sides(q, u);
    return from_sides(*p.cs->g, u, sp.a & sq.a, sp.b | sq.b);
}

// No Y ⊆ X has infinitely many Y-neighbourhood components on both sides.
inline bool is_tame(const OSep& s) {
    const auto& cs = *s.cs;
    std::map<VSet, std::pair<bool, bool>> by_nbhd;
    for (int f = 0; f < cs.family_count(); ++f) {
        auto& e = by_nbhd[cs.families[f].nbhd];
        e.first = e.first || s.sel.fam[f].infinitely_in();
        e.second = e.second || s.sel.fam[f].infinitely_out();
    }
    for (const auto& [nb, io] : by_nbhd)
        if (io.first && io.second) return false;
    return true;
}

// Full-neighbourhood components occur on both sides.
inline bool is_generous(const OSep& s) {
    const auto& cs = *s.cs;
    HatView h = hat_components(cs);
    bool in = false, out = false;
    for (int i : h.named) (s.sel.named[i] ? in : out) = true;
    for (int f : h.families) {
        in = in || s.sel.fam[f].infinitely_in() || !s.sel.fam[f].flip.empty();
        out = out || s.sel.fam[f].infinitely_out() || !s.sel.fam[f].flip.empty();
    }
    return in && out;
}

// Sides of many separations on one shared universe.
struct SideTable {
    Universe u;
    std::vector<Sides> s;
};

inline SideTable side_table(const SymbolicGraph& G, const std::vector<OSep>& seps, int min_m = 2) {
    int m = min_m;
    for (const auto& p : seps) m = std::max(m, p.bound() + 2);
    SideTable t{Universe(G, m), {}};
    for (const auto& p : seps) t.s.push_back(sides(p, t.u));
    return t;
}

// Element 2i is seps[i] as given, element 2i+1 its inverse.
inline SepSystem system_of(const std::vector<Sides>& sd) {
    int n = static_cast<int>(sd.size());
    std::vector<Sides> all;
    for (const auto& x : sd) {
        all.push_back(x);
        all.push_back({x.b, x.a});
    }
    SepSystem sys;
    sys.inv.resize(2 * n);
    sys.leq.assign(2 * n, std::vector<char>(2 * n, 0));
    for (int i = 0; i < 2 * n; ++i) {
        sys.inv[i] = i ^ 1;
        for (int j = 0; j < 2 * n; ++j) sys.leq[i][j] = sides_le(all[i], all[j]);
    }
    sys.names.resize(2 * n);
    for (int i = 0; i < 2 * n; ++i) sys.names[i] = (i & 1 ? "~s" : "s") + std::to_string(i / 2);
    return sys;
}

inline std::string describe(const OSep& s) {
    const auto& cs = *s.cs;
    const auto& G = *cs.g;
    std::string out = "(" + to_string(G, cs.x) + " -> ";
    std::vector<std::string> parts;
    for (int i = 0; i < cs.named_count(); ++i)
        if (s.sel.named[i]) parts.push_back("comp" + to_string(G, VSet{cs.named_rep(i)}));
    for (int f = 0; f < cs.family_count(); ++f) {
        const auto& p = s.sel.fam[f];
        if (p.mode == FamilyPick::None && p.flip.empty()) continue;
        std::string t = G.classes[cs.families[f].cls].id;
        const char* mode[] = {"none", "all", "even", "odd"};
        t += std::string("[") + mode[p.mode];
        for (int j : p.flip) t += (p.base(j) ? " -" : " +") + std::to_string(j);
        parts.push_back(t + "]");
    }
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
    return out + ")";
}

}  // namespace tf
