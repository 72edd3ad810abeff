#pragma once

#include "pipeline.hpp"

namespace tf::bip {

// Named elements plus countably infinite classes; class indices in `absent` are not elements.
struct SymbolicSet {
    std::vector<std::string> named;
    struct Class {
        std::string id;
        std::set<int> absent;
    };
    std::vector<Class> classes;
};

// Per class: a finite index set, or all indices except a finite set.
struct ClassPart {
    bool cofinite = false;
    std::set<int> ex;
    bool operator==(const ClassPart&) const = default;
    auto operator<=>(const ClassPart&) const = default;
};

struct SSet {
    std::vector<char> named;
    std::vector<ClassPart> cls;
    bool operator==(const SSet&) const = default;
    auto operator<=>(const SSet&) const = default;
};

inline SSet empty_set(const SymbolicSet& k) {
    SSet s;
    s.named.assign(k.named.size(), 0);
    s.cls.resize(k.classes.size());
    return s;
}

// Cofinite parts always exclude absent indices; finite parts never list them.
inline SSet normalize(const SymbolicSet& k, SSet s) {
    for (size_t c = 0; c < s.cls.size(); ++c) {
        auto& p = s.cls[c];
        if (p.cofinite) {
            p.ex.insert(k.classes[c].absent.begin(), k.classes[c].absent.end());
        } else {
            for (int a : k.classes[c].absent) p.ex.erase(a);
        }
    }
    return s;
}

inline SSet full_set(const SymbolicSet& k) {
    SSet s = empty_set(k);
    for (auto& n : s.named) n = 1;
    for (auto& p : s.cls) p.cofinite = true;
    return normalize(k, s);
}

inline SSet complement(const SymbolicSet& k, SSet s) {
    for (auto& n : s.named) n = !n;
    for (auto& p : s.cls) p.cofinite = !p.cofinite;
    return normalize(k, s);
}

inline std::set<int> set_minus(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

inline std::set<int> set_and(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

inline std::set<int> set_or(std::set<int> a, const std::set<int>& b) {
    a.insert(b.begin(), b.end());
    return a;
}

inline SSet intersect(const SymbolicSet& k, const SSet& a, const SSet& b) {
    SSet s = empty_set(k);
    for (size_t i = 0; i < s.named.size(); ++i) s.named[i] = a.named[i] && b.named[i];
    for (size_t c = 0; c < s.cls.size(); ++c) {
        const auto& p = a.cls[c];
        const auto& q = b.cls[c];
        if (p.cofinite && q.cofinite)
            s.cls[c] = {true, set_or(p.ex, q.ex)};
        else if (p.cofinite)
            s.cls[c] = {false, set_minus(q.ex, p.ex)};
        else if (q.cofinite)
            s.cls[c] = {false, set_minus(p.ex, q.ex)};
        else
            s.cls[c] = {false, set_and(p.ex, q.ex)};
    }
    return normalize(k, s);
}

inline SSet unite(const SymbolicSet& k, const SSet& a, const SSet& b) {
    return complement(k, intersect(k, complement(k, a), complement(k, b)));
}

inline bool is_empty(const SSet& s) {
    for (char n : s.named)
        if (n) return false;
    for (const auto& p : s.cls)
        if (p.cofinite || !p.ex.empty()) return false;
    return true;
}

inline bool is_infinite(const SSet& s) {
    for (const auto& p : s.cls)
        if (p.cofinite) return true;
    return false;
}

inline bool subset(const SymbolicSet& k, const SSet& a, const SSet& b) { return is_empty(intersect(k, a, complement(k, b))); }

inline bool is_full(const SymbolicSet& k, const SSet& s) { return is_empty(complement(k, s)); }

inline bool contains(const SSet& s, int cls, int j) {
    const auto& p = s.cls[cls];
    return p.cofinite ? !p.ex.count(j) : p.ex.count(j) > 0;
}

// Z1 ⊆ Z2, Z1 ⊇ Z2, Z1 ∪ Z2 = K or Z1 ∩ Z2 = ∅.
inline bool is_nested_bip(const SymbolicSet& k, const SSet& a, const SSet& b) {
    return subset(k, a, b) || subset(k, b, a) || is_full(k, unite(k, a, b)) || is_empty(intersect(k, a, b));
}

inline std::string to_string(const SymbolicSet& k, const SSet& s) {
    std::vector<std::string> parts;
    std::string fin;
    for (size_t i = 0; i < s.named.size(); ++i)
        if (s.named[i]) fin += (fin.empty() ? "" : ",") + k.named[i];
    for (size_t c = 0; c < s.cls.size(); ++c) {
        const auto& p = s.cls[c];
        if (!p.cofinite) {
            for (int j : p.ex) fin += (fin.empty() ? "" : ",") + k.classes[c].id + "[" + std::to_string(j) + "]";
            continue;
        }
        std::string ex;
        for (int j : set_minus(p.ex, k.classes[c].absent)) ex += (ex.empty() ? "" : ",") + std::to_string(j);
        parts.push_back(k.classes[c].id + (ex.empty() ? "" : "∖{" + ex + "}"));
    }
    if (!fin.empty() || parts.empty()) parts.insert(parts.begin(), "{" + fin + "}");
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " ∪ ") + p;
    return out;
}

// Z_n = base minus the first n elements of class `cls` inside base, for n ≥ first.
struct ChainFamily {
    SSet base;
    int cls = 0;
    int first = 0;
};

// Z_i = K minus the leaf {(c,i) : c ∈ classes}, for every i not in skip.
struct StarFamily {
    std::vector<int> classes;
    std::set<int> skip;
};

struct BipTreeSet {
    SymbolicSet k;
    std::vector<SSet> named;
    std::vector<ChainFamily> chains;
    std::vector<StarFamily> stars;
    std::vector<std::string> notes;  // filtered members and other translation remarks
};

inline SSet chain_member(const SymbolicSet& k, const ChainFamily& f, int n) {
    SSet z = f.base;
    auto& p = z.cls[f.cls];
    if (!p.cofinite) throw std::invalid_argument("chain base must contain cofinitely much of its class");
    for (int j = 0, taken = 0; taken < n; ++j)
        if (!p.ex.count(j)) {
            p.ex.insert(j);
            ++taken;
        }
    return normalize(k, z);
}

inline SSet chain_limit(const SymbolicSet& k, const ChainFamily& f) {
    SSet z = f.base;
    z.cls[f.cls] = {};
    return normalize(k, z);
}

inline SSet star_leaf(const SymbolicSet& k, const StarFamily& f, int i) {
    SSet l = empty_set(k);
    for (int c : f.classes) l.cls[c].ex.insert(i);
    return normalize(k, l);
}

inline SSet star_member(const SymbolicSet& k, const StarFamily& f, int i) { return complement(k, star_leaf(k, f, i)); }

// Indices past every one mentioned behave alike; representatives run up to here.
inline int window(const BipTreeSet& t) {
    int m = 0;
    auto bump = [&](const SSet& s) {
        for (const auto& p : s.cls)
            for (int j : p.ex) m = std::max(m, j + 1);
    };
    for (const auto& c : t.k.classes)
        for (int j : c.absent) m = std::max(m, j + 1);
    for (const auto& z : t.named) bump(z);
    for (const auto& c : t.chains) {
        bump(c.base);
        m = std::max(m, c.first + 1);
    }
    for (const auto& s : t.stars)
        for (int j : s.skip) m = std::max(m, j + 1);
    int fin = 0;
    for (const auto& z : t.named)
        for (const auto& p : z.cls)
            if (!p.cofinite) fin += static_cast<int>(p.ex.size());
    return m + fin + 3;
}

struct Rep {
    int named = -1;
    int chain = -1;
    int star = -1;
    int n = -1;
    SSet z;
};

inline std::string to_string(const Rep& r) {
    if (r.named >= 0) return "N" + std::to_string(r.named);
    if (r.chain >= 0) return "chain" + std::to_string(r.chain) + "[" + std::to_string(r.n) + "]";
    return "star" + std::to_string(r.star) + "[" + std::to_string(r.n) + "]";
}

inline std::vector<Rep> representatives(const BipTreeSet& t) {
    int w = window(t);
    std::vector<Rep> out;
    for (int i = 0; i < static_cast<int>(t.named.size()); ++i) out.push_back({i, -1, -1, -1, t.named[i]});
    for (int c = 0; c < static_cast<int>(t.chains.size()); ++c)
        for (int n = t.chains[c].first; n < t.chains[c].first + w; ++n) out.push_back({-1, c, -1, n, chain_member(t.k, t.chains[c], n)});
    for (int s = 0; s < static_cast<int>(t.stars.size()); ++s)
        for (int i = 0; i < w; ++i)
            if (!t.stars[s].skip.count(i)) out.push_back({-1, -1, s, i, star_member(t.k, t.stars[s], i)});
    return out;
}

// Every representative pair nested.
inline std::optional<std::pair<Rep, Rep>> nesting_violation(const BipTreeSet& t) {
    auto reps = representatives(t);
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = a + 1; b < reps.size(); ++b)
            if (!is_nested_bip(t.k, reps[a].z, reps[b].z)) return std::make_pair(reps[a], reps[b]);
    return std::nullopt;
}

inline bool is_nested(const BipTreeSet& t) { return !nesting_violation(t); }

// ∅ is the only small separation; neither side of a member may be empty.
inline bool is_regular(const BipTreeSet& t) {
    for (const auto& r : representatives(t))
        if (is_empty(r.z) || is_full(t.k, r.z)) return false;
    for (const auto& c : t.chains) {
        int w = window(t);
        for (int n = c.first; n < c.first + w; ++n)
            if (chain_member(t.k, c, n) == chain_member(t.k, c, n + 1)) return false;
    }
    return true;
}

enum class Case { OmegaChain, InfiniteStar, FiniteCase };

inline const char* to_string(Case c) {
    switch (c) {
        case Case::OmegaChain: return "omega-chain";
        case Case::InfiniteStar: return "infinite-splitting-star";
        case Case::FiniteCase: return "finite";
    }
    return "?";
}

struct Dichotomy {
    Case kind = Case::FiniteCase;
    int family = -1;
};

inline Dichotomy dichotomy(const BipTreeSet& t) {
    if (!is_regular(t)) throw std::invalid_argument("tree set of bipartitions is not regular");
    if (!t.chains.empty()) return {Case::OmegaChain, 0};
    if (!t.stars.empty()) return {Case::InfiniteStar, 0};
    return {Case::FiniteCase, -1};
}

struct FiniteTreeSet : std::runtime_error {
    FiniteTreeSet()
        : std::runtime_error(
              "finite tree set: it has finitely many orientations, but there are infinitely many free ultrafilters, so it cannot "
              "distinguish them all") {}
};

struct NotSplitting : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Oriented {
    Rep rep;
    SSet side;   // the side every extending free ultrafilter contains
    int filter;  // index of the filter-base element contained in `side`
};

struct Witness {
    Case kind = Case::FiniteCase;
    int family = -1;
    // Partition of K: representatives K_n / leaves, then the remainder block (K_ω or the star interior).
    std::vector<std::pair<std::string, SSet>> partition;
    std::vector<std::pair<int, SSet>> filter;  // (label, element): chain index n, leaf index i, or -1-2i-side for a side of named member i as leaf
    std::string filter_rule;
    std::vector<Oriented> orientation;
    std::string remark;
};

inline Witness forced_orientation_witness(const BipTreeSet& t) {
    Dichotomy d = dichotomy(t);
    if (d.kind == Case::FiniteCase) throw FiniteTreeSet();
    const SymbolicSet& k = t.k;
    int w = window(t);
    Witness out;
    out.kind = d.kind;
    out.family = d.family;
    out.remark =
        "every free ultrafilter containing the filter base orients the tree set this way; there are 2^c of them, so none of "
        "them are told apart";
    std::vector<std::pair<int, SSet>> basis;  // chain members Z_n, aligned with `filter`
    if (d.kind == Case::OmegaChain) {
        const auto& c = t.chains[d.family];
        SSet zw = chain_limit(k, c);
        for (int n = c.first; n < c.first + 2 * w; ++n) {
            SSet zn = chain_member(k, c, n);
            SSet f = intersect(k, zn, complement(k, zw));
            if (n < c.first + w) out.partition.push_back({"K" + std::to_string(n), intersect(k, zn, complement(k, chain_member(k, c, n + 1)))});
            out.filter.push_back({n, f});
            basis.push_back({n, zn});
        }
        out.partition.push_back({"Kω", unite(k, complement(k, chain_member(k, c, c.first)), zw)});
        out.filter_rule = "Z_n ∖ Z_ω for n ≥ " + std::to_string(c.first);
        for (const auto& r : representatives(t)) {
            SSet co = complement(k, r.z);
            std::optional<Oriented> o;
            for (int f = 0; f < static_cast<int>(basis.size()) && !o; ++f) {
                const SSet& zn = basis[f].second;
                if (subset(k, zn, r.z)) o = Oriented{r, r.z, f};
                else if (subset(k, zn, co)) o = Oriented{r, co, f};
            }
            if (!o && subset(k, r.z, zw)) o = Oriented{r, co, 0};
            if (!o && subset(k, co, zw)) o = Oriented{r, r.z, 0};
            if (!o) throw NotSplitting("member " + to_string(r) + " = " + to_string(k, r.z) + " is neither above a chain member nor inside Z_ω");
            out.orientation.push_back(*o);
        }
    } else {
        const auto& s = t.stars[d.family];
        // The splitting star: maximal sides holding finitely many leaves, then leaves outside all of them.
        // Nested members are finite or cofinite on every star class at once.
        std::vector<std::pair<int, SSet>> small;
        for (int i = 0; i < static_cast<int>(t.named.size()); ++i) {
            int side = t.named[i].cls[s.classes[0]].cofinite ? 0 : 1;
            small.push_back({-1 - 2 * i - side, side ? t.named[i] : complement(k, t.named[i])});
        }
        for (int i = 0; i < w; ++i)
            if (!s.skip.count(i)) small.push_back({i, star_leaf(k, s, i)});
        // Equal sides keep the later entry, so a leaf wins over a named side.
        std::vector<std::pair<int, SSet>> blocks;
        for (size_t a = 0; a < small.size(); ++a) {
            bool maximal = true;
            for (size_t b = 0; b < small.size() && maximal; ++b)
                if (b != a && subset(k, small[a].second, small[b].second) && (small[a].second != small[b].second || b > a)) maximal = false;
            if (maximal) blocks.push_back(small[a]);
        }
        SSet covered = empty_set(k);
        for (int c : s.classes) covered.cls[c] = {true, {}};
        for (int c : s.classes)
            for (int j = 0; j < w; ++j) covered.cls[c].ex.insert(j);
        covered = normalize(k, covered);
        for (const auto& [label, l] : blocks) {
            out.partition.push_back({label >= 0 ? "L" + std::to_string(label) : "N" + std::to_string((-1 - label) / 2), l});
            out.filter.push_back({label, complement(k, l)});
            covered = unite(k, covered, l);
        }
        SSet interior = complement(k, covered);
        if (!is_empty(interior)) out.partition.push_back({"interior", interior});
        out.filter_rule = "K_i = K ∖ B for every block B of the splitting star";
        for (const auto& r : representatives(t)) {
            SSet co = complement(k, r.z);
            std::optional<Oriented> o;
            for (int f = 0; f < static_cast<int>(out.filter.size()) && !o; ++f) {
                const SSet& ki = out.filter[f].second;
                if (subset(k, ki, r.z)) o = Oriented{r, r.z, f};
                else if (subset(k, ki, co)) o = Oriented{r, co, f};
            }
            if (!o) throw NotSplitting("star does not split: member " + to_string(r) + " = " + to_string(k, r.z) + " lies above no K_i");
            out.orientation.push_back(*o);
        }
    }
    return out;
}

// Recomputed from the label, independently of the stored copy.
inline SSet filter_element(const BipTreeSet& t, const Witness& w, int pos) {
    int label = w.filter[pos].first;
    if (w.kind == Case::OmegaChain) {
        const auto& c = t.chains[w.family];
        return intersect(t.k, chain_member(t.k, c, label), complement(t.k, chain_limit(t.k, c)));
    }
    if (label >= 0) return star_member(t.k, t.stars[w.family], label);
    const SSet& z = t.named[(-1 - label) / 2];
    return (-1 - label) % 2 ? complement(t.k, z) : z;
}

struct WitnessCheck {
    bool consistent = false;
    bool covers = false;
    bool implied = false;
    bool infinite_meets = false;
    bool partition = false;
    bool ok() const { return consistent && covers && implied && infinite_meets && partition; }
};

// The properties that make the witness a proof: checked on representatives.
inline WitnessCheck check_witness(const BipTreeSet& t, const Witness& w) {
    const SymbolicSet& k = t.k;
    WitnessCheck c;
    auto reps = representatives(t);
    c.covers = w.orientation.size() == reps.size();
    for (size_t i = 0; i < reps.size() && c.covers; ++i) c.covers = w.orientation[i].rep.z == reps[i].z;
    c.implied = true;
    for (const auto& o : w.orientation) c.implied = c.implied && filter_element(t, w, o.filter) == w.filter[o.filter].second && subset(k, w.filter[o.filter].second, o.side);
    c.infinite_meets = true;
    for (const auto& [i, f] : w.filter)
        for (const auto& [j, g] : w.filter) c.infinite_meets = c.infinite_meets && is_infinite(intersect(k, f, g));
    // Oriented sides ordered by ⊇ with complementation; no two chosen sides may be disjoint.
    std::vector<SSet> objs;
    auto add = [&](const SSet& s) {
        if (std::find(objs.begin(), objs.end(), s) == objs.end()) objs.push_back(s);
    };
    for (const auto& o : w.orientation) {
        add(o.side);
        add(complement(k, o.side));
    }
    SepSystem sys = make_system(
        objs, [&](const SSet& a, const SSet& b) { return subset(k, b, a); }, [&](const SSet& a) { return complement(k, a); });
    std::vector<int> chosen;
    for (const auto& o : w.orientation) chosen.push_back(static_cast<int>(std::find(objs.begin(), objs.end(), o.side) - objs.begin()));
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    c.consistent = is_consistent(sys, chosen);
    for (size_t a = 0; a < w.orientation.size() && c.consistent; ++a)
        for (size_t b = 0; b < w.orientation.size(); ++b)
            if (is_empty(intersect(k, w.orientation[a].side, w.orientation[b].side))) c.consistent = false;
    // Blocks pairwise disjoint; remainder block plus representatives leave only the tail uncovered.
    c.partition = true;
    for (size_t a = 0; a < w.partition.size(); ++a) {
        if (w.partition[a].first != "Kω" && is_empty(w.partition[a].second)) c.partition = false;
        for (size_t b = a + 1; b < w.partition.size(); ++b)
            if (!is_empty(intersect(k, w.partition[a].second, w.partition[b].second))) c.partition = false;
    }
    return c;
}

// Components of 𝒞̌_X as a symbolic set: named hat components, then one class per hat family.
struct HatIndex {
    std::shared_ptr<const ComponentSet> cs;
    HatView hat;
    SymbolicSet k;
};

inline HatIndex hat_index(const SymbolicGraph& G, const VSet& x) {
    HatIndex h;
    h.cs = components(G, x);
    h.hat = hat_components(*h.cs);
    for (int i : h.hat.named) h.k.named.push_back(to_string(G, h.cs->named_rep(i)));
    for (int f : h.hat.families) {
        const auto& fam = h.cs->families[f];
        h.k.classes.push_back({G.classes[fam.cls].id + "@" + std::to_string(fam.level), fam.excluded});
    }
    return h;
}

// 𝒞̌_X-components lying strictly on the A side of s; `generic` stands for every index from it upward.
inline SSet small_side_hats(const HatIndex& h, const OSep& s, int generic) {
    SSet d = empty_set(h.k);
    auto strictly_a = [&](const Loc& l, const VRef& v) {
        for (const auto& y : s.separator())
            if (!h.cs->in_x(y) && h.cs->locate(y) == l) return false;
        return !s.in_B(v);
    };
    for (size_t i = 0; i < h.hat.named.size(); ++i) {
        Loc l{false, h.hat.named[i], -1, -1};
        d.named[i] = strictly_a(l, h.cs->named_rep(h.hat.named[i]));
    }
    for (size_t c = 0; c < h.hat.families.size(); ++c) {
        int f = h.hat.families[c];
        auto in = [&](int j) { return strictly_a({false, -1, f, j}, h.cs->family_rep(f, j)); };
        auto& p = d.cls[c];
        p.cofinite = in(generic);
        for (int j = 0; j < generic; ++j)
            if (h.cs->families[f].member(j) && in(j) != p.cofinite) p.ex.insert(j);
    }
    return normalize(h.k, d);
}

// Orient T toward a vertex in no separator, then restrict each member's small side to 𝒞̌_X.
inline BipTreeSet graph_to_bipartitions(const WindowTreeSet& t, const VSet& x) {
    const SymbolicGraph& G = *t.g;
    if (!is_critical(G, x)) throw std::invalid_argument(to_string(G, x) + " is not critical");
    BipTreeSet out;
    HatIndex h = hat_index(G, x);
    out.k = h.k;
    if (t.size() == 0) return out;
    auto analog = analog_map(G, t.table.u, t.w);
    int ref = reference_vertex(t, analog);
    int generic = t.w + 2 * (h.cs->b + 2);
    struct Group {
        int y;
        TreeMember::Kind kind;
        int fam;
        std::vector<std::pair<int, SSet>> reps;
    };
    std::vector<Group> groups;
    for (int i = 0; i < t.size(); ++i) {
        const auto& m = t.members[i];
        if (!subset_of(x, m.sep.separator())) {
            out.notes.push_back("dropped " + describe(m.sep) + ": separator misses part of " + to_string(G, x));
            continue;
        }
        bool toward_b = t.table.s[i].b[ref] && !t.table.s[i].a[ref];
        OSep o = toward_b ? m.sep : m.sep.inv();
        SSet d = small_side_hats(h, o, generic);
        if (m.family && m.k.fam >= 0) {
            auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.y == m.y && g.kind == m.kind && g.fam == m.k.fam; });
            if (it == groups.end()) {
                groups.push_back({m.y, m.kind, m.k.fam, {}});
                it = groups.end() - 1;
            }
            it->reps.push_back({m.k.j, d});
        } else if (!is_empty(d) && !is_full(out.k, d) && std::find(out.named.begin(), out.named.end(), d) == out.named.end() &&
                   std::find(out.named.begin(), out.named.end(), complement(out.k, d)) == out.named.end()) {
            out.named.push_back(d);
        }
    }
    for (const auto& g : groups) {
        auto hi = std::find(h.hat.families.begin(), h.hat.families.end(), g.fam);
        if (hi == h.hat.families.end()) throw std::logic_error("family of members not indexed by hat components of " + to_string(G, x));
        StarFamily s{{static_cast<int>(hi - h.hat.families.begin())}, h.cs->families[g.fam].excluded};
        for (const auto& [j, d] : g.reps)
            if (d != star_member(out.k, s, j) && d != star_leaf(out.k, s, j))
                throw std::logic_error("family of members is not a star of single components: " + to_string(out.k, d));
        out.stars.push_back(s);
    }
    int w = window(out);
    std::erase_if(out.named, [&](const SSet& z) {
        for (const auto& s : out.stars)
            for (int i = 0; i < w; ++i)
                if (!s.skip.count(i) && (z == star_member(out.k, s, i) || z == star_leaf(out.k, s, i))) return true;
        return false;
    });
    return out;
}

}  // namespace tf::bip
