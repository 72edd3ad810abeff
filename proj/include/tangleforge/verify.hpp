#pragma once

#include <tuple>

#include "bipartitions.hpp"
#include "random_model.hpp"

namespace tf {

struct SuiteResult {
    SuiteResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> counterexamples;  // first few only

    void pass() { ++cases; }
    void check(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        ++failures;
        if (counterexamples.size() < 8) counterexamples.push_back(what);
    }
    void merge(const SuiteResult& o, const std::string& prefix = "") {
        cases += o.cases;
        failures += o.failures;
        for (const auto& c : o.counterexamples)
            if (counterexamples.size() < 8) counterexamples.push_back(prefix + c);
    }
    // An exception inside a suite counts as one failed case.
    template <class F>
    void guarded(const std::string& prefix, F&& f) {
        try {
            merge(f(), prefix);
        } catch (const std::exception& e) {
            check(false, prefix + "exception: " + e.what());
        }
    }
    bool ok() const { return failures == 0; }
};

inline void absorb(SuiteResult& r, const std::vector<Check>& cs, const std::string& where) {
    for (const auto& c : cs) r.check(c.ok, where + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

// Largest ω index or ray/clique position of a vertex; -1 for core vertices.
inline int max_index(const SymbolicGraph& G, const VRef& v) { return touch_bound(G, {v}) - 1; }

inline Selection random_selection(const ComponentSet& cs, Rng& rng, int flip_below) {
    Selection s = empty_selection(cs);
    for (auto& n : s.named) n = rng.chance(50);
    for (auto& f : s.fam) {
        f.mode = static_cast<FamilyPick::Mode>(rng.below(4));
        if (flip_below > 0 && rng.chance(30)) f.flip.insert(rng.below(flip_below));
    }
    return s;
}

// Vertices of e that may enter a deletion set whose generic indices stay visible in e.
inline VSet deletable(const SymbolicGraph& G, const Expansion& e, int max_idx) {
    VSet out;
    for (const auto& v : e.refs)
        if (max_index(G, v) <= max_idx) out.push_back(v);
    return out;
}

inline VSet random_subset(Rng& rng, const VSet& from, int max_size) {
    VSet x;
    if (from.empty()) return x;
    int n = rng.between(0, max_size);
    for (int i = 0; i < n; ++i) x.push_back(from[rng.below(static_cast<int>(from.size()))]);
    return normalized(x);
}

struct DirectComponents {
    std::vector<char> removed;
    std::vector<int> comp;
    int count = 0;
    std::vector<VSet> nbhd;
};

inline DirectComponents direct_components(const Expansion& e, const VSet& x) {
    DirectComponents d;
    d.removed.assign(e.size(), 0);
    for (const auto& v : x) d.removed[e.at(v)] = 1;
    d.comp = finite_components(e.adj, d.removed, &d.count);
    std::vector<std::set<VRef>> nb(d.count);
    for (int i = 0; i < e.size(); ++i)
        if (!d.removed[i])
            for (int w : e.adj[i])
                if (d.removed[w]) nb[d.comp[i]].insert(e.refs[w]);
    for (const auto& s : nb) d.nbhd.emplace_back(s.begin(), s.end());
    return d;
}

inline int direct_hat_count(const Expansion& e, const VSet& x) {
    auto d = direct_components(e, x);
    int n = 0;
    for (const auto& s : d.nbhd) n += s == x;
    return n;
}

inline std::tuple<int, int, int> loc_key(const Loc& l) { return {l.named, l.fam, l.j}; }

// Components, neighbourhoods, 𝒞̌_X and criticality of one deletion set against expand(G,k).
inline void oracle_components(const SymbolicGraph& G, int k, const Expansion& e, const Expansion& e_next, const VSet& x, SuiteResult& r) {
    std::string where = "k=" + std::to_string(k) + " X=" + to_string(G, x);
    auto cs = components(G, x);
    auto d = direct_components(e, x);
    HatView hat = hat_components(*cs);
    std::vector<std::optional<Loc>> of_comp(d.count);
    std::map<std::tuple<int, int, int>, int> comp_of_loc;
    bool same = true, exact = true, hats = true;
    for (int i = 0; i < e.size(); ++i) {
        if (d.removed[i]) continue;
        Loc l = cs->locate(e.refs[i]);
        int c = d.comp[i];
        if (!of_comp[c]) {
            of_comp[c] = l;
            auto [it, fresh] = comp_of_loc.emplace(loc_key(l), c);
            if (!fresh && it->second != c) same = false;
        } else if (!(*of_comp[c] == l)) {
            same = false;
        }
    }
    for (int c = 0; c < d.count; ++c) {
        const Loc& l = *of_comp[c];
        if (cs->nbhd_of(l) != d.nbhd[c]) exact = false;
        bool sym_hat = (l.named >= 0 && std::count(hat.named.begin(), hat.named.end(), l.named)) ||
                       (l.fam >= 0 && std::count(hat.families.begin(), hat.families.end(), l.fam));
        if (sym_hat != (d.nbhd[c] == x)) hats = false;
    }
    r.check(same, where + ": components differ from the expansion");
    r.check(exact, where + ": component neighbourhoods differ from the expansion");
    r.check(hats, where + ": 𝒞̌_X differs from the expansion");
    if (!x.empty()) {
        bool grows = direct_hat_count(e_next, x) > direct_hat_count(e, x);
        r.check(is_critical(G, x) == grows, where + ": criticality differs from hat-count growth");
    }
}

// Sides of a separation on every vertex of e, via its own component locator.
inline std::vector<char> strict_b(const OSep& s, const Expansion& e) {
    std::vector<char> out(e.size());
    for (int i = 0; i < e.size(); ++i) out[i] = s.strictly_B(e.refs[i]);
    return out;
}

inline std::vector<char> in_b(const OSep& s, const Expansion& e) {
    std::vector<char> out(e.size());
    for (int i = 0; i < e.size(); ++i) out[i] = s.in_B(e.refs[i]);
    return out;
}

inline bool direct_le(const OSep& p, const OSep& q, const Expansion& e) {
    auto bp = in_b(p, e), bq = in_b(q, e), sp = strict_b(p, e), sq = strict_b(q, e);
    for (int i = 0; i < e.size(); ++i) {
        bool ap = !sp[i], aq = !sq[i];  // A = V minus strictly-B
        if (ap && !aq) return false;
        if (bq[i] && !bp[i]) return false;
    }
    return true;
}

// 1: toward B, 0: toward A, -1: ambiguous, -2: no generic witness in e.
inline int direct_orientation(const SymbolicGraph& G, const TanglePoint& t, const OSep& s, const Expansion& e, int k) {
    if (t.kind != TanglePoint::Kind::Crit) {
        VRef v = t.kind == TanglePoint::Kind::Ray ? VRef::ray(t.anchor, k - 1) : VRef::clique(t.anchor, k - 1);
        return s.strictly_B(v) ? 1 : 0;
    }
    auto d = direct_components(e, t.x);
    std::set<int> sides;
    for (int c = 0; c < d.count; ++c) {
        if (d.nbhd[c] != t.x) continue;
        // Generic: inside one instance of index k-1 or k-2 at a single level.
        std::vector<int> members;
        for (int i = 0; i < e.size(); ++i)
            if (!d.removed[i] && d.comp[i] == c) members.push_back(i);
        const VRef& f = e.refs[members[0]];
        if (!f.is_inst()) continue;
        bool generic = false;
        for (size_t lvl = 0; lvl < f.path.size() && !generic; ++lvl) {
            int j = f.path[lvl];
            if (j < k - 2 || !G.omega(G.chain(f.id)[lvl])) continue;
            bool all = true;
            for (int i : members) {
                const VRef& v = e.refs[i];
                all = all && v.is_inst() && v.path.size() > lvl && v.path[lvl] == j &&
                      std::equal(f.path.begin(), f.path.begin() + static_cast<long>(lvl), v.path.begin());
            }
            generic = all;
        }
        if (!generic) continue;
        for (int i : members) sides.insert(s.strictly_B(e.refs[i]) ? 1 : 0);
    }
    if (sides.empty()) return -2;
    return sides.size() == 1 ? *sides.begin() : -1;
}

// Symbolic sep_le and orientations against expand(G,k) on separations whose periodic behaviour e shows.
inline void oracle_separations(const SymbolicGraph& G, int k, const Expansion& e, const std::vector<OSep>& seps,
                               const std::vector<TanglePoint>& points, SuiteResult& r) {
    std::vector<const OSep*> vis;
    for (const auto& s : seps)
        if (k >= s.bound() + 2) vis.push_back(&s);
    for (const OSep* p : vis)
        for (const OSep* q : vis)
            r.check(sep_le(*p, *q) == direct_le(*p, *q, e), "k=" + std::to_string(k) + ": sep_le " + describe(*p) + " ≤ " + describe(*q));
    for (const OSep* p : vis)
        for (const auto& t : points) {
            if (t.kind == TanglePoint::Kind::Crit && touch_bound(G, t.x) > k - 2) continue;
            int direct = direct_orientation(G, t, *p, e, k);
            if (direct == -2) continue;
            int sym;
            try {
                sym = orient(t, *p) ? 1 : 0;
            } catch (const AmbiguousOrientation&) {
                sym = -1;
            }
            r.check(sym == direct, "k=" + std::to_string(k) + ": orientation of " + to_string(G, t) + " by " + describe(*p) + " symbolic " +
                                       std::to_string(sym) + " direct " + std::to_string(direct));
        }
}

inline SuiteResult oracle_suite(const SymbolicGraph& G, int kmax, Rng& rng, int samples = 6) {
    SuiteResult r{"expansion oracle"};
    auto points = tangle_points(G, 2);
    for (int k = 1; k <= kmax; ++k) {
        Expansion e = expand(G, k);
        Expansion e_next = expand(G, k + 1);
        VSet comp_pool = deletable(G, e, k - 2);
        VSet sep_pool = deletable(G, e, k - 3);
        std::vector<OSep> seps;
        for (int i = 0; i < samples; ++i) {
            VSet x = random_subset(rng, comp_pool, 3);
            oracle_components(G, k, e, e_next, x, r);
            VSet y = random_subset(rng, sep_pool, 3);
            auto cs = components(G, y);
            seps.push_back(make_osep(cs, random_selection(*cs, rng, k - 2)));
        }
        oracle_separations(G, k, e, seps, points, r);
    }
    return r;
}

// Admissibility, nestedness, regularity, the σ_X stars and the partial orientation of a tree set.
inline void tree_set_checks(const WindowTreeSet& t, const std::string& where, SuiteResult& r) {
    const SymbolicGraph& G = *t.g;
    r.check(is_admissible(t.ys, t.k), where + ": 𝒦 is not admissible");
    for (size_t y = 0; y < t.ys.size(); ++y) {
        const auto& ex = t.k.excluded[y];
        if (!ex) continue;
        HatView h = hat_components(*t.ys[y].cs);
        bool hat = (ex->named >= 0 && std::count(h.named.begin(), h.named.end(), ex->named)) ||
                   (ex->fam >= 0 && std::count(h.families.begin(), h.families.end(), ex->fam));
        r.check(hat, where + ": exclusion for " + to_string(G, t.ys[y].x) + " is not in 𝒞̌_X");
    }
    r.check(t.sys.validate().empty(), where + ": separation system axioms: " + t.sys.validate());
    r.check(is_nested_set(t.sys), where + ": T is not nested");
    r.check(is_regular(t.sys), where + ": T is not regular");
    for (const auto& m : t.members) r.check(is_generous(m.sep) && is_tame(m.sep), where + ": member not generous and tame: " + describe(m.sep));
    const Universe& u = t.table.u;
    for (size_t y = 0; y < t.ys.size(); ++y) {
        auto sg = sigma_star(t, static_cast<int>(y));
        if (sg.empty()) continue;
        r.check(is_star(t.sys, sg), where + ": σ of " + to_string(G, t.ys[y].x) + " is not a star");
        r.check(is_consistent(t.sys, down_closure(t.sys, sg)), where + ": down-closure of σ of " + to_string(G, t.ys[y].x) + " is inconsistent");
        // Interior, on vertices whose indices stay inside the window. A single member is (X,K) itself.
        if (sg.size() < 2) continue;
        Bits interior(u.size());
        interior.set();
        for (int id : sg) interior &= id % 2 == 0 ? t.table.s[id / 2].b : t.table.s[id / 2].a;
        bool ok = true;
        for (int i = 0; i < u.size(); ++i) {
            if (max_index(G, u.ref(i)) >= t.w) continue;
            bool in_x = std::binary_search(t.ys[y].x.begin(), t.ys[y].x.end(), u.ref(i));
            if (interior[i] != in_x) ok = false;
        }
        r.check(ok, where + ": interior of σ of " + to_string(G, t.ys[y].x) + " is not X");
    }
    r.check(is_consistent(t.sys, k_partial_orientation(t)), where + ": partial orientation from 𝒦 is inconsistent");
}

inline SuiteResult principal_suite(const SymbolicGraph& G0, int w = 4) {
    SuiteResult r{"principal tree sets"};
    SymbolicGraph G = clique_ify(G0, generous_patterns(G0));
    tree_set_checks(starting_tree_set(G, w), "T(𝒴,𝒦)", r);
    tree_set_checks(crit_tree_set(G0, w), "T(crit,𝒦)", r);
    return r;
}

inline SuiteResult decompose_suite(const SymbolicGraph& G, const PipelineOptions& opt = {}) {
    SuiteResult r{"decomposition"};
    auto d = decompose(G, opt);
    absorb(r, d->checks, "decompose");
    for (const auto& c : d->certs)
        r.check(c.ok && (c.oracle < 0 || c.oracle == c.order),
                "certificate " + to_string(*d->g, c.t1) + " / " + to_string(*d->g, c.t2) + " order " + std::to_string(c.order) + " oracle " +
                    std::to_string(c.oracle));
    return r;
}

inline SuiteResult tough_suite(const SymbolicGraph& G, int w = 4) {
    SuiteResult r{"tough torsos"};
    auto t2 = tough_decomposition(G, w);
    absorb(r, t2.checks, "tough");
    return r;
}

inline SuiteResult bip_graph_suite(const SymbolicGraph& G, int w = 4) {
    SuiteResult r{"bipartition witness"};
    auto t = starting_tree_set(G, w);
    for (const auto& x : crit_window(G, w)) {
        if (!is_critical(G, x)) continue;
        auto b = bip::graph_to_bipartitions(t, x);
        std::string where = "X=" + to_string(G, x);
        r.check(bip::is_nested(b), where + ": induced bipartitions not nested");
        r.check(bip::is_regular(b), where + ": induced bipartitions not regular");
        try {
            auto wit = bip::forced_orientation_witness(b);
            r.check(bip::check_witness(b, wit).ok(), where + ": witness check failed");
        } catch (const bip::FiniteTreeSet&) {
            r.pass();
        } catch (const std::exception& e) {
            r.check(false, where + ": " + e.what());
        }
    }
    return r;
}

// A random finite graph, nested proper separations (≤ max_seps) and a consistent orientation with non-empty part.
struct FiniteCase {
    Adj g;
    std::vector<Sides> seps;
    std::vector<Sides> o;
};

inline std::optional<FiniteCase> random_finite_case(Rng& rng, int max_seps = 6) {
    FiniteCase fc;
    int n = rng.between(4, 11);
    fc.g = random_finite_graph(rng, n, 15);
    for (int attempt = 0; attempt < 40 && static_cast<int>(fc.seps.size()) < max_seps; ++attempt) {
        int xs = rng.between(1, 2);
        std::vector<char> removed(n, 0);
        for (int i = 0; i < xs; ++i) removed[rng.below(n)] = 1;
        int cnt = 0;
        auto comp = finite_components(fc.g, removed, &cnt);
        if (cnt < 2) continue;
        std::vector<char> pick(cnt);
        for (auto& p : pick) p = rng.chance(50);
        Sides s{Bits(n), Bits(n)};
        for (int v = 0; v < n; ++v) {
            if (removed[v]) {
                s.a[v] = s.b[v] = true;
            } else {
                (pick[comp[v]] ? s.b : s.a)[v] = true;
            }
        }
        if ((s.a - s.b).none() || (s.b - s.a).none()) continue;
        bool ok = true;
        for (const auto& t : fc.seps) {
            Sides ti{t.b, t.a};
            bool dup = (t.a == s.a && t.b == s.b) || (t.a == s.b && t.b == s.a);
            bool nested = sides_le(s, t) || sides_le(t, s) || sides_le(s, ti) || sides_le(ti, s);
            if (dup || !nested) ok = false;
        }
        if (ok) fc.seps.push_back(s);
    }
    if (fc.seps.empty()) return std::nullopt;
    SepSystem sys = system_of(fc.seps);
    auto os = consistent_orientations(sys);
    std::vector<std::vector<int>> good;
    for (const auto& o : os) {
        std::vector<Sides> sd;
        for (int id : o) sd.push_back(id % 2 == 0 ? fc.seps[id / 2] : Sides{fc.seps[id / 2].b, fc.seps[id / 2].a});
        if (part_of(sd, n).any()) good.push_back(o);
    }
    if (good.empty()) return std::nullopt;
    for (int id : good[rng.below(static_cast<int>(good.size()))])
        fc.o.push_back(id % 2 == 0 ? fc.seps[id / 2] : Sides{fc.seps[id / 2].b, fc.seps[id / 2].a});
    return fc;
}

inline Bits random_connected(Rng& rng, const Adj& g, const Bits& allowed, int max_size) {
    Bits s(g.size());
    std::vector<int> cand;
    for (size_t v = 0; v < g.size(); ++v)
        if (allowed[v]) cand.push_back(static_cast<int>(v));
    if (cand.empty()) return s;
    s[cand[rng.below(static_cast<int>(cand.size()))]] = true;
    int size = rng.between(1, max_size);
    for (int step = 1; step < size; ++step) {
        std::vector<int> frontier;
        for (size_t v = s.find_first(); v != Bits::npos; v = s.find_next(v))
            for (int w : g[v])
                if (allowed[w] && !s[w]) frontier.push_back(w);
        if (frontier.empty()) break;
        s[frontier[rng.below(static_cast<int>(frontier.size()))]] = true;
    }
    return s;
}

// The corridor lemmas, the part-path lemma and torso connectivity on one finite case.
inline void finite_case_checks(const FiniteCase& fc, Rng& rng, SuiteResult& r) {
    size_t n = fc.g.size();
    Corridors c;
    try {
        c = corridors(fc.o, n);
    } catch (const std::exception& e) {
        r.check(false, std::string("corridors: ") + e.what());
        return;
    }
    auto note = [&](const std::string& e, const std::string& what) { r.check(e.empty(), what + ": " + e); };
    note(corridor_checks::partition(c, n), "regions partition V minus the part");
    note(corridor_checks::comparable(fc.o), "members with C∖D′ non-empty are comparable");
    note(corridor_checks::membership_by_region(fc.o, c), "corridor membership by region");
    for (int g = 0; g < c.size(); ++g) {
        for (int rep = 0; rep < 4; ++rep) {
            Bits u(n);
            for (size_t v = c.region[g].find_first(); v != Bits::npos; v = c.region[g].find_next(v))
                if (rng.chance(50)) u[v] = true;
            note(corridor_checks::covering_member(fc.o, c, u, g), "finite subsets of a region are covered");
        }
        note(corridor_checks::covering_member(fc.o, c, c.region[g], g), "a whole region is covered");
    }
    Bits outside = ~c.part;
    for (int rep = 0; rep < 4; ++rep) {
        Bits f = random_connected(rng, fc.g, outside, 4);
        if (f.none()) break;
        note(corridor_checks::strict_container(fc.o, f), "connected sets avoiding the part sit strictly inside a member");
        bool in_one = false;
        for (const auto& reg : c.region) in_one = in_one || f.is_subset_of(reg);
        r.check(in_one, "connected set avoiding the part lies in no single region");
    }
    // Separators made cliques; the sides stay separations since no edge leaves a separator.
    Adj h = fc.g;
    for (const auto& s : fc.o) {
        Bits sep = s.a & s.b;
        for (size_t x = sep.find_first(); x != Bits::npos; x = sep.find_next(x))
            for (size_t y = sep.find_next(x); y != Bits::npos; y = sep.find_next(y))
                if (std::find(h[x].begin(), h[x].end(), static_cast<int>(y)) == h[x].end()) {
                    h[x].push_back(static_cast<int>(y));
                    h[y].push_back(static_cast<int>(x));
                }
    }
    note(corridor_checks::xi_cliques(h, c), "region ∩ part is a clique once separators are");
    note(corridor_checks::part_paths(fc.g, fc.o, c.part), "part paths end in a common separator");
    Adj tor = torso(fc.g, fc.o, c.part);
    Bits all(n);
    all.set();
    for (int rep = 0; rep < 5; ++rep) {
        Bits u = rep == 0 ? all : random_connected(rng, fc.g, all, static_cast<int>(n));
        r.check(connected_within(tor, u & c.part), "connected set meets the part in a torso-disconnected set");
    }
}

inline SuiteResult finite_suite(Rng& rng, int graphs) {
    SuiteResult r{"finite corridor suite"};
    int done = 0;
    while (done < graphs) {
        auto fc = random_finite_case(rng);
        if (!fc) continue;
        finite_case_checks(*fc, rng, r);
        ++done;
    }
    return r;
}

namespace bip {

// Chain-kind or star-kind tree sets with random named members nested with the family.
inline BipTreeSet random_bip(Rng& rng, bool chain) {
    BipTreeSet t;
    int nn = rng.between(0, 2), nc = rng.between(1, 2);
    for (int i = 0; i < nn; ++i) t.k.named.push_back("e" + std::to_string(i));
    for (int c = 0; c < nc; ++c) {
        SymbolicSet::Class cl{"N" + std::to_string(c), {}};
        if (rng.chance(25)) cl.absent.insert(rng.below(3));
        t.k.classes.push_back(cl);
    }
    auto random_sset = [&](int max_idx) {
        SSet s = empty_set(t.k);
        for (auto& n : s.named) n = rng.chance(50);
        for (auto& p : s.cls) {
            p.cofinite = rng.chance(40);
            for (int j = 0; j < max_idx; ++j)
                if (rng.chance(30)) p.ex.insert(j);
        }
        return normalize(t.k, s);
    };
    if (chain) {
        ChainFamily f;
        f.cls = rng.below(nc);
        do {
            f.base = random_sset(3);
            f.base.cls[f.cls].cofinite = true;
            f.base = normalize(t.k, f.base);
            f.first = rng.below(3);
            t.chains = {f};
        } while (is_full(t.k, chain_member(t.k, f, f.first)) || !is_regular(t));
    } else {
        StarFamily f;
        for (int c = 0; c < nc; ++c)
            if (c == 0 || rng.chance(50)) f.classes.push_back(c);
        if (rng.chance(30)) f.skip.insert(rng.below(3));
        for (int i = 0; i < 3; ++i)
            if (is_empty(star_leaf(t.k, f, i))) f.skip.insert(i);
        t.stars.push_back(f);
    }
    int wanted = rng.between(0, 3);
    for (int tries = 0; tries < 60 && static_cast<int>(t.named.size()) < wanted; ++tries) {
        SSet z;
        if (chain) {
            const auto& f = t.chains[0];
            z = rng.chance(50) ? unite(t.k, chain_member(t.k, f, rng.between(f.first, f.first + 3)), random_sset(2))
                               : intersect(t.k, chain_limit(t.k, f), random_sset(3));
        } else {
            const auto& f = t.stars[0];
            z = rng.chance(50) ? intersect(t.k, star_leaf(t.k, f, rng.below(4)), random_sset(4)) : intersect(t.k, complement(t.k, unite(t.k, star_leaf(t.k, f, 0), star_leaf(t.k, f, 1))), random_sset(3));
            SSet leaves = empty_set(t.k);
            for (int c : f.classes) leaves.cls[c].cofinite = true;
            if (!rng.chance(50)) z = intersect(t.k, z, complement(t.k, normalize(t.k, leaves)));
        }
        if (is_empty(z) || is_full(t.k, z)) continue;
        BipTreeSet trial = t;
        trial.named.push_back(z);
        if (!is_nested(trial) || !is_regular(trial)) continue;
        bool dup = false;
        for (const auto& r : representatives(t)) dup = dup || r.z == z || r.z == complement(t.k, z);
        if (!dup) t.named.push_back(z);
    }
    return t;
}

}  // namespace bip

struct Sweep {
    SuiteResult oracle{"expansion oracle"}, principal{"principal tree sets"}, decompose{"decomposition"}, tough{"tough torsos"};
    int models = 0;
    int decomposed = 0;  // models with few enough tangle points for the end-to-end run
};

// Models seed, seed+1, ...; each one reproducible from its own seed.
inline Sweep random_sweep(std::uint64_t seed, int count, int kmax = 4, bool end_to_end = true, int max_points = 4) {
    Sweep sw;
    ModelBounds mb;
    mb.max_depth = 2;
    for (int i = 0; i < count; ++i) {
        Rng rng(seed + static_cast<std::uint64_t>(i));
        SymbolicGraph G = random_model(rng, mb);
        std::string tag = "seed " + std::to_string(seed + static_cast<std::uint64_t>(i)) + ": ";
        ++sw.models;
        sw.oracle.guarded(tag, [&] { return oracle_suite(G, kmax, rng); });
        sw.principal.guarded(tag, [&] { return principal_suite(G); });
        if (!end_to_end) continue;
        sw.tough.guarded(tag, [&] { return tough_suite(G); });
        if (static_cast<int>(tangle_points(clique_ify(G, generous_patterns(G)), 3).size()) > max_points) continue;
        ++sw.decomposed;
        sw.decompose.guarded(tag, [&] { return decompose_suite(G); });
    }
    return sw;
}

inline SuiteResult bip_random_suite(std::uint64_t seed, int count, bool chain) {
    SuiteResult r{chain ? "chain-kind bipartitions" : "star-kind bipartitions"};
    for (int i = 0; i < count; ++i) {
        std::string tag = "seed " + std::to_string(seed + static_cast<std::uint64_t>(i)) + ": ";
        Rng rng(seed + static_cast<std::uint64_t>(i));
        r.guarded(tag, [&] {
            SuiteResult one;
            auto t = bip::random_bip(rng, chain);
            auto w = bip::forced_orientation_witness(t);
            r.check((w.kind == bip::Case::OmegaChain) == chain, tag + "dichotomy picked the wrong case");
            auto c = bip::check_witness(t, w);
            one.check(c.consistent, "witness orientation inconsistent");
            one.check(c.covers, "witness misses a member");
            one.check(c.implied, "orientation not implied by a single filter element");
            one.check(c.infinite_meets, "filter elements meet finitely");
            one.check(c.partition, "witness partition blocks overlap");
            return one;
        });
    }
    return r;
}

}  // namespace tf
