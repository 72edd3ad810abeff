#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tf {

// Abstract separation system with an explicit relation table.
struct SepSystem {
    std::vector<int> inv;
    std::vector<std::vector<char>> leq;
    std::vector<std::string> names;

    int size() const { return static_cast<int>(inv.size()); }

    void check_member(int s) const {
        if (s < 0 || s >= size()) throw std::out_of_range("unknown separation id " + std::to_string(s));
    }
    bool le(int a, int b) const { return leq[a][b] != 0; }
    bool lt(int a, int b) const { return a != b && le(a, b); }

    // Involution, order reversal and partial-order axioms.
    std::string validate() const {
        int n = size();
        if (static_cast<int>(leq.size()) != n) return "relation table size mismatch";
        for (int s = 0; s < n; ++s) {
            if (inv[s] < 0 || inv[s] >= n || inv[inv[s]] != s) return "inv is not an involution at " + std::to_string(s);
            if (!le(s, s)) return "leq not reflexive at " + std::to_string(s);
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (le(a, b) != le(inv[b], inv[a])) return "inv not order-reversing";
                if (a != b && le(a, b) && le(b, a)) return "leq not antisymmetric";
                if (!le(a, b)) continue;
                for (int c = 0; c < n; ++c)
                    if (le(b, c) && !le(a, c)) return "leq not transitive";
            }
        return {};
    }
};

// Builds a system from objects with user-supplied order and involution.
template <class T, class Leq, class Inv, class Eq = std::equal_to<T>>
SepSystem make_system(const std::vector<T>& objs, Leq leq, Inv inv, Eq eq = Eq{}) {
    SepSystem sys;
    int n = static_cast<int>(objs.size());
    sys.inv.assign(n, -1);
    sys.leq.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a) {
        T ia = inv(objs[a]);
        for (int b = 0; b < n; ++b) {
            if (eq(ia, objs[b])) sys.inv[a] = b;
            sys.leq[a][b] = leq(objs[a], objs[b]) ? 1 : 0;
        }
        if (sys.inv[a] < 0) throw std::invalid_argument("system not closed under inversion");
    }
    sys.names.resize(n);
    for (int a = 0; a < n; ++a) sys.names[a] = "s" + std::to_string(a);
    return sys;
}

enum class SepKind { Degenerate, Trivial, Small, Proper };

inline const char* to_string(SepKind k) {
    switch (k) {
        case SepKind::Degenerate: return "degenerate";
        case SepKind::Trivial: return "trivial";
        case SepKind::Small: return "small";
        case SepKind::Proper: return "proper";
    }
    return "?";
}

inline bool is_trivial(const SepSystem& sys, int s) {
    for (int t = 0; t < sys.size(); ++t)
        if (sys.lt(s, t) && sys.lt(s, sys.inv[t]) && t != s && sys.inv[t] != s) return true;
    return false;
}

inline SepKind classify(const SepSystem& sys, int s) {
    sys.check_member(s);
    if (sys.inv[s] == s) return SepKind::Degenerate;
    if (is_trivial(sys, s)) return SepKind::Trivial;
    if (sys.le(s, sys.inv[s])) return SepKind::Small;
    return SepKind::Proper;
}

inline bool is_nested(const SepSystem& sys, int a, int b) {
    sys.check_member(a);
    sys.check_member(b);
    for (int x : {a, sys.inv[a]})
        for (int y : {b, sys.inv[b]})
            if (sys.le(x, y) || sys.le(y, x)) return true;
    return false;
}

inline bool is_nested_set(const SepSystem& sys, const std::vector<int>& subset) {
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (!is_nested(sys, subset[i], subset[j])) return false;
    return true;
}

inline bool is_nested_set(const SepSystem& sys) {
    std::vector<int> all(sys.size());
    for (int i = 0; i < sys.size(); ++i) all[i] = i;
    return is_nested_set(sys, all);
}

// r < s with inv(r), s both chosen violates consistency.
inline bool consistent_pair(const SepSystem& sys, int a, int b) {
    if (a == b) return true;
    if (sys.inv[a] == b) return false;
    if (sys.lt(sys.inv[a], b) && sys.inv[a] != b) return false;
    if (sys.lt(sys.inv[b], a) && sys.inv[b] != a) return false;
    return true;
}

inline bool is_consistent(const SepSystem& sys, const std::vector<int>& chosen) {
    std::vector<char> in(sys.size(), 0);
    for (int s : chosen) {
        sys.check_member(s);
        in[s] = 1;
    }
    for (int s : chosen)
        if (sys.inv[s] != s && in[sys.inv[s]]) throw std::invalid_argument("orientation contains both orientations of a separation");
    for (size_t i = 0; i < chosen.size(); ++i)
        for (size_t j = i + 1; j < chosen.size(); ++j) {
            int r = chosen[i], s = chosen[j];
            if (sys.inv[r] == s) continue;
            if (sys.lt(sys.inv[r], s) || sys.lt(sys.inv[s], r)) return false;
        }
    return true;
}

// Representatives of the unoriented separations: the smaller id of each {s, inv s}.
inline std::vector<int> unoriented(const SepSystem& sys) {
    std::vector<int> reps;
    for (int s = 0; s < sys.size(); ++s)
        if (s <= sys.inv[s]) reps.push_back(s);
    return reps;
}

// Every consistent orientation of the whole system containing `forced`, by backtracking.
inline std::vector<std::vector<int>> consistent_orientations(const SepSystem& sys, const std::vector<int>& forced = {}) {
    std::vector<int> reps = unoriented(sys);
    std::vector<char> banned(sys.size(), 0);
    for (int f : forced) banned[sys.inv[f]] = 1;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == reps.size()) {
            out.push_back(cur);
            return;
        }
        int s = reps[i];
        std::vector<int> options{s};
        if (sys.inv[s] != s) options.push_back(sys.inv[s]);
        for (int o : options) {
            if (banned[o]) continue;
            bool ok = true;
            for (int c : cur)
                if (!consistent_pair(sys, o, c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(o);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    for (auto& o : out) std::sort(o.begin(), o.end());
    return out;
}

inline std::vector<int> maximal_elements(const SepSystem& sys, const std::vector<int>& set) {
    std::vector<int> out;
    for (int s : set) {
        bool maximal = true;
        for (int t : set)
            if (sys.lt(s, t)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(s);
    }
    return out;
}

inline std::vector<int> down_closure(const SepSystem& sys, const std::vector<int>& set) {
    std::vector<int> out;
    for (int s = 0; s < sys.size(); ++s)
        for (int t : set)
            if (sys.le(s, t)) {
                out.push_back(s);
                break;
            }
    return out;
}

inline bool is_star(const SepSystem& sys, const std::vector<int>& members) {
    for (int r : members)
        for (int s : members)
            if (r != s && !sys.le(r, sys.inv[s])) return false;
    return true;
}

// Stars whose down-closure is a consistent orientation of the whole system.
inline std::vector<std::vector<int>> splitting_stars(const SepSystem& sys) {
    if (!is_nested_set(sys)) throw std::invalid_argument("splitting stars require a nested system");
    std::vector<std::vector<int>> stars;
    for (const auto& o : consistent_orientations(sys)) {
        std::vector<int> star = maximal_elements(sys, o);
        if (!is_star(sys, star)) continue;
        if (down_closure(sys, star) != o) continue;
        stars.push_back(star);
    }
    return stars;
}

struct Tree {
    int n = 1;
    std::vector<std::pair<int, int>> edges;

    std::vector<std::vector<int>> distances() const {
        std::vector<std::vector<int>> adj(n);
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
        for (int s = 0; s < n; ++s) {
            std::queue<int> q;
            q.push(s);
            d[s][s] = 0;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : adj[v])
                    if (d[s][w] < 0) {
                        d[s][w] = d[s][v] + 1;
                        q.push(w);
                    }
            }
        }
        return d;
    }
};

// Element 2e is the edge e oriented (x,y), element 2e+1 is (y,x).
inline SepSystem edge_tree_set(const Tree& t) {
    auto d = t.distances();
    int m = static_cast<int>(t.edges.size());
    SepSystem sys;
    sys.inv.resize(2 * m);
    sys.leq.assign(2 * m, std::vector<char>(2 * m, 0));
    sys.names.resize(2 * m);
    auto oriented = [&](int id) {
        auto [a, b] = t.edges[id / 2];
        return id % 2 == 0 ? std::pair{a, b} : std::pair{b, a};
    };
    for (int i = 0; i < 2 * m; ++i) {
        sys.inv[i] = i ^ 1;
        auto [x, y] = oriented(i);
        sys.names[i] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        for (int j = 0; j < 2 * m; ++j) {
            if (i == j) {
                sys.leq[i][j] = 1;
                continue;
            }
            if (i / 2 == j / 2) continue;
            auto [u, v] = oriented(j);
            sys.leq[i][j] = (d[y][u] + 1 == d[x][u] && d[y][u] + 1 == d[y][v]) ? 1 : 0;
        }
    }
    return sys;
}

// Nodes are the splitting stars; each separation joins the stars holding its two orientations.
inline Tree tree_from_tree_set(const SepSystem& sys) {
    for (int s = 0; s < sys.size(); ++s)
        if (sys.le(s, sys.inv[s])) throw std::invalid_argument("tree set is not regular: element " + sys.names[s] + " is small");
    auto stars = splitting_stars(sys);
    Tree t;
    t.n = std::max<int>(1, static_cast<int>(stars.size()));
    std::vector<int> star_of(sys.size(), -1);
    for (int i = 0; i < static_cast<int>(stars.size()); ++i)
        for (int s : stars[i]) {
            if (star_of[s] >= 0) throw std::invalid_argument("separation lies in two splitting stars");
            star_of[s] = i;
        }
    for (int s : unoriented(sys)) {
        int a = star_of[s], b = star_of[sys.inv[s]];
        if (a < 0 || b < 0) throw std::invalid_argument("separation " + sys.names[s] + " is not essential");
        t.edges.emplace_back(b, a);
    }
    return t;
}

// Rooted-free isomorphism test for small trees via canonical AHU encodings over all roots.
inline std::string tree_canonical(const Tree& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::function<std::string(int, int)> enc = [&](int v, int p) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != p) kids.push_back(enc(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        return s + ")";
    };
    std::string best;
    for (int r = 0; r < t.n; ++r) {
        std::string s = enc(r, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace tf
