#pragma once

#include <catch_amalgamated.hpp>

#include "tangleforge/tangleforge.hpp"

namespace tf::test {

inline SymbolicGraph fixture(const std::string& name) { return load_valid_graph(std::string(TF_FIXTURES) + "/" + name + ".json"); }

inline VSet vs(const SymbolicGraph& G, std::initializer_list<const char*> names) {
    VSet s;
    for (const char* n : names) s.push_back(parse_vref(G, n));
    return normalized(s);
}

// Separations of a finite set: all (A,B) with A ∪ B = V, as bitsets.
inline std::vector<Sides> all_set_separations(int n) {
    std::vector<Sides> out;
    for (int a = 0; a < (1 << n); ++a)
        for (int b = 0; b < (1 << n); ++b) {
            if ((a | b) != (1 << n) - 1) continue;
            Sides s{Bits(n), Bits(n)};
            for (int i = 0; i < n; ++i) {
                s.a[i] = (a >> i) & 1;
                s.b[i] = (b >> i) & 1;
            }
            out.push_back(s);
        }
    return out;
}

inline bool same_sides(const Sides& x, const Sides& y) { return x.a == y.a && x.b == y.b; }

inline SepSystem set_system(const std::vector<Sides>& objs) {
    return make_system(objs, sides_le, [](const Sides& s) { return Sides{s.b, s.a}; }, same_sides);
}

inline int index_of(const std::vector<Sides>& objs, const Sides& s) {
    for (size_t i = 0; i < objs.size(); ++i)
        if (same_sides(objs[i], s)) return static_cast<int>(i);
    return -1;
}

inline Sides set_sep(int n, std::initializer_list<int> a, std::initializer_list<int> b) {
    Sides s{Bits(n), Bits(n)};
    for (int i : a) s.a[i] = true;
    for (int i : b) s.b[i] = true;
    return s;
}

}  // namespace tf::test
