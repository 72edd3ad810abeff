#pragma once

#include <sstream>

#include "bipartitions.hpp"
#include "graph_io.hpp"

namespace tf {

inline json vset_json(const SymbolicGraph& G, const VSet& s) {
    json a = json::array();
    for (const auto& v : s) a.push_back(to_string(G, v));
    return a;
}

inline json checks_json(const std::vector<Check>& cs) {
    json a = json::array();
    for (const auto& c : cs) {
        json j = {{"name", c.name}, {"ok", c.ok}};
        if (!c.ok) j["counterexample"] = c.detail;
        a.push_back(j);
    }
    return a;
}

inline json crit_json(const SymbolicGraph& G) {
    json named = json::array(), families = json::array();
    for (const auto& ce : crit(G)) {
        if (!ce.family) {
            for (const auto& ctx : instance_paths(G, ce.scope, 1)) named.push_back(vset_json(G, ce.instantiate(ctx)));
            continue;
        }
        json slots = json::array();
        for (int s : ce.slots) slots.push_back(G.classes[ce.scope].gadget.verts[s]);
        families.push_back({{"class", G.classes[ce.scope].id},
                            {"vertices", slots},
                            {"representative", vset_json(G, ce.instantiate(std::vector<int>(G.depth(ce.scope) + 1, 0)))},
                            {"multiplicity", "ω"}});
    }
    return {{"named", named}, {"families", families}};
}

// Members of T that are one of infinitely many alike: grouped by pattern, kind and family slot.
inline std::vector<int> family_groups(const WindowTreeSet& t) {
    std::vector<int> group(t.size(), -1);
    std::vector<std::string> keys;
    for (int i = 0; i < t.size(); ++i) {
        const auto& m = t.members[i];
        const auto& y = t.ys[m.y];
        bool pat_family = t.patterns[y.pattern].family;
        if (!m.family && !pat_family) continue;
        std::string key = std::to_string(y.pattern) + (m.kind == TreeMember::Kind::Big ? "B" : "S");
        key += m.family ? "f" + std::to_string(m.k.fam) : "n" + std::to_string(m.k.named);
        if (!pat_family) key += "y" + std::to_string(m.y);
        auto it = std::find(keys.begin(), keys.end(), key);
        group[i] = static_cast<int>(it - keys.begin());
        if (it == keys.end()) keys.push_back(key);
    }
    return group;
}

inline json member_json(const OSep& s) {
    return {{"separator", vset_json(s.graph(), s.separator())}, {"order", s.order()}, {"separation", describe(s)}};
}

inline json treeset_json(const WindowTreeSet& t) {
    json members = json::array(), families = json::array();
    auto group = family_groups(t);
    int ng = group.empty() ? 0 : *std::max_element(group.begin(), group.end()) + 1;
    std::vector<int> rep(ng, -1);
    for (int i = 0; i < t.size(); ++i) {
        json m = member_json(t.members[i].sep);
        m["id"] = i;
        m["kind"] = t.members[i].kind == TreeMember::Kind::Big ? "big" : "small";
        m["family"] = group[i] >= 0 ? json(group[i]) : json(nullptr);
        members.push_back(m);
        if (group[i] >= 0 && rep[group[i]] < 0) rep[group[i]] = i;
    }
    for (int g = 0; g < ng; ++g) families.push_back({{"id", g}, {"representative", rep[g]}, {"multiplicity", "ω"}});
    return {{"members", members},
            {"families", families},
            {"window", t.w},
            {"nested", is_nested_set(t.sys)},
            {"regular", is_regular(t.sys)}};
}

struct RunMeta {
    std::uint64_t seed = 0;
    int aug_bound = 4;
    int k = 0;
};

inline json metadata_json(const RunMeta& meta, int w, int reps) {
    return {{"enumeration_order",
             "tangle points: rays, cliques, then critical sets by instance; pairs lexicographic; separators lexicographically least among "
             "minimum cuts; end tree sets by (order, pair) with subsets in universe order"},
            {"bounds", {{"window", w}, {"representatives", reps}, {"aug_bound", meta.aug_bound}}},
            {"oracle_k", meta.aug_bound},
            {"seed", meta.seed}};
}

inline json decomposition_json(const Decomposition& d, const RunMeta& meta) {
    const SymbolicGraph& G = *d.g;
    json ts = treeset_json(d.t);
    for (int i = d.t.size(); i < static_cast<int>(d.all.size()); ++i) {
        json m = member_json(d.all[i]);
        m["id"] = i;
        m["kind"] = "lift";
        m["family"] = nullptr;
        ts["members"].push_back(m);
    }
    auto table = side_table(G, d.all, d.w + 2);
    ts["nested"] = is_nested_set(system_of(table.s));
    json certs = json::array();
    for (const auto& c : d.certs)
        certs.push_back({{"t1", to_string(G, c.t1)},
                         {"t2", to_string(G, c.t2)},
                         {"separator", vset_json(G, c.z)},
                         {"order", c.order},
                         {"oracle_order", c.oracle < 0 ? json(nullptr) : json(c.oracle)},
                         {"member", c.member},
                         {"efficient", c.ok}});
    json prov = json::array();
    for (size_t i = 0; i < d.all.size(); ++i) {
        const auto& p = d.prov[i];
        if (p.from_T)
            prov.push_back({{"member", i}, {"source", "starting tree set"}});
        else
            prov.push_back({{"member", i}, {"source", "lift"}, {"torso", p.torso}, {"torso_member", p.h_member}});
    }
    json torsos = json::array();
    for (const auto& r : d.torsos) {
        json th = json::array();
        for (const auto& s : r.th) th.push_back(describe(s));
        torsos.push_back({{"Z", vset_json(G, r.z)},
                          {"part", vset_json(G, part_vertices(r.view))},
                          {"torso_core", r.mt.h.core},
                          {"end_tree_set", th}});
    }
    json points = json::array();
    for (const auto& t : d.points) points.push_back(to_string(G, t));
    return {{"tree_set", ts},
            {"certificates", certs},
            {"provenance", {{"members", prov}, {"torsos", torsos}, {"tangle_points", points}}},
            {"checks", checks_json(d.checks)},
            {"metadata", metadata_json(meta, d.w, d.reps)}};
}

inline json tough_json(const ToughDecomposition& r) {
    const SymbolicGraph& G = *r.g;
    json torsos = json::array();
    for (const auto& t : r.torsos) {
        json crit_left = json::array();
        for (const auto& ce : crit(t.torso)) crit_left.push_back(ce.slots);
        torsos.push_back({{"part", vset_json(G, t.part)},
                          {"torso_core", t.torso.core},
                          {"tough", t.tough},
                          {"stable_component_counts", t.stable},
                          {"critical_sets_left", crit_left}});
    }
    std::set<VSet> seps;
    for (const auto& m : r.t.members) seps.insert(m.sep.separator());
    json sj = json::array();
    for (const auto& s : seps) sj.push_back(vset_json(G, s));
    return {{"tree_set", treeset_json(r.t)}, {"separators", sj}, {"torsos", torsos}, {"checks", checks_json(r.checks)}};
}

// Named members plus one representative per family, deduplicated; DOT nodes are the splitting stars.
inline std::string decomposition_dot(const Decomposition& d) {
    const SymbolicGraph& G = *d.g;
    auto group = family_groups(d.t);
    std::vector<OSep> seps;
    std::vector<bool> omega;
    std::vector<int> seen;
    for (int i = 0; i < static_cast<int>(d.all.size()); ++i) {
        int g = i < d.t.size() ? group[i] : -1;
        if (g >= 0 && std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        if (g >= 0) seen.push_back(g);
        seps.push_back(d.all[i]);
        omega.push_back(g >= 0);
    }
    auto table = side_table(G, seps, d.w + 2);
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(seps.size()); ++i) {
        bool dup = false;
        for (int j : keep) {
            const Sides& a = table.s[i];
            const Sides& b = table.s[j];
            if ((a.a == b.a && a.b == b.b) || (a.a == b.b && a.b == b.a)) dup = true;
        }
        if (!dup) keep.push_back(i);
    }
    std::vector<Sides> kept;
    for (int i : keep) kept.push_back(table.s[i]);
    SepSystem sys = system_of(kept);
    Tree tree = tree_from_tree_set(sys);
    std::ostringstream out;
    out << "graph decomposition {\n  node [shape=circle];\n";
    for (int v = 0; v < tree.n; ++v) out << "  n" << v << " [label=\"" << v << "\"];\n";
    auto units = unoriented(sys);
    for (size_t e = 0; e < tree.edges.size(); ++e) {
        int idx = keep[units[e] / 2];
        std::string label = to_string(G, seps[idx].separator()) + " |" + std::to_string(seps[idx].order()) + "|";
        if (omega[idx]) label += " ×ω";
        out << "  n" << tree.edges[e].first << " -- n" << tree.edges[e].second << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

namespace bip {

inline json sset_json(const SymbolicSet& k, const SSet& s) {
    json named = json::array();
    for (size_t i = 0; i < s.named.size(); ++i)
        if (s.named[i]) named.push_back(k.named[i]);
    json cls = json::object();
    for (size_t c = 0; c < s.cls.size(); ++c) {
        const auto& p = s.cls[c];
        if (!p.cofinite && p.ex.empty()) continue;
        cls[k.classes[c].id] = {{"cofinite", p.cofinite}, {"except", p.cofinite ? set_minus(p.ex, k.classes[c].absent) : std::set<int>{}},
                                {"finite", p.cofinite ? std::set<int>{} : p.ex}};
    }
    return {{"named", named}, {"classes", cls}, {"text", to_string(k, s)}};
}

inline SSet sset_from_json(const SymbolicSet& k, const json& j) {
    SSet s = empty_set(k);
    for (const auto& n : j.value("named", json::array())) s.named[detail::lookup(k.named, n.get<std::string>(), "element")] = 1;
    std::vector<std::string> ids;
    for (const auto& c : k.classes) ids.push_back(c.id);
    const json cls = j.value("classes", json::object());
    for (const auto& [id, p] : cls.items()) {
        auto& part = s.cls[detail::lookup(ids, id, "class")];
        part.cofinite = p.value("cofinite", false);
        for (int x : p.value(part.cofinite ? "except" : "finite", std::vector<int>{})) {
            if (x < 0) throw InputError("negative class index");
            part.ex.insert(x);
        }
    }
    return normalize(k, s);
}

// {"set": {"named": [...], "classes": [{"id", "absent"?}]}, "named": [subset], "chains": [{"base", "class", "first"?}],
//  "stars": [{"classes": [...], "skip"?}]}
inline BipTreeSet bip_from_json(const json& j) {
    try {
        BipTreeSet t;
        const json& k = j.at("set");
        for (const auto& n : k.value("named", json::array())) t.k.named.push_back(n.get<std::string>());
        for (const auto& c : k.value("classes", json::array()))
            t.k.classes.push_back({c.at("id").get<std::string>(), c.value("absent", std::set<int>{})});
        std::vector<std::string> ids;
        for (const auto& c : t.k.classes) ids.push_back(c.id);
        for (const auto& z : j.value("named", json::array())) t.named.push_back(sset_from_json(t.k, z));
        for (const auto& c : j.value("chains", json::array())) {
            ChainFamily f{sset_from_json(t.k, c.at("base")), detail::lookup(ids, c.at("class").get<std::string>(), "class"), c.value("first", 0)};
            if (!f.base.cls[f.cls].cofinite) throw InputError("chain base must contain cofinitely much of its class");
            t.chains.push_back(f);
        }
        for (const auto& s : j.value("stars", json::array())) {
            StarFamily f;
            for (const auto& c : s.at("classes")) f.classes.push_back(detail::lookup(ids, c.get<std::string>(), "class"));
            f.skip = s.value("skip", std::set<int>{});
            t.stars.push_back(f);
        }
        return t;
    } catch (const json::exception& e) {
        throw InputError(std::string("bipartition tree set: ") + e.what());
    }
}

inline json bip_json(const BipTreeSet& t) {
    json named = json::array(), chains = json::array(), stars = json::array(), classes = json::array();
    for (const auto& c : t.k.classes) classes.push_back({{"id", c.id}, {"absent", c.absent}});
    for (const auto& z : t.named) named.push_back(sset_json(t.k, z));
    for (const auto& c : t.chains) chains.push_back({{"base", sset_json(t.k, c.base)}, {"class", t.k.classes[c.cls].id}, {"first", c.first}});
    for (const auto& s : t.stars) {
        json cs = json::array();
        for (int c : s.classes) cs.push_back(t.k.classes[c].id);
        stars.push_back({{"classes", cs}, {"skip", s.skip}});
    }
    return {{"set", {{"named", t.k.named}, {"classes", classes}}},
            {"named", named},
            {"chains", chains},
            {"stars", stars},
            {"notes", t.notes},
            {"nested", is_nested(t)},
            {"regular", is_regular(t)}};
}

inline json witness_json(const BipTreeSet& t) {
    json out = {{"tree_set", bip_json(t)}};
    Witness w;
    try {
        w = forced_orientation_witness(t);
    } catch (const FiniteTreeSet& e) {
        out["case"] = to_string(Case::FiniteCase);
        out["report"] = e.what();
        return out;
    }
    WitnessCheck c = check_witness(t, w);
    json part = json::array(), filt = json::array(), orient = json::array();
    for (const auto& [name, s] : w.partition) part.push_back({{"block", name}, {"set", sset_json(t.k, s)}});
    for (const auto& [label, s] : w.filter) filt.push_back({{"label", label}, {"set", sset_json(t.k, s)}});
    for (const auto& o : w.orientation)
        orient.push_back({{"member", to_string(o.rep)}, {"side", sset_json(t.k, o.side)}, {"implied_by", o.filter}});
    out["case"] = to_string(w.kind);
    out["family"] = w.family;
    out["partition"] = part;
    out["filter_base"] = {{"rule", w.filter_rule}, {"representatives", filt}};
    out["forced_orientation"] = orient;
    out["remark"] = w.remark;
    out["checks"] = {{"consistent", c.consistent},
                     {"covers_every_member", c.covers},
                     {"implied_by_single_filter_element", c.implied},
                     {"pairwise_infinite_intersections", c.infinite_meets},
                     {"partition", c.partition}};
    return out;
}

}  // namespace bip

}  // namespace tf
