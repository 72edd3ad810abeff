#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "model.hpp"

namespace tf {

using json = nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int lookup(const std::vector<std::string>& names, const std::string& n, const std::string& what) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw InputError(what + ": unknown vertex '" + n + "'");
    return static_cast<int>(it - names.begin());
}

}  // namespace detail

inline SymbolicGraph graph_from_json(const json& j) {
    SymbolicGraph g;
    try {
        const json& core = j.at("core");
        g.core = core.at("vertices").get<std::vector<std::string>>();
        for (const auto& e : core.value("edges", json::array()))
            g.core_edges.emplace_back(detail::lookup(g.core, e.at(0), "core edge"), detail::lookup(g.core, e.at(1), "core edge"));
        for (const auto& c : j.value("classes", json::array())) {
            GadgetClass gc;
            gc.id = c.at("id").get<std::string>();
            std::string scope = c.value("scope", std::string("core"));
            if (scope != "core") {
                gc.parent = g.class_index(scope);
                if (gc.parent < 0) throw InputError("class " + gc.id + ": unknown scope '" + scope + "'");
            }
            gc.gadget.verts = c.at("gadget").at("vertices").get<std::vector<std::string>>();
            for (const auto& e : c.at("gadget").value("edges", json::array()))
                gc.gadget.edges.emplace_back(detail::lookup(gc.gadget.verts, e.at(0), "gadget edge"),
                                             detail::lookup(gc.gadget.verts, e.at(1), "gadget edge"));
            const auto& scope_names = gc.parent < 0 ? g.core : g.classes[gc.parent].gadget.verts;
            for (const auto& a : c.at("attachment"))
                gc.attach.emplace_back(detail::lookup(gc.gadget.verts, a.at(0), "attachment"),
                                       detail::lookup(scope_names, a.at(1), "attachment of " + gc.id));
            const json& m = c.at("multiplicity");
            if (m.is_string()) {
                if (m.get<std::string>() != "omega") throw InputError("class " + gc.id + ": multiplicity must be an integer or \"omega\"");
                gc.mult = kOmega;
            } else {
                gc.mult = m.get<int>();
            }
            g.classes.push_back(std::move(gc));
        }
        for (const auto& r : j.value("rays", json::array())) {
            RayClass rc;
            rc.id = r.at("id").get<std::string>();
            rc.attach = detail::lookup(g.core, r.at("attach"), "ray " + rc.id);
            for (const auto& d : r.value("dominating", json::array())) rc.dom.push_back(detail::lookup(g.core, d, "ray " + rc.id));
            g.rays.push_back(std::move(rc));
        }
        for (const auto& q : j.value("cliques", json::array())) {
            CliqueClass cc;
            cc.id = q.at("id").get<std::string>();
            for (const auto& a : q.at("attach")) cc.attach.push_back(detail::lookup(g.core, a, "clique " + cc.id));
            g.cliques.push_back(std::move(cc));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("schema: ") + e.what());
    }
    return g;
}

inline json graph_to_json(const SymbolicGraph& g) {
    json j;
    j["core"]["vertices"] = g.core;
    j["core"]["edges"] = json::array();
    for (auto [a, b] : g.core_edges) j["core"]["edges"].push_back({g.core[a], g.core[b]});
    j["classes"] = json::array();
    for (const auto& c : g.classes) {
        json jc;
        jc["id"] = c.id;
        jc["scope"] = c.parent < 0 ? std::string("core") : g.classes[c.parent].id;
        jc["gadget"]["vertices"] = c.gadget.verts;
        jc["gadget"]["edges"] = json::array();
        for (auto [a, b] : c.gadget.edges) jc["gadget"]["edges"].push_back({c.gadget.verts[a], c.gadget.verts[b]});
        const auto& scope_names = c.parent < 0 ? g.core : g.classes[c.parent].gadget.verts;
        jc["attachment"] = json::array();
        for (auto [gv, sv] : c.attach) jc["attachment"].push_back({c.gadget.verts[gv], scope_names[sv]});
        if (c.mult == kOmega)
            jc["multiplicity"] = "omega";
        else
            jc["multiplicity"] = c.mult;
        j["classes"].push_back(jc);
    }
    j["rays"] = json::array();
    for (const auto& r : g.rays) {
        json jr{{"id", r.id}, {"attach", g.core[r.attach]}};
        if (!r.dom.empty()) {
            jr["dominating"] = json::array();
            for (int d : r.dom) jr["dominating"].push_back(g.core[d]);
        }
        j["rays"].push_back(jr);
    }
    j["cliques"] = json::array();
    for (const auto& q : g.cliques) {
        json jq{{"id", q.id}, {"attach", json::array()}};
        for (int a : q.attach) jq["attach"].push_back(g.core[a]);
        j["cliques"].push_back(jq);
    }
    return j;
}

inline SymbolicGraph graph_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(j);
}

inline SymbolicGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_string(ss.str());
}

// Loads and rejects anything validate objects to; the diagnostics become the message.
inline SymbolicGraph load_valid_graph(const std::string& path) {
    SymbolicGraph g = load_graph(path);
    auto diag = validate(g);
    if (diag.empty()) return g;
    std::string msg;
    for (const auto& d : diag) msg += (msg.empty() ? "" : "; ") + d;
    throw InputError(msg);
}

}  // namespace tf
