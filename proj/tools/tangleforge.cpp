#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tangleforge/tangleforge.hpp"

using namespace tf;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct Args {
    std::string file;
    int k = 0;  // 0: the subcommand's default
    std::uint64_t seed = 1;
    int count = 100;
    int aug_bound = 4;
    std::string dot, json_path, suite = "all";
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

// JSON goes to --json when given, stdout otherwise.
void emit(const Args& a, const json& j) {
    std::string text = j.dump(2) + "\n";
    if (a.json_path.empty())
        std::cout << text;
    else
        write_file(a.json_path, text);
}

int window(const Args& a) { return a.k > 0 ? a.k : 4; }

int cmd_validate(const Args& a) {
    SymbolicGraph g = load_valid_graph(a.file);
    std::cout << "ok: " << g.core.size() << " core vertices, " << g.classes.size() << " classes, " << g.rays.size() << " ray classes, "
              << g.cliques.size() << " clique classes\n";
    return kOk;
}

int cmd_crit(const Args& a) {
    emit(a, crit_json(load_valid_graph(a.file)));
    return kOk;
}

int cmd_treeset(const Args& a) {
    SymbolicGraph g0 = load_valid_graph(a.file);
    SymbolicGraph g = clique_ify(g0, generous_patterns(g0));
    auto t = starting_tree_set(g, window(a));
    emit(a, treeset_json(t));
    return is_nested_set(t.sys) && is_regular(t.sys) ? kOk : kVerificationFailed;
}

int cmd_decompose(const Args& a) {
    SymbolicGraph g = load_valid_graph(a.file);
    PipelineOptions opt;
    opt.w = window(a);
    opt.oracle_bound = a.aug_bound;
    auto d = decompose(g, opt);
    emit(a, decomposition_json(*d, {a.seed, a.aug_bound, opt.w}));
    if (!a.dot.empty()) write_file(a.dot, decomposition_dot(*d));
    if (all_ok(d->checks)) return kOk;
    for (const auto& c : d->checks)
        if (!c.ok) std::cerr << "failed: " << c.name << ": " << c.detail << "\n";
    return kVerificationFailed;
}

int cmd_tough(const Args& a) {
    auto r = tough_decomposition(load_valid_graph(a.file), window(a));
    emit(a, tough_json(r));
    return all_ok(r.checks) ? kOk : kVerificationFailed;
}

// A tree set of bipartitions directly, or the ones a graph's tree set induces on each 𝒞̌_X.
int cmd_bip_witness(const Args& a) {
    std::ifstream in(a.file);
    if (!in) throw InputError("cannot open " + a.file);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    auto verdict = [](const json& w) {
        if (!w.contains("checks")) return true;
        for (const auto& [k, v] : w["checks"].items())
            if (!v.get<bool>()) return false;
        return true;
    };
    if (j.contains("set")) {
        auto t = bip::bip_from_json(j);
        if (auto v = bip::nesting_violation(t))
            throw InputError("not a tree set: " + bip::to_string(v->first) + " and " + bip::to_string(v->second) + " cross");
        if (!bip::is_regular(t)) throw InputError("not a regular tree set: some member is empty or everything");
        json w = bip::witness_json(t);
        emit(a, w);
        return verdict(w) ? kOk : kVerificationFailed;
    }
    SymbolicGraph g = load_valid_graph(a.file);
    auto t = starting_tree_set(g, window(a));
    json out = json::array();
    bool ok = true;
    for (const auto& x : crit_window(g, window(a))) {
        if (!is_critical(g, x)) continue;
        json w = bip::witness_json(bip::graph_to_bipartitions(t, x));
        w["X"] = vset_json(g, x);
        ok = ok && verdict(w);
        out.push_back(w);
    }
    emit(a, out);
    return ok ? kOk : kVerificationFailed;
}

void print(const SuiteResult& r, json& out) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << "\n";
    out.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"counterexamples", r.counterexamples}});
}

int cmd_verify(const Args& a) {
    static const std::set<std::string> on_file{"all", "oracle", "principal", "decompose", "tough", "bip"};
    static const std::set<std::string> generated{"random", "finite", "bipartitions"};
    std::vector<SuiteResult> results;
    if (on_file.count(a.suite)) {
        if (a.file.empty()) throw InputError("suite " + a.suite + " needs a graph file");
        SymbolicGraph g = load_valid_graph(a.file);
        bool all = a.suite == "all";
        Rng rng(a.seed);
        int k = a.k > 0 ? a.k : 4;
        auto run = [&](const std::string& name, auto f) {
            if (!all && a.suite != name) return;
            SuiteResult r;
            r.guarded("", f);
            r.name = name;
            results.push_back(r);
        };
        run("oracle", [&] { return oracle_suite(g, k, rng); });
        run("principal", [&] { return principal_suite(g); });
        run("decompose", [&] {
            PipelineOptions opt;
            opt.oracle_bound = a.aug_bound;
            return decompose_suite(g, opt);
        });
        run("tough", [&] { return tough_suite(g); });
        run("bip", [&] { return bip_graph_suite(g); });
    } else if (generated.count(a.suite)) {
        if (a.suite == "random") {
            Sweep sw = random_sweep(a.seed, a.count, a.k > 0 ? a.k : 4);
            results = {sw.oracle, sw.principal, sw.decompose, sw.tough};
        } else if (a.suite == "finite") {
            Rng rng(a.seed);
            results.push_back(finite_suite(rng, a.count));
        } else {
            results.push_back(bip_random_suite(a.seed, a.count, true));
            results.push_back(bip_random_suite(a.seed, a.count, false));
        }
    } else {
        throw InputError("unknown suite " + a.suite);
    }
    json out = json::array();
    bool ok = true;
    for (const auto& r : results) {
        print(r, out);
        ok = ok && r.ok();
    }
    if (!a.json_path.empty()) write_file(a.json_path, json({{"suites", out}, {"seed", a.seed}}).dump(2) + "\n");
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree-of-tangles decompositions of finitely described infinite graphs"};
    app.require_subcommand(1);
    Args a;
    auto common = [&](CLI::App* c, bool file_required) {
        auto* f = c->add_option("file", a.file, "graph (or bipartition) JSON");
        if (file_required) f->required();
        c->add_option("--k", a.k, "window size, or expansion size for the oracle");
        c->add_option("--seed", a.seed, "random seed");
        c->add_option("--json", a.json_path, "write JSON here instead of stdout");
        c->add_option("--aug-bound", a.aug_bound, "largest order checked by the brute-force oracle");
    };
    struct Sub {
        const char* name;
        const char* help;
        int (*run)(const Args&);
    };
    const Sub subs[] = {
        {"validate", "check a graph description", cmd_validate},
        {"crit", "list the critical vertex sets", cmd_crit},
        {"treeset", "the nested tree set of principal separations", cmd_treeset},
        {"decompose", "tree set distinguishing all ends and critical sets, with certificates", cmd_decompose},
        {"tough", "tree set whose torsos are tough", cmd_tough},
        {"bip-witness", "ultrafilters no tree set of bipartitions tells apart", cmd_bip_witness},
        {"verify", "run invariant suites", cmd_verify},
    };
    std::map<CLI::App*, const Sub*> by_app;
    for (const auto& s : subs) {
        CLI::App* c = app.add_subcommand(s.name, s.help);
        common(c, std::string(s.name) != "verify");
        if (std::string(s.name) == "decompose") c->add_option("--dot", a.dot, "write the decomposition tree as DOT");
        if (std::string(s.name) == "verify") {
            c->add_option("--suite", a.suite, "all|oracle|principal|decompose|tough|bip on a file; random|finite|bipartitions generated");
            c->add_option("--count", a.count, "number of generated instances");
        }
        by_app[c] = &s;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }
    try {
        for (const auto& [c, s] : by_app)
            if (c->parsed()) return s->run(a);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kInputError;
}
