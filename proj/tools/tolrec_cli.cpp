#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <variant>

#include "tolrec/error.hpp"
#include "tolrec/io.hpp"
#include "tolrec/oracles.hpp"
#include "tolrec/orientation.hpp"
#include "tolrec/reduction.hpp"
#include "tolrec/split.hpp"
#include "tolrec/structure.hpp"

using namespace tolrec;
namespace fs = std::filesystem;

namespace {

// Returned by a subcommand: exit code plus the report.
struct Outcome {
    int code = 0;
    Json report;
    std::string text;  // human-readable form, printed without --json
};

struct Common {
    bool json = false;
    std::uint64_t seed = 0;
};

using AnyRep = std::variant<PermutationRep, TrapezoidRep, ToleranceRep>;

AnyRep load_rep(const std::string& path) {
    Json j = Json::parse(read_file(path));
    if (j.contains("lines")) return permutation_rep_from_json(j);
    if (j.contains("traps")) return trapezoid_rep_from_json(j);
    if (j.contains("intervals")) return tolerance_rep_from_json(j);
    throw InvalidArgument(path + ": expected \"lines\", \"traps\" or \"intervals\"");
}

GraphDoc load_graph(const std::string& path) { return graph_from_json(Json::parse(read_file(path))); }

MonotoneCnf load_cnf(const std::string& path) { return parse_cnf(read_file(path)); }

std::vector<Vertex> parse_id_list(const std::string& s) {
    std::vector<Vertex> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw CLI::ValidationError("--set", "bad vertex id '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

Json vec_json(const std::vector<int>& v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x);
    return a;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string assignment_text(const Assignment& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::string(a[i] ? "1" : "0");
    return s;
}

Json assignment_json(const Assignment& a) {
    Json j = Json::array();
    for (bool b : a) j.push_back(b ? 1 : 0);
    return j;
}

// reduce

struct ReduceArgs {
    std::string cnf, emit = "pphi", out;
    bool dot = false;
};

void write_graph_files(const fs::path& dir, const std::string& name, const Graph& g,
                       const std::vector<std::string>& labels, bool dot, Json& files) {
    write_file((dir / (name + ".graph.json")).string(), graph_to_json(g, labels).dump(2) + "\n");
    files.push_back(name + ".graph.json");
    if (dot) {
        write_file((dir / (name + ".dot")).string(), to_dot(g, labels, name));
        files.push_back(name + ".dot");
    }
}

Outcome run_reduce(const ReduceArgs& a, const Common& c) {
    MonotoneCnf f = load_cnf(a.cnf);
    // Seed 0 keeps the canonical pair order inside each block.
    ReductionArtifacts art = build_Pphi(f, c.seed ? std::optional<std::uint64_t>(c.seed) : std::nullopt);
    fs::path dir(a.out);
    fs::create_directories(dir);
    Json files = Json::array();
    Json rep;
    int vertices = 0;

    if (a.emit == "pphi") {
        write_graph_files(dir, "pphi", art.pphi, art.labels, a.dot, files);
        rep = rep_to_json(art.rp);
        vertices = art.pphi.n();
        Json labels = Json::object();
        for (std::size_t i = 0; i < art.labels.size(); ++i) labels[std::to_string(i)] = art.labels[i];
        write_file((dir / "pphi.labels.json").string(), labels.dump(2) + "\n");
        files.push_back("pphi.labels.json");
        Json blocks = Json::array();
        for (const auto& b : art.blocks) blocks.push_back(vec_json(b));
        write_file((dir / "pphi.blocks.json").string(), blocks.dump(2) + "\n");
        files.push_back("pphi.blocks.json");
        write_file((dir / "pphi.pairs.json").string(), pairs_to_json(art.merge_pairs).dump(2) + "\n");
        files.push_back("pphi.pairs.json");
    } else {
        TrapezoidInstance gi = build_Gphi(art);
        TrapezoidInstance inst = a.emit == "gphi" ? gi : build_Hphi(gi.graph, gi.rep);
        write_graph_files(dir, a.emit, inst.graph, {}, a.dot, files);
        rep = rep_to_json(inst.rep);
        vertices = inst.graph.n();
    }
    write_file((dir / (a.emit + ".rep.json")).string(), rep.dump(2) + "\n");
    files.push_back(a.emit + ".rep.json");

    Outcome o;
    o.report = {{"emit", a.emit},     {"n", f.n},
                {"k", f.k()},         {"vertices", vertices},
                {"merge_pairs", art.m()}, {"connector_lines", art.connector_count},
                {"files", files}};
    o.text = a.emit + ": " + std::to_string(vertices) + " vertices written to " + a.out + "\n";
    return o;
}

// split-u

Outcome run_split_u(const std::string& graph, const std::string& set, const std::string& out) {
    GraphDoc d = load_graph(graph);
    SplitResult s = split_U(d.graph, parse_id_list(set));
    Json derivs = Json::object();
    for (std::size_t i = 0; i < s.order.size(); ++i)
        derivs[std::to_string(s.order[i])] = {s.derivatives[i].first, s.derivatives[i].second};
    Outcome o;
    o.report = {{"graph", graph_to_json(s.graph)},
                {"order", vec_json(s.order)},
                {"derivatives", derivs},
                {"dropped", vec_json(s.dropped)}};
    if (!out.empty()) write_file(out, graph_to_json(s.graph).dump(2) + "\n");
    std::ostringstream t;
    t << "split graph: " << s.graph.n() << " vertices, " << s.graph.edge_count() << " edges\n";
    for (std::size_t i = 0; i < s.order.size(); ++i)
        t << "  " << s.order[i] << " -> " << s.derivatives[i].first << ", " << s.derivatives[i].second << "\n";
    o.text = t.str();
    return o;
}

// check-acyclic

Outcome run_check_acyclic(const std::string& rep, const std::string& pairs) {
    AnyRep r = load_rep(rep);
    AcyclicityVerdict v;
    if (auto* p = std::get_if<PermutationRep>(&r)) {
        if (pairs.empty()) throw CLI::ValidationError("--pairs", "required for a permutation rep");
        v = is_acyclic_wrt_pairs(*p, pairs_from_json(Json::parse(read_file(pairs))));
    } else if (auto* t = std::get_if<TrapezoidRep>(&r)) {
        if (!pairs.empty()) throw CLI::ValidationError("--pairs", "not used for a trapezoid rep");
        v = is_acyclic_trapezoid_rep(*t);
    } else {
        throw InvalidArgument("check-acyclic takes a permutation or trapezoid rep");
    }
    Outcome o;
    o.code = v.acyclic ? 0 : 1;
    o.report = {{"acyclic", v.acyclic}};
    if (!v.acyclic) o.report["witness"] = vec_json(v.witness);
    o.text = v.acyclic ? "acyclic\n" : "cyclic: " + join(v.witness, " -> ") + "\n";
    return o;
}

// verify-rep

Outcome run_verify_rep(const std::string& rep, const std::string& graph) {
    AnyRep r = load_rep(rep);
    Graph g = load_graph(graph).graph;
    VerifyResult v = std::visit([&](const auto& x) { return verify_rep(x, g); }, r);
    Outcome o;
    o.code = v.ok ? 0 : 1;
    o.report = {{"ok", v.ok}};
    if (!v.ok) {
        auto [x, y] = *v.mismatch;
        o.report["mismatch"] = {x, y};
        o.report["edge_in"] = v.edge_in_rep ? "rep" : "graph";
        o.text = "mismatch: " + std::to_string(x) + " " + std::to_string(y) + " (edge only in " +
                 (v.edge_in_rep ? "rep" : "graph") + ")\n";
    } else {
        o.text = "ok\n";
    }
    return o;
}

// nae-sat

Outcome run_nae_sat(const std::string& cnf, int guard) {
    MonotoneCnf f = load_cnf(cnf);
    auto a = nae_sat_bruteforce(f, guard);
    Outcome o;
    o.code = a ? 0 : 1;
    o.report = {{"sat", a.has_value()}};
    if (a) o.report["assignment"] = assignment_json(*a);
    o.text = a ? "SAT " + assignment_text(*a) + "\n" : "UNSAT\n";
    return o;
}

// check-equivalence

Outcome run_check_equivalence(const std::string& cnf, int max_n, int max_k) {
    MonotoneCnf f = load_cnf(cnf);
    EquivalenceReport e = check_equivalence(f, max_n, max_k);
    Outcome o;
    o.code = e.consistent() ? 0 : 1;
    Json j;
    j["sat"] = e.sat;
    j["assignment"] = e.assignment ? assignment_json(*e.assignment) : Json(nullptr);
    j["flip"] = e.flip;
    j["flip_set"] = e.flip_set ? vec_json(*e.flip_set) : Json(nullptr);
    j["certificate_acyclic"] = e.certificate_acyclic;
    j["parallelogram_ok"] = e.parallelogram_ok;
    j["parallelogram_route"] = e.parallelogram_route;
    j["converse"] = "flip-restricted";
    j["consistent"] = e.consistent();
    o.report = j;
    std::ostringstream t;
    t << "sat=" << e.sat << " flip=" << e.flip << " certificate=" << e.certificate_acyclic
      << " parallelogram=" << e.parallelogram_ok << " consistent=" << e.consistent() << "\n";
    o.text = t.str();
    return o;
}

// structure

Outcome run_structure(const std::string& graph, int u) {
    Graph g = load_graph(graph).graph;
    if (u < 0 || u >= g.n()) throw CLI::ValidationError("--vertex", "out of range");
    ComponentFamily f = component_family(g, u);
    Json comps = Json::array(), bounds = Json::array(), closures = Json::array();
    for (int i = 0; i < f.size(); ++i) {
        comps.push_back(vec_json(f.components[i]));
        bounds.push_back(vec_json(f.boundaries[i]));
        closures.push_back(vec_json(domination_closure(f, i)));
    }
    Outcome o;
    Json j;
    j["vertex"] = u;
    j["components"] = comps;
    j["boundaries"] = bounds;
    j["closures"] = closures;
    j["masters"] = f.size() ? vec_json(master_components(f)) : Json::array();
    Deltas d = select_deltas(f);
    j["delta"] = d.delta ? Json(*d.delta) : Json(nullptr);
    j["delta_star"] = d.delta_star ? Json(*d.delta_star) : Json(nullptr);
    if (d.delta && d.delta_star) {
        NPartition p = n_partition(g, u, f, *d.delta, *d.delta_star);
        j["partition"] = {{"n0", vec_json(p.n0)}, {"n1", vec_json(p.n1)}, {"n2", vec_json(p.n2)},
                          {"n12", vec_json(p.n12)}};
    } else {
        j["partition"] = nullptr;
    }
    o.report = j;
    o.text = j.dump(2) + "\n";
    return o;
}

// recognize

Outcome run_recognize(const std::string& graph, const std::string& cls, int guard) {
    Graph g = load_graph(graph).graph;
    bool member = false;
    Outcome o;
    if (cls == "comparability") {
        auto orient = is_comparability(g, guard);
        member = orient.has_value();
        o.report = {{"class", cls}, {"member", member}};
        if (orient) {
            Json arcs = Json::array();
            for (auto [x, y] : orient->arcs) arcs.push_back({x, y});
            o.report["orientation"] = arcs;
        }
    } else {
        member = is_permutation_graph(g, guard);
        o.report = {{"class", cls}, {"member", member}};
    }
    o.code = member ? 0 : 1;
    o.text = std::string(member ? "yes" : "no") + "\n";
    return o;
}

// convert

Outcome run_convert(const std::string& rep, const std::string& out) {
    AnyRep r = load_rep(rep);
    Json j;
    if (auto* t = std::get_if<ToleranceRep>(&r)) {
        j = rep_to_json(tolerance_to_parallelogram(*t).traps());
    } else if (auto* z = std::get_if<TrapezoidRep>(&r)) {
        j = rep_to_json(parallelogram_to_tolerance(ParallelogramRep(*z)));
    } else {
        throw InvalidArgument("convert takes a tolerance rep or a parallelogram rep");
    }
    Outcome o;
    if (!out.empty()) write_file(out, j.dump(2) + "\n");
    o.report = j;
    o.text = j.dump(2) + "\n";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tolrec: trapezoid, parallelogram and tolerance representations"};
    app.require_subcommand(1);
    app.fallthrough();  // --json and --seed may follow the subcommand
    Common common;
    app.add_flag("--json", common.json, "Print a single JSON report");
    app.add_option("--seed", common.seed, "Seed for randomized choices")->capture_default_str();

    std::function<Outcome()> action;

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "Build P_phi, G_phi or H_phi from a monotone 3-CNF");
    reduce->add_option("--cnf", ra.cnf)->required()->check(CLI::ExistingFile);
    reduce->add_option("--emit", ra.emit)->check(CLI::IsMember({"pphi", "gphi", "hphi"}))->capture_default_str();
    reduce->add_option("--out", ra.out)->required();
    reduce->add_flag("--dot", ra.dot, "Also write DOT files");
    reduce->callback([&] { action = [&] { return run_reduce(ra, common); }; });

    std::string graph, rep, pairs, set, out, cnf, cls = "permutation";
    int vertex = 0, guard = 24, max_n = 10, max_k = 8;

    auto* split = app.add_subcommand("split-u", "Split every vertex of a set");
    split->add_option("--graph", graph)->required()->check(CLI::ExistingFile);
    split->add_option("--set", set, "Comma-separated ids, in processing order")->required();
    split->add_option("--out", out, "Also write the result graph here");
    split->callback([&] { action = [&] { return run_split_u(graph, set, out); }; });

    auto* acyc = app.add_subcommand("check-acyclic", "Acyclicity of a rep w.r.t. a pairing");
    acyc->add_option("--rep", rep)->required()->check(CLI::ExistingFile);
    acyc->add_option("--pairs", pairs, "Pairs file (permutation reps only)")->check(CLI::ExistingFile);
    acyc->callback([&] { action = [&] { return run_check_acyclic(rep, pairs); }; });

    auto* ver = app.add_subcommand("verify-rep", "Check that a rep realizes a graph");
    ver->add_option("--rep", rep)->required()->check(CLI::ExistingFile);
    ver->add_option("--graph", graph)->required()->check(CLI::ExistingFile);
    ver->callback([&] { action = [&] { return run_verify_rep(rep, graph); }; });

    auto* nae = app.add_subcommand("nae-sat", "Brute-force NAE satisfiability");
    nae->add_option("--cnf", cnf)->required()->check(CLI::ExistingFile);
    nae->add_option("--guard", guard, "Largest n to enumerate")->check(CLI::PositiveNumber)->capture_default_str();
    nae->callback([&] { action = [&] { return run_nae_sat(cnf, guard); }; });

    auto* eq = app.add_subcommand("check-equivalence", "Cross-check NAE-SAT against the reduction");
    eq->add_option("--cnf", cnf)->required()->check(CLI::ExistingFile);
    eq->add_option("--max-n", max_n)->check(CLI::PositiveNumber)->capture_default_str();
    eq->add_option("--max-k", max_k)->check(CLI::PositiveNumber)->capture_default_str();
    eq->callback([&] { action = [&] { return run_check_equivalence(cnf, max_n, max_k); }; });

    auto* st = app.add_subcommand("structure", "Components, closures, deltas and N-partition of a vertex");
    st->add_option("--graph", graph)->required()->check(CLI::ExistingFile);
    st->add_option("--vertex", vertex)->required();
    st->callback([&] { action = [&] { return run_structure(graph, vertex); }; });

    auto* rec = app.add_subcommand("recognize", "Exhaustive class membership");
    rec->add_option("--graph", graph)->required()->check(CLI::ExistingFile);
    rec->add_option("--class", cls)->check(CLI::IsMember({"permutation", "comparability"}))->capture_default_str();
    rec->add_option("--guard", guard)->check(CLI::PositiveNumber)->capture_default_str();
    rec->callback([&] { action = [&] { return run_recognize(graph, cls, guard); }; });

    auto* conv = app.add_subcommand("convert", "Tolerance <-> parallelogram");
    conv->add_option("--rep", rep)->required()->check(CLI::ExistingFile);
    conv->add_option("--out", out);
    conv->callback([&] { action = [&] { return run_convert(rep, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Outcome o = action();
        if (common.json)
            std::cout << o.report.dump(2) << "\n";
        else
            std::cout << o.text;
        return o.code;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionFailed& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
