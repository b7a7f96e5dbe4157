#include "tolrec/io.hpp"

#include <fstream>
#include <sstream>

#include "tolrec/error.hpp"

namespace tolrec {

namespace {

// Objects keyed by "0".."n-1"; returns the values in id order.
std::vector<Json> by_id(const Json& obj, const char* what) {
    if (!obj.is_object()) throw InvalidArgument(std::string(what) + " must be an object keyed by id");
    std::vector<Json> out(obj.size());
    std::vector<char> seen(obj.size(), 0);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::size_t used = 0;
        long id = -1;
        try {
            id = std::stol(it.key(), &used);
        } catch (const std::logic_error&) {
        }
        if (used != it.key().size() || id < 0 || id >= static_cast<long>(obj.size()) || seen[id])
            throw InvalidArgument(std::string(what) + ": bad or repeated id '" + it.key() + "'");
        seen[id] = 1;
        out[id] = it.value();
    }
    return out;
}

Rational field(const Json& j, const char* key) {
    if (!j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
    const Json& v = j.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<long long>())));
    throw InvalidArgument(std::string("field '") + key + "' must be a \"p/q\" string");
}

}  // namespace

Json graph_to_json(const Graph& g, const std::vector<std::string>& labels) {
    Json j;
    j["n"] = g.n();
    Json e = Json::array();
    for (auto [u, v] : g.edges()) e.push_back({u, v});
    j["edges"] = e;
    if (!labels.empty()) {
        Json l = Json::object();
        for (std::size_t i = 0; i < labels.size(); ++i) l[std::to_string(i)] = labels[i];
        j["labels"] = l;
    }
    return j;
}

GraphDoc graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InvalidArgument("graph JSON needs \"n\" and \"edges\"");
    GraphDoc d;
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidArgument("edge must be [u,v]");
        Vertex u = e[0].get<int>(), v = e[1].get<int>();
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    d.graph = Graph(n, edges);
    if (j.contains("labels"))
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
            d.labels[std::stoi(it.key())] = it.value().get<std::string>();
    return d;
}

Json rep_to_json(const PermutationRep& r) {
    Json lines = Json::object();
    for (int i = 0; i < r.size(); ++i)
        lines[std::to_string(i)] = {{"top", to_string(r.lines[i].top)}, {"bottom", to_string(r.lines[i].bottom)}};
    return Json{{"lines", lines}};
}

Json rep_to_json(const TrapezoidRep& r) {
    Json traps = Json::object();
    for (int i = 0; i < r.size(); ++i) {
        const auto& t = r.traps[i];
        traps[std::to_string(i)] = {
            {"a", to_string(t.a)}, {"b", to_string(t.b)}, {"c", to_string(t.c)}, {"d", to_string(t.d)}};
    }
    return Json{{"traps", traps}};
}

Json rep_to_json(const ToleranceRep& r) {
    Json items = Json::object();
    for (int i = 0; i < r.size(); ++i) {
        const auto& t = r.items[i];
        items[std::to_string(i)] = {{"l", to_string(t.l)}, {"r", to_string(t.r)}, {"t", to_string(t.t)}};
    }
    return Json{{"intervals", items}};
}

PermutationRep permutation_rep_from_json(const Json& j) {
    if (!j.contains("lines")) throw InvalidArgument("permutation rep JSON needs \"lines\"");
    PermutationRep r;
    for (const auto& v : by_id(j.at("lines"), "lines")) r.lines.push_back({field(v, "top"), field(v, "bottom")});
    validate(r);
    return r;
}

TrapezoidRep trapezoid_rep_from_json(const Json& j) {
    if (!j.contains("traps")) throw InvalidArgument("trapezoid rep JSON needs \"traps\"");
    TrapezoidRep r;
    for (const auto& v : by_id(j.at("traps"), "traps"))
        r.traps.push_back({field(v, "a"), field(v, "b"), field(v, "c"), field(v, "d")});
    validate(r);
    return r;
}

ToleranceRep tolerance_rep_from_json(const Json& j) {
    if (!j.contains("intervals")) throw InvalidArgument("tolerance rep JSON needs \"intervals\"");
    ToleranceRep r;
    for (const auto& v : by_id(j.at("intervals"), "intervals"))
        r.items.push_back({field(v, "l"), field(v, "r"), field(v, "t")});
    validate(r);
    return r;
}

Json pairs_to_json(const PairSet& p) {
    Json a = Json::array();
    for (auto [x, y] : p.pairs) a.push_back({x, y});
    return a;
}

PairSet pairs_from_json(const Json& j) {
    const Json& a = j.is_object() && j.contains("pairs") ? j.at("pairs") : j;
    if (!a.is_array()) throw InvalidArgument("pairs must be an array of [x,y]");
    PairSet p;
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 2) throw InvalidArgument("pair must be [x,y]");
        p.pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return p;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v;
        if (v < static_cast<int>(labels.size())) out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace tolrec
