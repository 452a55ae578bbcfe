#include "malcev/json_io.hpp"

#include <stdexcept>

namespace malcev {

using nlohmann::json;

namespace {

std::string id_from_json(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw std::invalid_argument("vertex id must be a string or an integer");
}

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed input: " + what);
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
    return j.at(name);
}

} // namespace

json graph_to_json(const LabeledGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({g.vertex_id(e.u), g.vertex_id(e.v), e.label});
    json distinguished = json::array();
    for (int d : g.distinguished()) distinguished.push_back(g.vertex_id(d));
    return json{{"vertices", g.vertex_ids()},
                {"n", g.label_count()},
                {"edges", edges},
                {"distinguished", distinguished}};
}

LabeledGraph graph_from_json(const json& j) {
    std::vector<std::string> vertices;
    for (const auto& v : field(j, "vertices")) vertices.push_back(id_from_json(v));
    const int n = field(j, "n").get<int>();
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 3) malformed("edge must be [u, v, label]");
        edges.emplace_back(id_from_json(e[0]), id_from_json(e[1]), e[2].get<int>());
    }
    std::vector<std::string> distinguished;
    for (const auto& d : field(j, "distinguished")) distinguished.push_back(id_from_json(d));
    return LabeledGraph(std::move(vertices), n, edges, distinguished);
}

json relation_to_json(const Relation& r) {
    json pairs = json::array();
    for (const auto& [a, b] : r.pairs()) pairs.push_back({a, b});
    return json{{"size", r.size()}, {"pairs", pairs}};
}

Relation relation_from_json(const json& j) {
    const int size = field(j, "size").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : field(j, "pairs")) {
        if (!p.is_array() || p.size() != 2) malformed("relation pair must be [a, b]");
        pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    const bool add_diagonal = j.value("add_diagonal", false);
    return Relation::from_pairs(size, pairs, add_diagonal);
}

std::vector<Relation> relations_from_json(const json& j) {
    const json& list = j.is_array() ? j : field(j, "relations");
    std::vector<Relation> out;
    for (const auto& r : list) out.push_back(relation_from_json(r));
    return out;
}

json algebra_to_json(const Algebra& alg) {
    json ops = json::array();
    for (const auto& op : alg.operations())
        ops.push_back({{"name", op.name}, {"arity", op.arity}, {"table", op.table}});
    return json{{"size", alg.size()}, {"ops", ops}};
}

Algebra algebra_from_json(const json& j) {
    const int size = field(j, "size").get<int>();
    std::vector<OperationTable> ops;
    for (const auto& op : field(j, "ops")) {
        OperationTable table;
        table.name = field(op, "name").get<std::string>();
        table.arity = field(op, "arity").get<int>();
        table.table = field(op, "table").get<std::vector<int>>();
        ops.push_back(std::move(table));
    }
    return Algebra(size, std::move(ops));
}

namespace {

json term_node_to_json(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::variable: return json{{"op", "var"}, {"index", t.var_index()}};
    case Term::Kind::compose:
        return json{{"op", "comp"},
                    {"left", term_node_to_json(t.left())},
                    {"right", term_node_to_json(t.right())}};
    case Term::Kind::intersect:
        return json{{"op", "cap"},
                    {"left", term_node_to_json(t.left())},
                    {"right", term_node_to_json(t.right())}};
    }
    malformed("unreachable term kind");
}

Term term_node_from_json(const json& j, int var_count) {
    const std::string op = field(j, "op").get<std::string>();
    if (op == "var") return Term::variable(field(j, "index").get<int>(), var_count);
    if (op == "comp")
        return Term::compose(term_node_from_json(field(j, "left"), var_count),
                             term_node_from_json(field(j, "right"), var_count));
    if (op == "cap")
        return Term::intersect(term_node_from_json(field(j, "left"), var_count),
                               term_node_from_json(field(j, "right"), var_count));
    malformed("unknown term op '" + op + "'");
}

} // namespace

json term_to_json(const Term& t) {
    return json{{"vars", t.var_count()}, {"root", term_node_to_json(t)}};
}

Term term_from_json(const json& j) {
    const int var_count = field(j, "vars").get<int>();
    return term_node_from_json(field(j, "root"), var_count);
}

namespace {

json side_to_json(const IdentitySet& ids, const IdentitySet::Side& side) {
    if (side.symbol < 0) return json{{"var", ids.variables.at(side.vars.at(0))}};
    json args = json::array();
    for (int v : side.vars) args.push_back(ids.variables.at(v));
    return json{{"op", ids.symbols.at(side.symbol)}, {"args", args}};
}

IdentitySet::Side side_from_json(IdentitySet& ids, const json& j) {
    auto var_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < ids.variables.size(); ++i)
            if (ids.variables[i] == name) return static_cast<int>(i);
        ids.variables.push_back(name);
        return static_cast<int>(ids.variables.size() - 1);
    };
    if (j.contains("var")) return {-1, {var_of(j.at("var").get<std::string>())}};
    const std::string op = field(j, "op").get<std::string>();
    int symbol = -1;
    for (std::size_t i = 0; i < ids.symbols.size(); ++i)
        if (ids.symbols[i] == op) symbol = static_cast<int>(i);
    if (symbol < 0) malformed("identity references unknown symbol '" + op + "'");
    IdentitySet::Side side{symbol, {}};
    for (const auto& a : field(j, "args")) side.vars.push_back(var_of(a.get<std::string>()));
    return side;
}

} // namespace

json identity_set_to_json(const IdentitySet& ids) {
    json identities = json::array();
    for (const auto& id : ids.identities)
        identities.push_back(
            {{"lhs", side_to_json(ids, id.lhs)}, {"rhs", side_to_json(ids, id.rhs)}});
    return json{{"arity", ids.arity}, {"symbols", ids.symbols}, {"identities", identities}};
}

IdentitySet identity_set_from_json(const json& j) {
    IdentitySet ids;
    ids.arity = field(j, "arity").get<int>();
    ids.symbols = field(j, "symbols").get<std::vector<std::string>>();
    for (const auto& id : field(j, "identities"))
        ids.identities.push_back(
            {side_from_json(ids, field(id, "lhs")), side_from_json(ids, field(id, "rhs"))});
    return ids;
}

json connection_to_json(const LabeledGraph& g, const Connection& c) {
    json out = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) out[g.vertex_id(v)] = c.assignment.at(v);
    return out;
}

json report_to_json(const VerificationReport& report) {
    json clauses = json::array();
    for (const auto& c : report.clauses)
        clauses.push_back({{"id", c.id}, {"verdict", c.verdict}, {"detail", c.detail}});
    json assertions = json::array();
    for (const auto& a : report.assertions)
        assertions.push_back({{"id", a.id}, {"verdict", a.verdict}, {"detail", a.detail}});
    return json{{"check", report.check},
                {"inputs", report.inputs},
                {"clauses", clauses},
                {"assertions", assertions},
                {"ok", report.ok},
                {"runtime_seconds", report.runtime_seconds}};
}

} // namespace malcev
