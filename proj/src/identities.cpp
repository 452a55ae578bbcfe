#include "malcev/identities.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace malcev {

namespace {

std::string subscripted(const std::string& name) {
    const auto underscore = name.find('_');
    if (underscore == std::string::npos || underscore + 1 >= name.size()) return name;
    return name.substr(0, underscore) + "_{" + name.substr(underscore + 1) + "}";
}

} // namespace

std::string IdentitySet::side_text(const Side& side) const {
    if (side.symbol < 0) return variables.at(side.vars.at(0));
    std::string out = symbols.at(side.symbol) + "(";
    for (std::size_t i = 0; i < side.vars.size(); ++i) {
        if (i) out += ", ";
        out += variables.at(side.vars[i]);
    }
    return out + ")";
}

std::string IdentitySet::identity_text(const Identity& id) const {
    return side_text(id.lhs) + " = " + side_text(id.rhs);
}

std::string IdentitySet::to_text() const {
    std::string out;
    for (const auto& id : identities) out += identity_text(id) + "\n";
    return out;
}

std::string IdentitySet::to_latex() const {
    std::string out;
    auto side = [&](const Side& s) {
        if (s.symbol < 0) return subscripted(variables.at(s.vars.at(0)));
        std::string text = subscripted(symbols.at(s.symbol)) + "(";
        for (std::size_t i = 0; i < s.vars.size(); ++i) {
            if (i) text += ", ";
            text += subscripted(variables.at(s.vars[i]));
        }
        return text + ")";
    };
    for (const auto& id : identities)
        out += side(id.lhs) + " \\approx " + side(id.rhs) + " \\\\\n";
    return out;
}

IdentitySet generate_condition(const LabeledGraph& g, const LabeledGraph& h, ClassRepr repr) {
    if (g.label_count() != h.label_count())
        throw std::invalid_argument("graphs must use the same label count");
    if (g.distinguished_count() != h.distinguished_count())
        throw std::invalid_argument("graphs must have the same distinguished vertex count");

    const int m = g.vertex_count();
    IdentitySet out;
    out.arity = m;

    for (int w = 0; w < h.vertex_count(); ++w) out.symbols.push_back("t_" + h.vertex_id(w));

    std::map<std::string, int> var_index;
    auto variable = [&](const std::string& name) {
        auto [it, inserted] = var_index.emplace(name, static_cast<int>(out.variables.size()));
        if (inserted) out.variables.push_back(name);
        return it->second;
    };

    // Vertex variables, in the graph's vertex order.
    std::vector<int> vertex_vars;
    for (int v = 0; v < m; ++v) vertex_vars.push_back(variable(g.vertex_id(v)));

    // Projection variables per label: the class representative names them,
    // so the kernel of the variable map is exactly the label's partition.
    std::vector<std::vector<int>> projected(g.label_count() + 1);
    for (int i = 1; i <= g.label_count(); ++i) {
        const LabelPartition part = label_partition(g, i);
        std::vector<std::string> repr_of_block;
        for (const auto& block : part.blocks) {
            const int chosen = repr == ClassRepr::min_vertex
                                   ? *std::min_element(block.begin(), block.end())
                                   : *std::max_element(block.begin(), block.end());
            repr_of_block.push_back("x_" + g.vertex_id(chosen));
        }
        projected[i].reserve(m);
        for (int v = 0; v < m; ++v) {
            const std::string& name = repr_of_block[part.block_of[v]];
            if (var_index.count(name) &&
                std::find(vertex_vars.begin(), vertex_vars.end(), var_index[name]) !=
                    vertex_vars.end())
                throw std::invalid_argument("vertex id '" + name +
                                            "' collides with projection variable naming");
            projected[i].push_back(variable(name));
        }
    }

    for (int k = 0; k < g.distinguished_count(); ++k) {
        IdentitySet::Identity id;
        id.lhs = {-1, {vertex_vars[g.distinguished()[k]]}};
        id.rhs = {h.distinguished()[k], vertex_vars};
        out.identities.push_back(std::move(id));
    }

    std::vector<LabeledEdge> h_edges;
    for (const auto& e : h.edges())
        if (e.u != e.v) h_edges.push_back(e); // self-loops yield trivial equations
    std::sort(h_edges.begin(), h_edges.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
        return std::tie(a.label, a.u, a.v) < std::tie(b.label, b.u, b.v);
    });
    for (const auto& e : h_edges) {
        IdentitySet::Identity id;
        id.lhs = {e.u, projected[e.label]};
        id.rhs = {e.v, projected[e.label]};
        out.identities.push_back(std::move(id));
    }
    return out;
}

IdentitySet substitute_projections(const IdentitySet& ids) {
    // A distinguished equation v = t(w1,...,wm) with pairwise distinct
    // arguments pins t to the projection onto v's position.
    std::vector<int> projection_of(ids.symbols.size(), -1);
    for (const auto& id : ids.identities) {
        const IdentitySet::Side *bare = nullptr, *applied = nullptr;
        if (id.lhs.symbol < 0 && id.rhs.symbol >= 0) {
            bare = &id.lhs;
            applied = &id.rhs;
        } else if (id.rhs.symbol < 0 && id.lhs.symbol >= 0) {
            bare = &id.rhs;
            applied = &id.lhs;
        } else {
            continue;
        }
        std::vector<int> sorted = applied->vars;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        const auto it =
            std::find(applied->vars.begin(), applied->vars.end(), bare->vars.at(0));
        if (it == applied->vars.end()) continue;
        if (projection_of[applied->symbol] < 0)
            projection_of[applied->symbol] =
                static_cast<int>(it - applied->vars.begin());
    }

    IdentitySet out;
    out.arity = ids.arity;
    std::vector<int> symbol_map(ids.symbols.size(), -1);
    for (std::size_t s = 0; s < ids.symbols.size(); ++s) {
        if (projection_of[s] >= 0) continue;
        symbol_map[s] = static_cast<int>(out.symbols.size());
        out.symbols.push_back(ids.symbols[s]);
    }

    std::map<int, int> var_map;
    auto remap_var = [&](int v) {
        auto [it, inserted] = var_map.emplace(v, static_cast<int>(out.variables.size()));
        if (inserted) out.variables.push_back(ids.variables[v]);
        return it->second;
    };
    auto rewrite = [&](const IdentitySet::Side& side) {
        IdentitySet::Side s = side;
        if (s.symbol >= 0 && projection_of[s.symbol] >= 0)
            s = {-1, {s.vars.at(projection_of[s.symbol])}};
        return s;
    };

    for (const auto& id : ids.identities) {
        IdentitySet::Identity rewritten{rewrite(id.lhs), rewrite(id.rhs)};
        if (rewritten.lhs == rewritten.rhs) continue;
        for (int& v : rewritten.lhs.vars) v = remap_var(v);
        if (rewritten.lhs.symbol >= 0) rewritten.lhs.symbol = symbol_map[rewritten.lhs.symbol];
        for (int& v : rewritten.rhs.vars) v = remap_var(v);
        if (rewritten.rhs.symbol >= 0) rewritten.rhs.symbol = symbol_map[rewritten.rhs.symbol];
        out.identities.push_back(std::move(rewritten));
    }
    return out;
}

namespace {

// Operation symbols are shared across the whole set, so their bijection is
// global; variables are bound per identity, so each identity pair gets a
// fresh local variable bijection. Cross-identity variable sharing carries no
// meaning for universally quantified equations.
struct Matcher {
    const IdentitySet& a;
    const IdentitySet& b;
    std::vector<int> symbol_map, symbol_rev;
    std::vector<bool> matched_b;

    Matcher(const IdentitySet& a_, const IdentitySet& b_)
        : a(a_), b(b_), symbol_map(a_.symbols.size(), -1), symbol_rev(b_.symbols.size(), -1),
          matched_b(b_.identities.size(), false) {}

    struct Binding {
        std::vector<int> symbols_bound;
        std::map<int, int> var_map, var_rev;
    };

    bool bind_symbol(int sa, int sb, Binding& undo) {
        if (symbol_map[sa] >= 0) return symbol_map[sa] == sb;
        if (symbol_rev[sb] >= 0) return false;
        symbol_map[sa] = sb;
        symbol_rev[sb] = sa;
        undo.symbols_bound.push_back(sa);
        return true;
    }

    static bool bind_var(int va, int vb, Binding& undo) {
        const auto fwd = undo.var_map.find(va);
        if (fwd != undo.var_map.end()) return fwd->second == vb;
        if (undo.var_rev.count(vb)) return false;
        undo.var_map.emplace(va, vb);
        undo.var_rev.emplace(vb, va);
        return true;
    }

    void rollback(const Binding& undo) {
        for (int sa : undo.symbols_bound) {
            symbol_rev[symbol_map[sa]] = -1;
            symbol_map[sa] = -1;
        }
    }

    bool unify_side(const IdentitySet::Side& sa, const IdentitySet::Side& sb, Binding& undo) {
        if ((sa.symbol < 0) != (sb.symbol < 0)) return false;
        if (sa.vars.size() != sb.vars.size()) return false;
        if (sa.symbol >= 0 && !bind_symbol(sa.symbol, sb.symbol, undo)) return false;
        for (std::size_t i = 0; i < sa.vars.size(); ++i)
            if (!bind_var(sa.vars[i], sb.vars[i], undo)) return false;
        return true;
    }

    bool match(std::size_t i) {
        if (i == a.identities.size()) return true;
        const auto& ia = a.identities[i];
        for (std::size_t j = 0; j < b.identities.size(); ++j) {
            if (matched_b[j]) continue;
            const auto& ib = b.identities[j];
            for (int orientation = 0; orientation < 2; ++orientation) {
                const auto& lhs = orientation == 0 ? ib.lhs : ib.rhs;
                const auto& rhs = orientation == 0 ? ib.rhs : ib.lhs;
                Binding undo;
                if (unify_side(ia.lhs, lhs, undo) && unify_side(ia.rhs, rhs, undo)) {
                    matched_b[j] = true;
                    if (match(i + 1)) return true;
                    matched_b[j] = false;
                }
                rollback(undo);
            }
        }
        return false;
    }
};

} // namespace

bool equivalent_mod_renaming(const IdentitySet& a, const IdentitySet& b) {
    if (a.arity != b.arity) return false;
    if (a.symbols.size() != b.symbols.size()) return false;
    if (a.identities.size() != b.identities.size()) return false;
    return Matcher(a, b).match(0);
}

bool holds_in_algebra(const IdentitySet& ids, const Algebra& alg,
                      const SymbolAssignment& assignment) {
    const int s = alg.size();
    std::vector<const std::vector<int>*> tables(ids.symbols.size(), nullptr);
    for (std::size_t sym = 0; sym < ids.symbols.size(); ++sym) {
        auto it = assignment.find(ids.symbols[sym]);
        if (it == assignment.end()) continue;
        std::size_t expected = 1;
        for (int j = 0; j < ids.arity; ++j) expected *= static_cast<std::size_t>(s);
        if (it->second.size() != expected)
            throw std::invalid_argument("table for '" + ids.symbols[sym] + "' has wrong length");
        for (int v : it->second)
            if (v < 0 || v >= s)
                throw std::invalid_argument("table for '" + ids.symbols[sym] +
                                            "' has out-of-range values");
        tables[sym] = &it->second;
    }

    auto eval_side = [&](const IdentitySet::Side& side, const std::vector<int>& value_of) {
        if (side.symbol < 0) return value_of[side.vars.at(0)];
        const std::vector<int>* table = tables[side.symbol];
        if (!table)
            throw std::invalid_argument("missing table for symbol '" +
                                        ids.symbols[side.symbol] + "'");
        std::size_t index = 0;
        for (int v : side.vars)
            index = index * static_cast<std::size_t>(s) +
                    static_cast<std::size_t>(value_of[v]);
        return (*table)[index];
    };

    for (const auto& id : ids.identities) {
        std::vector<int> used;
        for (const auto* side : {&id.lhs, &id.rhs})
            for (int v : side->vars)
                if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);

        std::vector<int> value_of(ids.variables.size(), 0);
        std::vector<int> counter(used.size(), 0);
        while (true) {
            for (std::size_t j = 0; j < used.size(); ++j) value_of[used[j]] = counter[j];
            if (eval_side(id.lhs, value_of) != eval_side(id.rhs, value_of)) return false;
            int j = static_cast<int>(used.size()) - 1;
            while (j >= 0 && ++counter[j] == s) counter[j--] = 0;
            if (j < 0) break;
        }
    }
    return true;
}

} // namespace malcev
