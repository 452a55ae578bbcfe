#include "malcev/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "malcev/builtins.hpp"
#include "malcev/errors.hpp"
#include "malcev/free_algebra.hpp"
#include "malcev/graph_eval.hpp"
#include "malcev/identities.hpp"
#include "malcev/json_io.hpp"
#include "malcev/term.hpp"
#include "malcev/verify.hpp"

namespace malcev {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    json j;
    in >> j;
    return j;
}

LabeledGraph load_graph(const std::string& ref, std::ostream& err) {
    std::optional<LabeledGraph> g = named_graph(ref);
    if (!g) g = graph_from_json(load_json_file(ref));
    if (g->distinguished_count() == 1)
        err << "warning: graph '" << ref
            << "' has a single distinguished vertex; the relation it defines is unary\n";
    return *g;
}

NamedAlgebra load_algebra(const std::string& ref) {
    if (auto alg = named_algebra(ref)) return {ref, *alg};
    return {ref, algebra_from_json(load_json_file(ref))};
}

std::vector<Relation> load_relations(const std::string& path) {
    return relations_from_json(load_json_file(path));
}

std::vector<NamedAlgebra> resolve_samples(const std::vector<std::string>& refs,
                                          const NamedAlgebra& base) {
    std::vector<NamedAlgebra> out;
    if (refs.empty()) {
        out.push_back(base);
        out.emplace_back(base.first + "^2", base.second.direct_square());
        return out;
    }
    for (const auto& r : refs) out.push_back(load_algebra(r));
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct FormatOption {
    std::string value = "text";
};

void add_format(CLI::App* cmd, FormatOption& fmt, const std::vector<std::string>& allowed) {
    cmd->add_option("--format", fmt.value, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
}

std::string graph_text(const LabeledGraph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& id : g.vertex_ids()) out << " " << id;
    out << "\nlabels: " << g.label_count() << "\nedges:";
    for (const auto& e : g.edges())
        out << " " << g.vertex_id(e.u) << "-" << g.vertex_id(e.v) << ":" << e.label;
    out << "\ndistinguished:";
    for (int d : g.distinguished()) out << " " << g.vertex_id(d);
    out << "\n";
    return out.str();
}

std::string tuple_text(const std::vector<int>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(tuple[i]);
    }
    return out + ")";
}

int emit_report(const VerificationReport& report, const FormatOption& fmt, std::ostream& out) {
    if (fmt.value == "json")
        out << dump(report_to_json(report));
    else
        out << report.to_text();
    return report.ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"strong Mal'cev conditions from labeled graphs, evaluated over finite algebras"};
    app.set_help_flag("--help", "print help"); // frees -h for the --h graph option
    app.require_subcommand(1);
    app.fallthrough();

    long long seed = 0;
    app.add_option("--seed", seed, "accepted for interface stability; everything is deterministic");

    // parse-term
    auto* cmd_parse = app.add_subcommand("parse-term", "parse a term and print it back");
    std::string pt_term;
    int pt_n = 1;
    FormatOption pt_fmt;
    cmd_parse->add_option("--term", pt_term, "term text, variables a1..an")->required();
    cmd_parse->add_option("--n", pt_n, "number of relation variables")->required();
    add_format(cmd_parse, pt_fmt, {"text", "json"});

    // term-graph
    auto* cmd_tgraph = app.add_subcommand("term-graph", "graph associated with a term");
    std::string tg_term;
    int tg_n = 1;
    FormatOption tg_fmt{"json"};
    cmd_tgraph->add_option("--term", tg_term, "term text")->required();
    cmd_tgraph->add_option("--n", tg_n, "number of relation variables")->required();
    add_format(cmd_tgraph, tg_fmt, {"text", "json"});

    // partition
    auto* cmd_part = app.add_subcommand("partition", "vertex classes of one label");
    std::string part_g;
    int part_label = 1;
    FormatOption part_fmt;
    cmd_part->add_option("--g", part_g, "graph (name or JSON file)")->required();
    cmd_part->add_option("--label", part_label, "label index, 1-based")->required();
    add_format(cmd_part, part_fmt, {"text", "json"});

    // regular
    auto* cmd_regular = app.add_subcommand("regular", "is every label class of size at most 2");
    std::string reg_g;
    cmd_regular->add_option("--g", reg_g, "graph (name or JSON file)")->required();

    // k-constants
    auto* cmd_k = app.add_subcommand("k-constants", "doubled minimal class eccentricities");
    std::string k_g;
    FormatOption k_fmt;
    cmd_k->add_option("--g", k_g, "graph (name or JSON file)")->required();
    add_format(cmd_k, k_fmt, {"text", "json"});

    // gen-malcev
    auto* cmd_gen = app.add_subcommand("gen-malcev", "identity set of a graph pair");
    std::string gen_g, gen_h;
    bool gen_subst = false;
    FormatOption gen_fmt;
    cmd_gen->add_option("--g", gen_g, "left graph")->required();
    cmd_gen->add_option("--h", gen_h, "right graph")->required();
    cmd_gen->add_flag("--substitute-projections", gen_subst,
                      "display form with forced projections substituted");
    add_format(cmd_gen, gen_fmt, {"text", "json", "latex"});

    // eval-relation
    auto* cmd_eval = app.add_subcommand("eval-relation", "tuples connectable through a graph");
    std::string ev_g, ev_term, ev_rels;
    int ev_n = 0;
    std::vector<int> ev_tuple;
    FormatOption ev_fmt;
    cmd_eval->add_option("--g", ev_g, "graph (name or JSON file)");
    cmd_eval->add_option("--term", ev_term, "term text instead of a graph");
    cmd_eval->add_option("--n", ev_n, "variable count for --term");
    cmd_eval->add_option("--rels", ev_rels, "JSON file with one relation per label")->required();
    cmd_eval->add_option("--tuple", ev_tuple, "check one tuple and print its witness")
        ->delimiter(',');
    add_format(cmd_eval, ev_fmt, {"text", "json"});

    // check-inclusion
    auto* cmd_incl = app.add_subcommand("check-inclusion", "relation inclusion between graphs");
    std::string in_g, in_h, in_rels;
    FormatOption in_fmt;
    cmd_incl->add_option("--g", in_g, "left graph")->required();
    cmd_incl->add_option("--h", in_h, "right graph")->required();
    cmd_incl->add_option("--rels", in_rels, "JSON file with one relation per label")->required();
    add_format(cmd_incl, in_fmt, {"text", "json"});

    // congruences
    auto* cmd_cong = app.add_subcommand("congruences", "all congruences of a finite algebra");
    std::string cong_alg;
    FormatOption cong_fmt;
    cmd_cong->add_option("--algebra", cong_alg, "algebra (name or JSON file)")->required();
    add_format(cmd_cong, cong_fmt, {"text", "json"});

    // tolerances
    auto* cmd_tol = app.add_subcommand("tolerances", "all tolerances with their classes");
    std::string tol_alg;
    FormatOption tol_fmt;
    cmd_tol->add_option("--algebra", tol_alg, "algebra (name or JSON file)")->required();
    add_format(cmd_tol, tol_fmt, {"text", "json"});

    // free-algebra
    auto* cmd_free = app.add_subcommand("free-algebra", "free algebra in the generated variety");
    std::string free_alg_ref;
    int free_gens = 1;
    bool free_full = false;
    FreeAlgebraCaps free_caps;
    FormatOption free_fmt;
    cmd_free->add_option("--algebra", free_alg_ref, "base algebra")->required();
    cmd_free->add_option("--generators", free_gens, "generator count")->required();
    cmd_free->add_flag("--full", free_full, "also print the element tables");
    cmd_free->add_option("--cap-power", free_caps.max_power_size, "cap on size^generators");
    cmd_free->add_option("--cap-elements", free_caps.max_elements, "cap on closure size");
    add_format(cmd_free, free_fmt, {"text", "json"});

    // verify-wp
    auto* cmd_wp = app.add_subcommand("verify-wp", "free-algebra congruence inclusion check");
    std::string wp_alg, wp_g, wp_h;
    FreeAlgebraCaps wp_caps;
    FormatOption wp_fmt;
    cmd_wp->add_option("--algebra", wp_alg, "generating algebra")->required();
    cmd_wp->add_option("--g", wp_g, "left graph")->required();
    cmd_wp->add_option("--h", wp_h, "right graph")->required();
    cmd_wp->add_option("--cap-power", wp_caps.max_power_size, "cap on size^generators");
    cmd_wp->add_option("--cap-elements", wp_caps.max_elements, "cap on closure size");
    add_format(cmd_wp, wp_fmt, {"text", "json"});

    // verify-contolnuo / verify-contolnuok / verify-cornuo
    struct CheckOptions {
        std::string alg, g, h;
        std::vector<std::string> samples;
        FreeAlgebraCaps caps;
        FormatOption fmt;
    };
    auto add_check_options = [](CLI::App* cmd, CheckOptions& opt) {
        cmd->add_option("--algebra", opt.alg, "variety-generating algebra")->required();
        cmd->add_option("--g", opt.g, "left graph")->required();
        cmd->add_option("--h", opt.h, "right graph")->required();
        cmd->add_option("--samples", opt.samples,
                        "sample algebras (default: the algebra and its square)")
            ->delimiter(',');
        cmd->add_option("--cap-power", opt.caps.max_power_size, "cap on size^generators");
        cmd->add_option("--cap-elements", opt.caps.max_elements, "cap on closure size");
    };
    CheckOptions tno, tnok, cor;
    auto* cmd_tno =
        app.add_subcommand("verify-contolnuo", "tolerance transfer check for regular graphs");
    add_check_options(cmd_tno, tno);
    add_format(cmd_tno, tno.fmt, {"text", "json"});
    auto* cmd_tnok =
        app.add_subcommand("verify-contolnuok", "tolerance power transfer check, any finite graph");
    add_check_options(cmd_tnok, tnok);
    add_format(cmd_tnok, tnok.fmt, {"text", "json"});
    auto* cmd_cor =
        app.add_subcommand("verify-cornuo", "alternating composition check for regular graphs");
    std::vector<int> cor_m{1, 3, 5};
    add_check_options(cmd_cor, cor);
    cmd_cor->add_option("--m", cor_m, "odd alternation lengths")->delimiter(',');
    add_format(cmd_cor, cor.fmt, {"text", "json"});

    // realizable
    auto* cmd_real = app.add_subcommand("realizable", "is the graph associated with some term");
    std::string real_g;
    int real_max = 8;
    FormatOption real_fmt;
    cmd_real->add_option("--g", real_g, "graph (name or JSON file)")->required();
    cmd_real->add_option("--max-size", real_max, "term size bound (variable occurrences)")
        ->capture_default_str();
    add_format(cmd_real, real_fmt, {"text", "json"});

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv{"malcev"};
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_parse) {
            const Term t = parse_term(pt_term, pt_n);
            if (pt_fmt.value == "json")
                out << dump(term_to_json(t));
            else
                out << print_term(t) << "\n";
            return 0;
        }
        if (*cmd_tgraph) {
            const LabeledGraph g = term_to_graph(parse_term(tg_term, tg_n));
            out << (tg_fmt.value == "text" ? graph_text(g) : dump(graph_to_json(g)));
            return 0;
        }
        if (*cmd_part) {
            const LabeledGraph g = load_graph(part_g, err);
            const LabelPartition part = label_partition(g, part_label);
            if (part_fmt.value == "json") {
                json blocks = json::array();
                for (const auto& block : part.blocks) {
                    json b = json::array();
                    for (int v : block) b.push_back(g.vertex_id(v));
                    blocks.push_back(b);
                }
                out << dump(blocks);
            } else {
                for (const auto& block : part.blocks) {
                    out << "{";
                    for (std::size_t i = 0; i < block.size(); ++i)
                        out << (i ? "," : "") << g.vertex_id(block[i]);
                    out << "} ";
                }
                out << "\n";
            }
            return 0;
        }
        if (*cmd_regular) {
            const bool verdict = is_regular(load_graph(reg_g, err));
            out << (verdict ? "true" : "false") << "\n";
            return verdict ? 0 : 1;
        }
        if (*cmd_k) {
            const std::vector<int> ks = k_constants(load_graph(k_g, err));
            if (k_fmt.value == "json") {
                out << dump(json(ks));
            } else {
                for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? " " : "") << ks[i];
                out << "\n";
            }
            return 0;
        }
        if (*cmd_gen) {
            IdentitySet ids =
                generate_condition(load_graph(gen_g, err), load_graph(gen_h, err));
            if (gen_subst) ids = substitute_projections(ids);
            if (gen_fmt.value == "json")
                out << dump(identity_set_to_json(ids));
            else if (gen_fmt.value == "latex")
                out << ids.to_latex();
            else
                out << ids.to_text();
            return 0;
        }
        if (*cmd_eval) {
            if (ev_g.empty() == ev_term.empty())
                throw std::invalid_argument("give exactly one of --g and --term");
            const LabeledGraph g = !ev_g.empty()
                                       ? load_graph(ev_g, err)
                                       : term_to_graph(parse_term(ev_term, ev_n));
            const std::vector<Relation> rels = load_relations(ev_rels);
            if (!ev_tuple.empty()) {
                const auto witness = connect(g, rels, ev_tuple);
                if (ev_fmt.value == "json") {
                    json j{{"connected", witness.has_value()}};
                    if (witness) j["witness"] = connection_to_json(g, *witness);
                    out << dump(j);
                } else if (witness) {
                    out << "connected\nwitness: " << connection_to_json(g, *witness).dump()
                        << "\n";
                } else {
                    out << "not connected\n";
                }
                return witness ? 0 : 1;
            }
            const auto tuples = graph_relation(g, rels);
            if (ev_fmt.value == "json") {
                out << dump(json{{"arity", g.distinguished_count()}, {"tuples", tuples}});
            } else {
                for (const auto& t : tuples) out << tuple_text(t) << "\n";
            }
            return 0;
        }
        if (*cmd_incl) {
            const LabeledGraph g = load_graph(in_g, err);
            const LabeledGraph h = load_graph(in_h, err);
            const InclusionResult res = check_inclusion(g, h, load_relations(in_rels));
            if (in_fmt.value == "json") {
                json j{{"holds", res.holds}};
                if (res.counterexample) j["counterexample"] = *res.counterexample;
                out << dump(j);
            } else {
                out << (res.holds ? "true" : "false") << "\n";
                if (res.counterexample)
                    out << "counterexample: " << tuple_text(*res.counterexample) << "\n";
            }
            return res.holds ? 0 : 1;
        }
        if (*cmd_cong) {
            const auto [name, alg] = load_algebra(cong_alg);
            const auto relations = congruences(alg);
            if (cong_fmt.value == "json") {
                json list = json::array();
                for (const auto& r : relations) list.push_back(relation_to_json(r));
                out << dump(json{{"count", relations.size()}, {"congruences", list}});
            } else {
                out << "count: " << relations.size() << "\n";
                for (const auto& r : relations) out << to_string(r) << "\n";
            }
            return 0;
        }
        if (*cmd_tol) {
            const auto [name, alg] = load_algebra(tol_alg);
            const auto records = tolerances(alg);
            if (tol_fmt.value == "json") {
                json list = json::array();
                for (const auto& rec : records)
                    list.push_back({{"relation", relation_to_json(rec.relation)},
                                    {"class", to_string(rec.cls)}});
                out << dump(json{{"count", records.size()}, {"tolerances", list}});
            } else {
                out << "count: " << records.size() << "\n";
                for (const auto& rec : records)
                    out << to_string(rec.relation) << "  " << to_string(rec.cls) << "\n";
            }
            return 0;
        }
        if (*cmd_free) {
            const auto [name, alg] = load_algebra(free_alg_ref);
            const FreeAlgebra fa = FreeAlgebra::generate(alg, free_gens, free_caps);
            if (free_fmt.value == "json") {
                json j{{"elements", fa.element_count()},
                       {"generators", json::array()},
                       {"coordinates", fa.coordinate_count()}};
                for (int i = 0; i < fa.generator_count(); ++i)
                    j["generators"].push_back(fa.generator(i));
                if (free_full) {
                    json tables = json::array();
                    for (int e = 0; e < fa.element_count(); ++e)
                        tables.push_back(std::vector<int>(fa.element(e).begin(),
                                                          fa.element(e).end()));
                    j["tables"] = tables;
                }
                out << dump(j);
            } else {
                out << "elements: " << fa.element_count() << "\n";
                out << "generators:";
                for (int i = 0; i < fa.generator_count(); ++i) out << " " << fa.generator(i);
                out << "\n";
                if (free_full)
                    for (int e = 0; e < fa.element_count(); ++e) {
                        out << e << ":";
                        for (auto v : fa.element(e)) out << " " << static_cast<int>(v);
                        out << "\n";
                    }
            }
            return 0;
        }
        if (*cmd_wp) {
            const auto [name, alg] = load_algebra(wp_alg);
            const LabeledGraph g = load_graph(wp_g, err);
            const LabeledGraph h = load_graph(wp_h, err);
            const WpOutcome outcome =
                variety_satisfies_congruence_inclusion(alg, g, h, wp_caps);
            json witness;
            if (outcome.holds) {
                const SymbolAssignment assignment = assignment_from_outcome(outcome, h);
                const IdentitySet ids = generate_condition(g, h);
                if (!holds_in_algebra(ids, alg, assignment))
                    throw std::logic_error("extracted witness does not satisfy the identity set");
                witness = json::object();
                for (const auto& [symbol, table] : assignment) witness[symbol] = table;
            }
            if (wp_fmt.value == "json") {
                json j{{"holds", outcome.holds},
                       {"free_algebra_elements", outcome.free_alg.element_count()}};
                if (outcome.holds) j["witness_tables"] = witness;
                out << dump(j);
            } else {
                out << "holds: " << (outcome.holds ? "true" : "false") << "\n";
                out << "free algebra elements: " << outcome.free_alg.element_count() << "\n";
                if (outcome.holds) out << "witness tables: " << witness.dump() << "\n";
            }
            return outcome.holds ? 0 : 1;
        }
        auto run_check = [&](const CheckOptions& opt, auto&& check) {
            const NamedAlgebra base = load_algebra(opt.alg);
            const auto samples = resolve_samples(opt.samples, base);
            const LabeledGraph g = load_graph(opt.g, err);
            const LabeledGraph h = load_graph(opt.h, err);
            return emit_report(check(base.second, samples, g, h, opt.caps), opt.fmt, out);
        };
        if (*cmd_tno) {
            return run_check(tno, [](const Algebra& a, const auto& s, const LabeledGraph& g,
                                       const LabeledGraph& h, const FreeAlgebraCaps& c) {
                return check_contolnuo(a, s, g, h, c);
            });
        }
        if (*cmd_tnok) {
            return run_check(tnok, [](const Algebra& a, const auto& s, const LabeledGraph& g,
                                        const LabeledGraph& h, const FreeAlgebraCaps& c) {
                return check_contolnuok(a, s, g, h, c);
            });
        }
        if (*cmd_cor) {
            return run_check(cor, [&](const Algebra& a, const auto& s, const LabeledGraph& g,
                                        const LabeledGraph& h, const FreeAlgebraCaps& c) {
                return check_cornuo(a, s, g, h, cor_m, c);
            });
        }
        if (*cmd_real) {
            const Realizability res = term_realizability(load_graph(real_g, err), real_max);
            if (real_fmt.value == "json") {
                json j{{"realizable", res.realizable}};
                if (res.witness) j["witness"] = print_term(*res.witness);
                out << dump(j);
            } else {
                out << (res.realizable ? "true" : "false") << "\n";
                if (res.witness) out << "witness: " << print_term(*res.witness) << "\n";
            }
            return res.realizable ? 0 : 1;
        }
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace malcev
