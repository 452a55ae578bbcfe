#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "malcev/cli.hpp"
#include "malcev/json_io.hpp"

using namespace malcev;
using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Temporary JSON file helper for loader-facing commands.
struct TempJson {
    std::string path;
    explicit TempJson(const json& j) {
        static int counter = 0;
        path = "cli_test_tmp_" + std::to_string(counter++) + ".json";
        std::ofstream f(path);
        f << j.dump();
    }
    ~TempJson() { std::remove(path.c_str()); }
};

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("parse-term round trip and precedence") {
        const CliRun r = run({"parse-term", "--term", "a1 o (a2 & a3)", "--n", "3"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "a1 o (a2 & a3)\n");

        const CliRun j = run({"parse-term", "--term", "a1 o a2 & a3", "--n", "3", "--format",
                              "json"});
        CHECK(j.exit_code == 0);
        CHECK(json::parse(j.out).at("root").at("op") == "cap");
    }

    TEST_CASE("parse errors exit with 2") {
        const CliRun r = run({"parse-term", "--term", "a9", "--n", "2"});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("out of range") != std::string::npos);
        CHECK(run({"nonsense-command"}).exit_code == 2);
        CHECK(run({}).exit_code == 2);
        CHECK(run({"parse-term"}).exit_code == 2);
    }

    TEST_CASE("term-graph emits JSON that reloads") {
        const CliRun r = run({"term-graph", "--term", "a1 o a2", "--n", "2"});
        CHECK(r.exit_code == 0);
        const LabeledGraph g = graph_from_json(json::parse(r.out));
        CHECK(g.vertex_count() == 3);
        CHECK(g.edges().size() == 2);
    }

    TEST_CASE("partition and k-constants on built-ins") {
        const CliRun p = run({"partition", "--g", "path4", "--label", "1"});
        CHECK(p.exit_code == 0);
        CHECK(p.out.find("{v1,v2,v3,v4}") != std::string::npos);

        const CliRun k = run({"k-constants", "--g", "path4"});
        CHECK(k.exit_code == 0);
        CHECK(k.out == "4\n");
    }

    TEST_CASE("regular verdict drives the exit code") {
        CHECK(run({"regular", "--g", "perm_g"}).exit_code == 0);
        const CliRun r = run({"regular", "--g", "k4"});
        CHECK(r.exit_code == 1);
        CHECK(r.out == "false\n");
    }

    TEST_CASE("gen-malcev formats") {
        const CliRun text = run({"gen-malcev", "--g", "perm_g", "--h", "perm_h"});
        CHECK(text.exit_code == 0);
        CHECK(text.out.find("t_v2(x_v1, x_v1, x_v3)") != std::string::npos);

        const CliRun latex =
            run({"gen-malcev", "--g", "perm_g", "--h", "perm_h", "--format", "latex"});
        CHECK(latex.out.find("\\approx") != std::string::npos);

        const CliRun j =
            run({"gen-malcev", "--g", "perm_g", "--h", "perm_h", "--format", "json"});
        const IdentitySet ids = identity_set_from_json(json::parse(j.out));
        CHECK(ids.identities.size() == 4);
    }

    TEST_CASE("eval-relation over a relations file") {
        const json rels = json::array({
            {{"size", 3}, {"pairs", json::array({{0, 1}, {1, 0}})}, {"add_diagonal", true}},
            {{"size", 3}, {"pairs", json::array({{1, 2}, {2, 1}})}, {"add_diagonal", true}},
        });
        const TempJson file(rels);
        const CliRun r = run({"eval-relation", "--g", "perm_g", "--rels", file.path});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("(0, 2)") != std::string::npos);

        const CliRun witness = run({"eval-relation", "--g", "perm_g", "--rels", file.path,
                                    "--tuple", "0,2", "--format", "json"});
        CHECK(witness.exit_code == 0);
        const json w = json::parse(witness.out);
        CHECK(w.at("connected") == true);
        CHECK(w.at("witness").at("v2") == 1);

        const CliRun miss =
            run({"eval-relation", "--g", "perm_g", "--rels", file.path, "--tuple", "2,0"});
        CHECK(miss.exit_code == 1);
    }

    TEST_CASE("check-inclusion reports the least counterexample") {
        const json rels = json::array({
            {{"size", 3}, {"pairs", json::array({{0, 1}, {1, 0}})}, {"add_diagonal", true}},
            {{"size", 3}, {"pairs", json::array({{1, 2}, {2, 1}})}, {"add_diagonal", true}},
        });
        const TempJson file(rels);
        const CliRun r = run({"check-inclusion", "--g", "perm_g", "--h", "perm_h", "--rels",
                              file.path});
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("false") != std::string::npos);
        CHECK(r.out.find("counterexample: (0, 2)") != std::string::npos);

        CHECK(run({"check-inclusion", "--g", "perm_g", "--h", "perm_g", "--rels", file.path})
                  .exit_code == 0);
    }

    TEST_CASE("congruences and tolerances listings") {
        const CliRun c = run({"congruences", "--algebra", "chain3"});
        CHECK(c.exit_code == 0);
        CHECK(c.out.find("count: 4") != std::string::npos);

        const CliRun t = run({"tolerances", "--algebra", "set3", "--format", "json"});
        CHECK(t.exit_code == 0);
        CHECK(json::parse(t.out).at("count") == 8);
    }

    TEST_CASE("free-algebra command with caps") {
        const CliRun r = run({"free-algebra", "--algebra", "chain2", "--generators", "3"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("elements: 18") != std::string::npos);

        const CliRun capped = run({"free-algebra", "--algebra", "chain2", "--generators", "3",
                                   "--cap-power", "4"});
        CHECK(capped.exit_code == 2);
        CHECK(capped.err.find("cap") != std::string::npos);
    }

    TEST_CASE("verify-wp exit codes") {
        const CliRun good = run({"verify-wp", "--algebra", "z2", "--g", "perm_g", "--h",
                                 "perm_h"});
        CHECK(good.exit_code == 0);
        CHECK(good.out.find("witness tables") != std::string::npos);

        const CliRun bad = run({"verify-wp", "--algebra", "chain2", "--g", "perm_g", "--h",
                                "perm_h"});
        CHECK(bad.exit_code == 1);
    }

    TEST_CASE("verify subcommands emit reports") {
        const CliRun r = run({"verify-contolnuo", "--algebra", "z2", "--g", "perm_g", "--h",
                              "perm_h", "--format", "json"});
        CHECK(r.exit_code == 0);
        const json report = json::parse(r.out);
        CHECK(report.at("ok") == true);
        CHECK(report.at("check") == "contolnuo");

        const CliRun cor = run({"verify-cornuo", "--algebra", "chain2", "--g", "perm_g", "--h",
                                "perm_h", "--m", "1,3", "--samples", "chain2,chain3"});
        CHECK(cor.exit_code == 0);
        CHECK(cor.out.find("agreement") != std::string::npos);
    }

    TEST_CASE("realizable command") {
        const CliRun yes = run({"realizable", "--g", "perm_g", "--max-size", "2"});
        CHECK(yes.exit_code == 0);
        CHECK(yes.out.find("witness: a1 o a2") != std::string::npos);

        const CliRun no = run({"realizable", "--g", "k4", "--max-size", "4"});
        CHECK(no.exit_code == 1);
        CHECK(no.out == "false\n");
    }

    TEST_CASE("emitted JSON re-parses through the loaders") {
        const CliRun term = run({"parse-term", "--term", "a1 o a2 & a1", "--n", "2",
                                 "--format", "json"});
        const Term t = term_from_json(json::parse(term.out));
        CHECK(print_term(t) == "a1 o a2 & a1");

        const CliRun graph = run({"term-graph", "--term", "a1 & a2", "--n", "2"});
        const LabeledGraph g = graph_from_json(json::parse(graph.out));
        CHECK(graph_to_json(g) == json::parse(graph.out));

        const CliRun congs = run({"congruences", "--algebra", "chain3", "--format", "json"});
        for (const auto& rel : json::parse(congs.out).at("congruences")) {
            const Relation r = relation_from_json(rel);
            CHECK(relation_to_json(r) == rel);
        }

        const CliRun ids =
            run({"gen-malcev", "--g", "perm_g", "--h", "perm_h", "--format", "json"});
        const IdentitySet set = identity_set_from_json(json::parse(ids.out));
        CHECK(identity_set_to_json(set) == json::parse(ids.out));
    }

    TEST_CASE("identical runs are byte-identical") {
        const std::vector<std::string> args{"gen-malcev", "--g", "perm_g", "--h", "perm_h",
                                            "--format", "json"};
        const CliRun a = run(args);
        const CliRun b = run(args);
        CHECK(a.out == b.out);
        const std::vector<std::string> rep{"verify-contolnuok", "--algebra", "z2", "--g",
                                           "perm_g", "--h", "perm_h", "--format", "json"};
        // Runtime jitter lives in a single JSON field; zero it for comparison.
        json ra = json::parse(run(rep).out);
        json rb = json::parse(run(rep).out);
        ra["runtime_seconds"] = 0;
        rb["runtime_seconds"] = 0;
        CHECK(ra == rb);
    }

    TEST_CASE("seed option is accepted anywhere and ignored") {
        CHECK(run({"--seed", "5", "regular", "--g", "perm_g"}).exit_code == 0);
        const CliRun r = run({"regular", "--g", "perm_g", "--seed", "7"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "true\n");
    }

    TEST_CASE("eval-relation accepts a term in place of a graph") {
        const json rels = json::array({
            {{"size", 3}, {"pairs", json::array({{0, 1}, {1, 0}})}, {"add_diagonal", true}},
            {{"size", 3}, {"pairs", json::array({{1, 2}, {2, 1}})}, {"add_diagonal", true}},
        });
        const TempJson file(rels);
        const CliRun r =
            run({"eval-relation", "--term", "a1 o a2", "--n", "2", "--rels", file.path});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("(0, 2)") != std::string::npos);

        CHECK(run({"eval-relation", "--g", "perm_g", "--term", "a1", "--n", "2", "--rels",
                   file.path})
                  .exit_code == 2);
        CHECK(run({"eval-relation", "--rels", file.path}).exit_code == 2);
    }

    TEST_CASE("graph files load and warn on unary relations") {
        const json g{{"vertices", {"a", "b"}},
                     {"n", 1},
                     {"edges", json::array({{"a", "b", 1}})},
                     {"distinguished", json::array({"a"})}};
        const TempJson file(g);
        const CliRun r = run({"regular", "--g", file.path});
        CHECK(r.exit_code == 0);
        CHECK(r.err.find("warning") != std::string::npos);

        const CliRun missing = run({"regular", "--g", "no_such_file.json"});
        CHECK(missing.exit_code == 2);
    }
}
