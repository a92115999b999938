#include "catch_amalgamated.hpp"

#include <sstream>

#include "mnesor/cli.hpp"
#include "mnesor/query.hpp"

using namespace mnesor;

namespace {

const std::string data_dir = MNESOR_DATA_DIR;

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::string> eval_args(const std::string& query) {
    return {"eval", "-m", data_dir + "/membership.csv",
            "-t", "a=" + data_dir + "/a.csv",
            "-t", "b=" + data_dir + "/b.csv",
            "-t", "x=" + data_dir + "/x.csv",
            "-t", "y=" + data_dir + "/y.csv",
            "-t", "europe=" + data_dir + "/europe.csv",
            query};
}

} // namespace

TEST_CASE("query parser: precedence selection > intersection > union") {
    auto q = parse_query("a + b & c");
    REQUIRE(q.kind == QueryExpr::Kind::Union);
    CHECK(q.children[0].kind == QueryExpr::Kind::TableRef);
    CHECK(q.children[1].kind == QueryExpr::Kind::Intersection);

    auto sel = parse_query("europe[NATO]");
    REQUIRE(sel.kind == QueryExpr::Kind::Selection);
    CHECK(sel.children[0].name == "europe");
    CHECK(sel.granular == GranularExpr::make_name("NATO"));

    auto nested = parse_query("(a + b)[EU & !NATO]");
    REQUIRE(nested.kind == QueryExpr::Kind::Selection);
    CHECK(nested.children[0].kind == QueryExpr::Kind::Union);

    auto chained = parse_query("a[EU][NATO] & b");
    REQUIRE(chained.kind == QueryExpr::Kind::Intersection);
    CHECK(chained.children[0].kind == QueryExpr::Kind::Selection);
}

TEST_CASE("query parser errors") {
    CHECK_THROWS_AS(parse_query(""), ParseError);
    CHECK_THROWS_AS(parse_query("a +"), ParseError);
    CHECK_THROWS_AS(parse_query("a[EU"), ParseError);
    CHECK_THROWS_AS(parse_query("a b"), ParseError);
    // position inside a selection is offset into the whole query
    try {
        parse_query("europe[EU &]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 11);
    }
}

TEST_CASE("cli eval: union example is byte-exact") {
    auto r = run_cli(eval_args("a + b"));
    CHECK(r.rc == 0);
    CHECK(r.out == "key\nFrance\nGermany\nSweden\n");
    CHECK(r.err.empty());
}

TEST_CASE("cli eval: intersection and selection examples") {
    CHECK(run_cli(eval_args("x & y")).out == "key\nGermany\n");
    auto r = run_cli(eval_args("europe[NATO] + europe[!NATO]"));
    CHECK(r.out == "key\nDenmark\nFrance\nGermany\nSweden\n");
    CHECK(run_cli(eval_args("europe[EU & !NATO]")).out == "key\nSweden\n");
}

TEST_CASE("cli eval exit codes and stderr diagnostics") {
    SECTION("query syntax error: exit 1, empty stdout") {
        auto r = run_cli(eval_args("a + "));
        CHECK(r.rc == cli::exit_parse_error);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    SECTION("unknown table: exit 2") {
        auto r = run_cli(eval_args("nosuch + a"));
        CHECK(r.rc == cli::exit_resolution_error);
        CHECK(r.err.find("nosuch") != std::string::npos);
    }
    SECTION("unknown granular name: exit 2") {
        auto r = run_cli(eval_args("a[G8]"));
        CHECK(r.rc == cli::exit_resolution_error);
        CHECK(r.err.find("G8") != std::string::npos);
    }
    SECTION("missing file: exit 3") {
        auto r = run_cli({"eval", "-m", data_dir + "/membership.csv", "-t",
                          "t=" + data_dir + "/nope.csv", "t"});
        CHECK(r.rc == cli::exit_data_error);
    }
    SECTION("malformed table binding: exit 1") {
        auto r = run_cli({"eval", "-m", data_dir + "/membership.csv", "-t", "oops", "a"});
        CHECK(r.rc == cli::exit_parse_error);
    }
}

TEST_CASE("cli axioms: pass/fail exit codes") {
    auto pass = run_cli({"axioms", "--model", "relation", "--universe", "3",
                         "--exhaustive", "--only", "space"});
    CHECK(pass.rc == 0);
    CHECK(pass.out.find("\"FAIL\"") == std::string::npos);

    auto fail = run_cli({"axioms", "--model", "subset", "--universe", "3", "--only",
                         "cancellation"});
    CHECK(fail.rc == cli::exit_axiom_fail);
    CHECK(fail.out.find("\"counterexample\"") != std::string::npos);

    auto minplus = run_cli({"axioms", "--model", "minplus", "--range", "-1..1",
                            "--exhaustive"});
    CHECK(minplus.rc == 0);

    auto capped = run_cli({"axioms", "--model", "relation", "--universe", "8",
                           "--exhaustive"});
    CHECK(capped.rc == cli::exit_cap_exceeded);
    CHECK(capped.out.empty());
}

TEST_CASE("cli axioms: usage errors") {
    CHECK(run_cli({"axioms", "--model", "warp", "--universe", "2"}).rc ==
          cli::exit_parse_error);
    CHECK(run_cli({"axioms", "--model", "minplus", "--range", "8..-8"}).rc ==
          cli::exit_parse_error);
    CHECK(run_cli({"axioms", "--model", "truncated-tropical", "--range", "-6..1"}).rc ==
          cli::exit_parse_error);
    CHECK(run_cli({"bogus-subcommand"}).rc == cli::exit_parse_error);
}

TEST_CASE("identical invocations produce byte-identical stdout") {
    auto q = eval_args("(a + b)[NATO] & europe");
    CHECK(run_cli(q).out == run_cli(q).out);
    std::vector<std::string> ax{"axioms", "--model", "relation", "--universe", "4",
                                "--random", "300", "--seed", "11"};
    CHECK(run_cli(ax).out == run_cli(ax).out);
}
