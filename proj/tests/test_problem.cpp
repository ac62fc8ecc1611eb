#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "commands.hpp"
#include "testutil.hpp"

using namespace mfwb;
using nlohmann::json;

namespace {

const char* xy_problem = R"({
  "ring": { "variables": ["x", "y"], "potential": "x*y" },
  "factorizations": {
    "E": { "phi": [["x"]], "psi": [["y"]] }
  },
  "morphisms": {
    "one": { "source": "E", "target": "E", "parity": "even",
             "matrix": [["1", "0"], ["0", "1"]] },
    "yid": { "source": "E", "target": "E", "parity": "even",
             "matrix": [["y", "0"], ["0", "y"]] }
  }
})";

const char* x3_problem = R"({
  "ring": { "variables": ["x"], "potential": "x^3" },
  "factorizations": {
    "E": { "phi": [["x"]], "psi": [["x^2"]] }
  }
})";

json run_json(const ProblemFile& pf, std::vector<std::string> args, int expect_code = 0)
{
    args.push_back("--format");
    args.push_back("json");
    CommandResult r = run_command(&pf, args);
    CHECK(r.exit_code == expect_code);
    return json::parse(r.output);
}

} // namespace

TEST_CASE("problem loading and validation") {
    ProblemFile pf = load_problem_text(xy_problem);
    CHECK(pf.ring.n() == 2);
    CHECK(pf.factorizations.count("E") == 1);
    CHECK(pf.morphisms.count("one") == 1);
    CHECK(pf.morphism("one").parity() == Parity::Even);
}

TEST_CASE("invalid factorizations are rejected on load with the entry named") {
    const char* bad = R"({
      "ring": { "variables": ["x"], "potential": "x^3" },
      "factorizations": { "B": { "phi": [["x"]], "psi": [["x"]] } }
    })";
    try {
        load_problem_text(bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::validation);
        std::string msg = e.what();
        CHECK(msg.find("B") != std::string::npos);
        CHECK(msg.find("(0,0)") != std::string::npos);
        CHECK(msg.find("x^2") != std::string::npos);
    }
}

TEST_CASE("parse errors and malformed files map to io") {
    CHECK_THROWS_AS(load_problem_text("not json"), Error);
    try {
        load_problem_text("{}");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::io);
    }
    const char* badexpr = R"({
      "ring": { "variables": ["x"], "potential": "x + q" }
    })";
    try {
        load_problem_text(badexpr);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::io);
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    }
}

TEST_CASE("morphism parity pattern is enforced on load") {
    const char* bad = R"({
      "ring": { "variables": ["x", "y"], "potential": "x*y" },
      "factorizations": { "E": { "phi": [["x"]], "psi": [["y"]] } },
      "morphisms": { "m": { "source": "E", "target": "E", "parity": "even",
                            "matrix": [["0", "1"], ["0", "0"]] } }
    })";
    CHECK_THROWS_AS(load_problem_text(bad), Error);
}

TEST_CASE("milnor command: spec example") {
    ProblemFile pf = load_problem_text(x3_problem);
    json rep = run_json(pf, {"milnor"});
    CHECK(rep["schema"] == "mfwb/1");
    CHECK(rep["result"]["mu"] == 2);
    CHECK(rep["result"]["basis"] == json::array({"1", "x"}));
}

TEST_CASE("hrr command: spec example") {
    ProblemFile pf = load_problem_text(xy_problem);
    json rep = run_json(pf, {"hrr", "E", "E"});
    CHECK(rep["result"]["chi"] == 1);
    CHECK(rep["result"]["pairing"] == "1");
    CHECK(rep["result"]["match"] == true);
}

TEST_CASE("pair and bb commands") {
    ProblemFile pf = load_problem_text(xy_problem);
    json rep = run_json(pf, {"pair", "one", "one"});
    CHECK(rep["result"]["value"] == "1");

    json bb = run_json(pf, {"bb", "yid"});
    CHECK(bb["result"]["closed"] == true);
    CHECK(bb["result"]["coordinates"]["1"] == "0");

    json ch = run_json(pf, {"chern", "E"});
    CHECK(ch["result"]["coordinates"]["1"] == "-1");
}

TEST_CASE("residue and cohom and gram commands") {
    ProblemFile pf = load_problem_text(x3_problem);
    json res = run_json(pf, {"residue", "3*x"});
    CHECK(res["result"]["residue"] == "1");
    CHECK(res["result"]["N"] == 2);

    json coh = run_json(pf, {"cohom", "E", "E"});
    CHECK(coh["result"]["h0"] == 1);
    CHECK(coh["result"]["h1"] == 1);

    json gram = run_json(pf, {"gram", "E", "E"});
    CHECK(gram["result"]["nondegenerate"] == true);
}

TEST_CASE("koszul-check, eta-check, bpl-check commands") {
    ProblemFile pf = load_problem_text(x3_problem);
    json k = run_json(pf, {"koszul-check", "--count", "10"});
    CHECK(k["result"]["all_passed"] == true);

    json eta = run_json(pf, {"eta-check", "E"});
    CHECK(eta["result"]["verdict"] == "pass");

    json bpl = run_json(pf, {"bpl-check", "--trunc", "3"});
    CHECK(bpl["result"]["factorizations"]["E"] == "ok");
}

TEST_CASE("error objects carry kind and message") {
    ProblemFile pf = load_problem_text(x3_problem);
    CommandResult r = run_command(&pf, {"cohom", "E", "nope", "--format", "json"});
    CHECK(r.exit_code == 3);
    json rep = json::parse(r.output);
    CHECK(rep["error"]["kind"] == "io");

    CommandResult r2 = run_command(&pf, {"unknown-cmd"});
    CHECK(r2.exit_code == 3);

    CommandResult r3 = run_command(&pf, {"residue", "x +"});
    CHECK(r3.exit_code == 3);
}

TEST_CASE("oracle flag gives identical results") {
    ProblemFile pf = load_problem_text(xy_problem);
    json a = run_json(pf, {"hrr", "E", "E"});
    json b = run_json(pf, {"hrr", "E", "E", "--oracle"});
    CHECK(a["result"] == b["result"]);
}

TEST_CASE("output is deterministic and text mirrors json fields") {
    ProblemFile pf = load_problem_text(xy_problem);
    CommandResult a = run_command(&pf, {"hrr", "E", "E"});
    CommandResult b = run_command(&pf, {"hrr", "E", "E"});
    CHECK(a.output == b.output);
    CHECK(a.output.find("chi: 1") != std::string::npos);
    CHECK(a.output.find("pairing: 1") != std::string::npos);
    CHECK(a.output.find("match: true") != std::string::npos);
}

TEST_CASE("non-isolated potential exits with compute code") {
    const char* nasty = R"({
      "ring": { "variables": ["x", "y"], "potential": "x^2*y^2" }
    })";
    ProblemFile pf = load_problem_text(nasty);
    CommandResult r = run_command(&pf, {"milnor", "--cap", "16", "--format", "json"});
    CHECK(r.exit_code == 2);
    json rep = json::parse(r.output);
    CHECK(rep["error"]["kind"] == "compute");
}
