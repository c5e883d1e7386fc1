#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "singkit/cli/run.hpp"
#include "singkit/deform/merle.hpp"
#include "singkit/lattice/k3_audit.hpp"

using nlohmann::json;
using singkit::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Outcome o = invoke(std::move(args));
  return json::parse(o.out);
}

const std::vector<std::string> kQuadruple = {"x*z+y*z+z^3", "x*y"};

}  // namespace

TEST_CASE("t1 on the quadruple point") {
  std::vector<std::string> args = {"t1"};
  args.insert(args.end(), kQuadruple.begin(), kQuadruple.end());
  const Outcome o = invoke(args);
  CHECK(o.code == singkit::cli::kExitOk);
  CHECK(o.out.find("tau = 7\n") != std::string::npos);
  CHECK(o.out.find("verdict: ok") != std::string::npos);
}

TEST_CASE("json records share one schema") {
  const std::vector<std::vector<std::string>> commands = {
      {"t1", "x*z+y*z+z^3", "x*y"},
      {"grade", "x*z+y*z+z^3", "x*y", "--degrees", "3,4", "--weights", "2,2,1"},
      {"merle", "x*z+y*z+z^3", "x*y", "--perturb", "z^4", "--perturb", "0"},
      {"versal", "x*z+y*z+z^3", "x*y"},
      {"stratum", "--paper", "--samples", "2"},
      {"classify", "y^2-x^3"},
      {"k3-audit", "5", "1", "2"},
      {"scroll-check", "5", "2"},
      {"blowup", "2"},
  };
  for (const auto& c : commands) {
    CAPTURE(c.front());
    const json j = invoke_json(c);
    CHECK(j.size() == 5);
    CHECK(j.at("command") == c.front());
    CHECK(j.at("inputs").is_object());
    CHECK(j.at("results").is_object());
    CHECK(j.at("checks").is_array());
    for (const auto& k : j.at("checks")) {
      CHECK(k.contains("name"));
      CHECK(k.contains("lhs"));
      CHECK(k.contains("rhs"));
      CHECK(k.at("ok").is_boolean());
    }
    CHECK(j.at("verdict") == "ok");
  }
}

TEST_CASE("text and json carry the same numbers") {
  const json t1 = invoke_json({"t1", "x*z+y*z+z^3", "x*y"});
  CHECK(t1["results"]["tau"] == 7);
  std::string joined;
  for (const auto& b : t1["results"]["basis"]) joined += (joined.empty() ? "" : ", ") + b.get<std::string>();
  const Outcome text = invoke({"t1", "x*z+y*z+z^3", "x*y"});
  CHECK(text.out.find("basis: " + joined + "\n") != std::string::npos);

  const json k3 = invoke_json({"k3-audit", "6", "2", "3"});
  const Outcome k3t = invoke({"k3-audit", "6", "2", "3"});
  CHECK(k3t.out.find("pa(nH) = dim|nH| = " + std::to_string(k3["results"]["pa"].get<long>())) != std::string::npos);
  CHECK(k3t.out.find("tuple target = " + std::to_string(k3["results"]["target"].get<long>())) != std::string::npos);
  CHECK(k3["results"]["target"] == singkit::lattice::tuple_targets(6, 2).target);

  const json cl = invoke_json({"classify", "y^2-x^5"});
  CHECK(cl["results"]["milnor"] == 4);
  CHECK(cl["results"]["class"] == "A(4)");
  const Outcome clt = invoke({"classify", "y^2-x^5"});
  CHECK(clt.out.find("milnor number 4") != std::string::npos);
}

TEST_CASE("command results") {
  const json g = invoke_json({"grade", "x*z+y*z+z^3", "x*y", "--degrees", "3,4", "--weights", "2,2,1"});
  CHECK(g["results"]["alpha"] == "-1");
  CHECK(g["results"]["threshold"] == "0");

  const json m = invoke_json({"merle", "x*z+y*z+z^3", "x*y", "--perturb", "z^4", "--perturb", "0"});
  CHECK(m["results"]["verdict"] == singkit::deform::to_string(singkit::deform::MerleVerdict::Equivalent));
  const json m0 = invoke_json({"merle", "x*z+y*z+z^3", "x*y", "--perturb", "x", "--perturb", "0"});
  CHECK(m0["results"]["verdict"] == singkit::deform::to_string(singkit::deform::MerleVerdict::Inconclusive));
  CHECK(m0["verdict"] == "ok");

  const json v = invoke_json({"versal", "x*z+y*z+z^3", "x*y"});
  CHECK(v["results"]["parameters"] ==
        json::array({"a1", "a2", "a3", "a4", "b1", "b2", "b3"}));

  const json s = invoke_json({"stratum", "--paper", "--sign", "consistent"});
  CHECK(s["results"]["sign"] == "consistent");

  const json b = invoke_json({"blowup", "1"});
  CHECK(b["results"]["effective"] == false);
  CHECK(b["verdict"] == "ok");

  const json vars = invoke_json({"--vars", "u,v", "classify", "u^3-v^3"});
  CHECK(vars["results"]["class"] == "OrdinaryTriple");
}

TEST_CASE("failed checks exit with 2") {
  const Outcome o = invoke({"scroll-check", "3", "1"});
  CHECK(o.code == singkit::cli::kExitCheckFailed);
  CHECK(o.out.find("check FAILED: ") != std::string::npos);
  CHECK(o.out.find("verdict: check-failed") != std::string::npos);
  const json j = invoke_json({"scroll-check", "4", "1"});
  CHECK(j["verdict"] == "check-failed");
  CHECK(invoke({"scroll-check", "4", "2"}).code == singkit::cli::kExitOk);
}

TEST_CASE("usage and parse errors exit with 1") {
  const Outcome bad = invoke({"t1", "x+*y", "x*y"});
  CHECK(bad.code == singkit::cli::kExitUsage);
  CHECK(bad.err.find("parse error at position") != std::string::npos);
  CHECK(bad.err.find("expr    =") != std::string::npos);
  CHECK(invoke({}).code == singkit::cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == singkit::cli::kExitUsage);
  CHECK(invoke({"--format", "xml", "blowup", "2"}).code == singkit::cli::kExitUsage);
  CHECK(invoke({"k3-audit", "4", "1", "2"}).code == singkit::cli::kExitUsage);
  CHECK(invoke({"classify", "y^2-x^3+1"}).code == singkit::cli::kExitUsage);
  CHECK(invoke({"grade", "x^2", "--degrees", "2"}).code == singkit::cli::kExitUsage);
  CHECK(invoke({"--help"}).code == singkit::cli::kExitOk);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"stratum", "--paper", "--samples", "4", "--seed", "11"};
  const Outcome a = invoke(args), b = invoke(args);
  CHECK(a.code == singkit::cli::kExitOk);
  CHECK(a.out == b.out);
  const json ja = invoke_json(args), jb = invoke_json(args);
  CHECK(ja == jb);
}
