#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "linkbound/catalog.hpp"
#include "linkbound/cli.hpp"
#include "linkbound/io.hpp"
#include "linkbound/random_data.hpp"

using namespace linkbound;
namespace fs = std::filesystem;

namespace {

const std::string kData = LINKBOUND_DATA_DIR;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "linkbound");
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

// Writes `text` to a fresh file in the temp directory and returns its path.
std::string scratch(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "linkbound_tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("link input forms") {
  LinkInput a = link_from_json(parse_json_text(R"({"braid": {"strands": 2, "word": [1, 1, 1]}})"));
  LinkInput b = link_from_json(parse_json_text(R"({"braid": "strands=2; 1 1 1"})"));
  CHECK(a.seifert.matrix() == b.seifert.matrix());
  REQUIRE(a.braid);
  CHECK(*a.braid == BraidWord{2, {1, 1, 1}});

  LinkInput m = link_from_json(parse_json_text(R"({"seifert_matrix": [[0]]})"));
  CHECK(m.seifert.components() == 2);
  CHECK_THROWS_AS(link_from_json(parse_json_text(R"({"seifert_matrix": [[1, 2]]})")), SchemaError);
  CHECK_THROWS_AS(link_from_json(parse_json_text(R"({"knot": 1})")), SchemaError);
  CHECK_THROWS_AS(link_from_json(parse_json_text(R"({"seifert_matrix": [[1, 0], [0, 1]], "components": 1})")),
                  InvalidSeifertData);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_json_text("{\n  \"braid\": [1,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("scalars") {
  CHECK(rational_to_json(Rational(-3, 4)) == "-3/4");
  CHECK(rational_to_json(Rational(6, 3)) == "2");
  CHECK(rational_from_json(json("-3/4"), "q") == Rational(-3, 4));
  CHECK(rational_from_json(json(5), "q") == 5);
  Integer big("123456789012345678901234567890");
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big), "n") == big);
  CHECK(integer_to_json(Integer(-7)) == -7);
  Laurent p = parse_laurent("2t^10-7t^9+7t^8-3t^-1");
  CHECK(laurent_from_json(laurent_to_json(p)) == p);
  CHECK(laurent_from_json(json("t^2-t+1")) == parse_laurent("t^2-t+1"));
  CHECK(laurent_from_json(parse_json_text(R"({"coefficients": [1, -1, 1], "min_exponent": -1})")) ==
        parse_laurent("t^-1-1+t"));
}

TEST_CASE("invariants round trip") {
  std::vector<SeifertData> cases;
  for (const auto& e : builtin_catalog()) cases.push_back(link_from_json(e.input).seifert);
  std::mt19937_64 rng(71);
  for (int k = 0; k < 30; ++k) cases.push_back(random_seifert(rng));
  for (const auto& v : cases) {
    Invariants inv = compute_invariants(v);
    json j = invariants_to_json(inv);
    Invariants back = invariants_from_json(parse_json_text(dump(j, 2)));
    CHECK(back == inv);
    std::string why;
    CHECK_MESSAGE(same_signature_function(back.signature, inv.signature, &why), why);
    CHECK(dump(invariants_to_json(back), -1) == dump(j, -1));
  }
}

TEST_CASE("report and declaration round trip") {
  BoundReport r = assemble_report(seifert_matrix_from_braid(torus_braid(3, 5), "T(3,5)"), {{11, 4}});
  CHECK(report_from_json(report_to_json(r)) == r);
  json bad = report_to_json(r);
  bad["exact"] = false;
  CHECK_THROWS_AS(report_from_json(bad), SchemaError);

  InfectionDecl d;
  d.axes = 2;
  d.linking_numbers = {{0}, {0}};
  d.double_points = 3;
  d.milnor_vanishing_length = 6;
  d.notes = "two axes";
  CHECK(infection_from_json(infection_to_json(d)) == d);
  json missing = infection_to_json(d);
  missing.erase("c");
  CHECK_THROWS_AS(infection_from_json(missing), SchemaError);
}

TEST_CASE("invariants command") {
  Run t = cli({"invariants", data("trefoil.json")});
  REQUIRE(t.code == kExitOk);
  json j = parse_json_text(t.out);
  CHECK(j["alexander"] == "t^2-t+1");
  CHECK(j["beta"] == 0);
  CHECK(j["width"] == 2);
  CHECK(j["signature_function"]["breakpoints"][0]["sigma"] == "-1");

  json u = parse_json_text(cli({"invariants", "--input", data("unknot.json")}).out);
  CHECK(u["alexander"] == "1");
  CHECK(u["signature_function"]["breakpoints"].empty());
  CHECK(u["signature_function"]["size"] == 0);

  json k = parse_json_text(cli({"invariants", data("t35.json")}).out);
  CHECK(k["alexander"] == "t^8-t^7+t^5-t^4+t^3-t+1");
  CHECK(k["signature_function"]["max_abs_sigma"] == 8);

  json l = parse_json_text(cli({"invariants", data("unlink.json")}).out);
  CHECK(l["alexander"] == "0");
  CHECK(l["width"].is_null());
  CHECK(l["beta"] == 1);
}

TEST_CASE("output is byte for byte deterministic with sorted keys") {
  for (const char* f : {"trefoil.json", "t35.json", "k_surrogate.json", "hopf.json"}) {
    Run a = cli({"invariants", data(f)});
    Run b = cli({"invariants", data(f)});
    CHECK(a.out == b.out);
    CHECK(a.out == dump(parse_json_text(a.out), 2) + "\n");
    Run c = cli({"bound", data(f)});
    CHECK(c.out == cli({"bound", data(f)}).out);
  }
  Run compact = cli({"--json-indent", "-1", "bound", data("unknot.json")});
  CHECK(lines(compact.out).size() == 1);
}

TEST_CASE("bound command") {
  json t = parse_json_text(cli({"bound", data("t35.json")}).out);
  CHECK(t["lower"] == 4);
  CHECK(t["upper"] == 4);
  CHECK(t["exact"] == true);

  json u = parse_json_text(cli({"bound", data("unknot.json")}).out);
  CHECK(u["lower"] == 0);
  CHECK(u["upper"] == 0);

  json tr = parse_json_text(cli({"bound", data("trefoil.json"), "--band-cert", "3,2"}).out);
  CHECK(tr["upper"] == 1);

  json k = parse_json_text(cli({"bound", data("k_surrogate.json"), "--band-cert", "11,4"}).out);
  CHECK(k["lower"] == 4);
  CHECK(k["upper"] == 4);
  CHECK(k["slice_verdict"] == "obstructed");

  json h = parse_json_text(cli({"bound", data("hopf.json")}).out);
  CHECK(h["upper"] == "unknown");
}

TEST_CASE("infect command") {
  const std::string base = data("k_surrogate_report.json");
  Run r = cli({"infect", base, data("infection.json")});
  REQUIRE(r.code == kExitOk);
  json j = parse_json_text(r.out);
  CHECK(j["lower"] == 4);
  CHECK(j["upper"] == 4);
  CHECK(j["exact"] == true);
  CHECK(j["assumptions"].size() == 2);

  json c0 = parse_json_text(cli({"infect", base, data("infection_c0.json")}).out);
  CHECK(c0["upper"] == 4);
  CHECK(c0["assumptions"].size() == 1);

  json linked = parse_json_text(cli({"infect", base, data("infection_linked.json")}).out);
  CHECK(linked["lower"] == 0);
  CHECK(linked["upper"] == 4);

  CHECK(cli({"infect", base, data("infection_no_mu.json")}).code == kExitParse);

  json d = read_json_file(data("infection.json"));
  d["milnor_vanishing_length"] = 5;
  CHECK(cli({"infect", base, scratch("short.json", d.dump())}).code == kExitInvariant);
  d.erase("base");
  d["milnor_vanishing_length"] = 6;
  std::string nobase = scratch("nobase.json", d.dump());
  CHECK(cli({"infect", base, nobase}).code == kExitParse);
  CHECK(cli({"infect", base, nobase, "--input", data("k_surrogate.json")}).code == kExitOk);
}

TEST_CASE("signature-csv command") {
  auto t = lines(cli({"signature-csv", data("trefoil.json")}).out);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == "x_lo,x_hi,sigma,nullity,source");
  CHECK(t[1] == "-2,1,-2,0,exact");
  CHECK(t[2] == "1,1,-1,1,exact");
  CHECK(t[3] == "1,2,0,0,exact");

  auto u = lines(cli({"signature-csv", data("unknot.json")}).out);
  REQUIRE(u.size() == 2);
  CHECK(u[1] == "-2,2,0,0,exact");

  // Oracle rows agree with the exact rows away from the breakpoint.
  auto s = lines(cli({"signature-csv", data("trefoil.json"), "--samples", "100"}).out);
  REQUIRE(s.size() == 104);
  for (std::size_t i = 4; i < s.size(); ++i) {
    std::istringstream row(s[i]);
    std::string xs, skip, sig;
    std::getline(row, xs, ',');
    std::getline(row, skip, ',');
    std::getline(row, sig, ',');
    const double x = std::stod(xs);
    if (std::abs(x - 1.0) < 1e-3) continue;
    CHECK(std::stoi(sig) == (x < 1 ? -2 : 0));
  }
  CHECK(cli({"signature-csv", data("trefoil.json"), "--samples", "-1"}).code == kExitParse);
}

TEST_CASE("exit codes") {
  CHECK(cli({"invariants", data("no_such_file.json")}).code == kExitParse);
  Run syntax = cli({"invariants", scratch("broken.json", "{\"braid\": \n  [1,, 2]}")});
  CHECK(syntax.code == kExitParse);
  CHECK(syntax.err.find("line 2") != std::string::npos);
  CHECK(cli({"invariants", scratch("bad_braid.json", R"({"braid": "strands=2; 3"})")}).code == kExitParse);
  CHECK(cli({"frobnicate"}).code == kExitParse);
  CHECK(cli({}).code == kExitParse);
  CHECK(cli({"invariants", scratch("bad_v.json", R"({"seifert_matrix": [[1, 0], [0, 1]], "components": 1})")})
            .code == kExitInvariant);
  CHECK(cli({"bound", data("trefoil.json"), "--band-cert", "2,3"}).code == kExitInconsistent);
  CHECK(cli({"bound", data("trefoil.json"), "--band-cert", "2,2"}).code == kExitInvariant);
  CHECK(cli({"bound", data("trefoil.json"), "--band-cert", "two"}).code == kExitParse);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("verify command") {
  Run builtin = cli({"verify"});
  CHECK(builtin.code == kExitOk);
  CHECK(builtin.out.find("FAIL") == std::string::npos);

  Run file = cli({"verify", "--catalog", data("catalog.json")});
  CHECK(file.code == kExitOk);
  CHECK(file.out.find("10 passed, 0 failed") != std::string::npos);

  json corrupted = read_json_file(data("catalog.json"));
  corrupted["entries"][1]["expected"]["alexander"] = "t^2-3t+1";
  Run bad = cli({"verify", "--catalog", scratch("corrupted.json", corrupted.dump())});
  CHECK(bad.code == kExitVerify);
  CHECK(bad.out.find("FAIL trefoil") != std::string::npos);
  CHECK(bad.out.find("alexander: expected t^2-3t+1, got t^2-t+1") != std::string::npos);

  std::string empty = scratch("empty.json", R"({"entries": []})");
  Run e = cli({"verify", "--catalog", empty});
  CHECK(e.code == kExitOk);
  CHECK(e.err.find("warning") != std::string::npos);

  // The environment variable applies when --catalog is absent.
  ::setenv("LINKBOUND_CATALOG", scratch("corrupted_env.json", corrupted.dump()).c_str(), 1);
  CHECK(cli({"verify"}).code == kExitVerify);
  CHECK(cli({"verify", "--catalog", empty}).code == kExitOk);
  ::unsetenv("LINKBOUND_CATALOG");
}

TEST_CASE("catalog file round trip") {
  auto entries = builtin_catalog();
  json j = catalog_to_json(entries);
  CHECK(catalog_to_json(catalog_from_json(j)) == j);
  CHECK(read_json_file(data("catalog.json")) == j);
  CHECK_THROWS_AS(catalog_from_json(parse_json_text(R"({"items": []})")), SchemaError);
}
