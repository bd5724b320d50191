#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mukai/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = mukai::run_cli(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

json parse_out(const CliRun& r) { return json::parse(r.out); }

fs::path temp_file(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "mukai-walls-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify lemma26 over a whole surface degree") {
  CliRun r = run({"verify", "lemma26", "--h2", "10"});
  CHECK(r.exit_code == 0);
  json doc = parse_out(r);
  CHECK(doc.at("tool_version") == "0.1.0");
  CHECK(doc.at("command") == "verify");
  CHECK(doc.at("params").at("target") == "lemma26");
  CHECK(doc.at("surface").at("h2") == "10");
  CHECK(doc.at("status") == "ok");
  CHECK(doc.at("certificate").size() == 10);
  CHECK(doc.at("result").at("checked") == "10");
  CHECK(doc.at("result").at("verified") == "10");
}

TEST_CASE("verify case-a runs the full certificate chain") {
  CliRun r = run({"verify", "case-a", "--case-a", "2", "5"});
  CHECK(r.exit_code == 0);
  json doc = parse_out(r);
  CHECK(doc.at("status") == "ok");
  CHECK(doc.at("surface").at("h2") == "20");
  // regions, gap, first wall, root exclusion, h0 bound
  CHECK(doc.at("certificate").size() == 5);
  const json& res = doc.at("result");
  CHECK(res.at("h0_ceiling") == "7");
  CHECK(res.at("chi_vbar") == "7");
  CHECK(res.at("matches") == true);
  CHECK(res.at("gap_ok") == true);
  CHECK(res.at("regions_ok") == true);
  CHECK(res.at("first_wall_y0") == json{{"num", "2"}, {"den", "5"}});
}

TEST_CASE("verify first-wall emits the exact crossing height") {
  CliRun r = run({"verify", "first-wall", "--case-b", "13"});
  CHECK(r.exit_code == 0);
  json doc = parse_out(r);
  CHECK(doc.at("status") == "ok");
  const json& res = doc.at("result");
  CHECK(res.at("y0") == json{{"num", "4"}, {"den", "13"}});
  CHECK(res.at("candidates") == 9);
  CHECK(res.at("witness").at("r") == "4");
  CHECK(res.at("witness").at("c") == "2");
  CHECK(res.at("witness").at("s") == "13");
}

TEST_CASE("verify output is deterministic") {
  CliRun a = run({"verify", "case-b", "--case-b", "13"});
  CliRun b = run({"verify", "case-b", "--case-b", "13"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with status 2") {
  // family constraints violated
  CHECK(run({"verify", "case-a", "--case-a", "2", "4"}).exit_code == 2);
  // unknown verify target
  CHECK(run({"verify", "lemma99", "--h2", "10"}).exit_code == 2);
  // no surface source at all
  CHECK(run({"verify", "lemma26"}).exit_code == 2);
  // two surface sources
  CHECK(run({"verify", "lemma26", "--h2", "10", "--case-b", "13"}).exit_code == 2);
  // precision below the floor
  CHECK(run({"verify", "case-b", "--case-b", "13", "--precision", "32"}).exit_code == 2);
  // plot needs a family, not a bare degree
  CHECK(run({"plot", "walls", "--h2", "20"}).exit_code == 2);
  // unwritable output location
  CHECK(run({"roots", "--h2", "20", "--out", "/nonexistent-dir/x.json"}).exit_code == 2);
  // unknown subcommand
  CHECK(run({"frobnicate"}).exit_code == 2);
  // malformed integer
  CHECK(run({"roots", "--h2", "twenty"}).exit_code == 2);
}

TEST_CASE("help is not an error") {
  CliRun r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mukai-walls") != std::string::npos);
}

TEST_CASE("roots documents and their recheck round-trip") {
  fs::path doc_path = temp_file("roots.json");
  CliRun w = run({"roots", "--h2", "20", "--bounds", "5", "--out", doc_path.string()});
  CHECK(w.exit_code == 0);
  json doc = json::parse(slurp(doc_path));
  CHECK(doc.at("command") == "roots");
  CHECK(doc.at("result").at("bound") == "5");
  CHECK(doc.at("result").at("count") == doc.at("certificate").size());

  CliRun rc = run({"recheck", "--in", doc_path.string()});
  CHECK(rc.exit_code == 0);
  CHECK(rc.out == "recheck: match\n");

  // tampering with the stored result must be detected
  doc["result"]["count"] = doc["result"]["count"].get<std::size_t>() + 1;
  fs::path bad_path = temp_file("roots_tampered.json");
  std::ofstream(bad_path) << doc.dump(2) << "\n";
  CliRun bad = run({"recheck", "--in", bad_path.string()});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out == "recheck: mismatch\n");
}

TEST_CASE("verify documents recheck cleanly too") {
  fs::path doc_path = temp_file("first_wall.json");
  CliRun w = run({"verify", "first-wall", "--case-b", "13", "--out", doc_path.string()});
  CHECK(w.exit_code == 0);
  CliRun rc = run({"recheck", "--in", doc_path.string()});
  CHECK(rc.exit_code == 0);
  CHECK(rc.out == "recheck: match\n");

  CliRun missing = run({"recheck", "--in", temp_file("absent.json").string()});
  CHECK(missing.exit_code == 2);
}

TEST_CASE("wall figures are exact and reproducible") {
  CliRun a = run({"plot", "walls", "--case-a", "2", "5"});
  CliRun b = run({"plot", "walls", "--case-a", "2", "5"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("class=\"parabola\"") != std::string::npos);
  CHECK(a.out.find("data-b=\"1/5,2/5\"") != std::string::npos);
  CHECK(a.out.rfind("</svg>\n") == a.out.size() - 7);
}

TEST_CASE("polygon and region figures carry their styling hooks") {
  CliRun poly = run({"plot", "polygon", "--case-b", "13"});
  CHECK(poly.exit_code == 0);
  CHECK(poly.out.find("class=\"inner\"") != std::string::npos);
  CHECK(poly.out.find("class=\"mass\"") != std::string::npos);
  // charge-plane figure has no parabola element
  CHECK(poly.out.find("<path class=\"parabola\"") == std::string::npos);

  CliRun reg = run({"plot", "regions", "--case-a", "2", "5"});
  CHECK(reg.exit_code == 0);
  CHECK(reg.out.find("class=\"region\"") != std::string::npos);
  CHECK(reg.out.find("<path class=\"parabola\"") != std::string::npos);
}
