#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "orthokit/io.hpp"
#include "orthokit/synth.hpp"

using namespace orthokit;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
};

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "orthokit_cli_tests";
  fs::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args) {
  const fs::path capture = work_dir() / "stdout.txt";
  const std::string cmd = std::string(ORTHOKIT_CLI_PATH) + " " + args + " > " +
                          capture.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(capture);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return CliResult{WEXITSTATUS(raw), buffer.str()};
}

}  // namespace

TEST_CASE("synth then classify round trips through files", "[cli]") {
  const fs::path mapfile = work_dir() / "synth_mixed.json";
  const CliResult synth = run_cli("synth --dim-h 2 --dim-k 4 --s 0.6 --seed 42 --out " +
                                  mapfile.string());
  REQUIRE(synth.code == 0);

  const CliResult cls = run_cli("classify --input " + mapfile.string());
  REQUIRE(cls.code == 0);
  const json report = json::parse(cls.out);
  CHECK(report["classification"] == "mixed");
  CHECK(std::abs(report["s"].get<double>() - 0.6) < 1e-10);
  CHECK(std::abs(report["gamma"].get<double>() - 1.0) < 1e-10);
  CHECK(report["version"] == "0.1.0");
  CHECK(report["parameters"]["tol"].get<double>() == 1e-9);
}

TEST_CASE("synth rejects a too-small codomain with exit 2", "[cli]") {
  const fs::path mapfile = work_dir() / "unwritten.json";
  const CliResult synth = run_cli("synth --dim-h 2 --dim-k 3 --s 0.5 --out " +
                                  mapfile.string());
  CHECK(synth.code == 2);
}

TEST_CASE("classify reports the gallery classes through files", "[cli]") {
  for (const GalleryEntry& entry : gallery()) {
    const fs::path file = work_dir() / (entry.name + ".json");
    save_map(file, entry.map);
    const CliResult cls = run_cli("classify --input " + file.string());
    REQUIRE(cls.code == 0);
    const json report = json::parse(cls.out);
    INFO(entry.name);
    CHECK(report["classification"] == to_string(entry.expected));
    if (entry.name == "identity") {
      CHECK(report["gamma"].get<double>() == 1.0);
      CHECK(report["s"].get<double>() == 1.0);
    }
  }
}

TEST_CASE("classify exit codes distinguish bad input from bad dimensions",
          "[cli]") {
  CHECK(run_cli("classify --input /nonexistent/nowhere.json").code == 2);

  const fs::path garbage = work_dir() / "garbage.json";
  std::ofstream(garbage) << "{ not json at all";
  CHECK(run_cli("classify --input " + garbage.string()).code == 2);

  const fs::path short_map = work_dir() / "short.json";
  save_map(short_map, RealLinearMap::identity(1));  // dim_h = 1
  CHECK(run_cli("classify --input " + short_map.string()).code == 3);

  CHECK(run_cli("classify").code == 1);  // missing required --input
  CHECK(run_cli("bogus-subcommand").code == 1);
}

TEST_CASE("classify accepts the real_matrix form", "[cli]") {
  const RMatrix m = real_form(RealLinearMap::conjugation(2));
  json j;
  j["real_matrix"] = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    j["real_matrix"].push_back(row);
  }
  const fs::path file = work_dir() / "real_form.json";
  std::ofstream(file) << j.dump();
  const CliResult cls = run_cli("classify --input " + file.string());
  REQUIRE(cls.code == 0);
  CHECK(json::parse(cls.out)["classification"] == "conjugate_linear");
}

TEST_CASE("batch classification is deterministic and order-independent",
          "[cli]") {
  const fs::path dir = work_dir() / "batch";
  fs::create_directories(dir);
  save_map(dir / "a_mixed.json",
           synth_canonical(CanonicalSpec::standard(2, 4, 0.6)));
  save_map(dir / "b_identity.json", RealLinearMap::identity(2));
  save_map(dir / "c_zero.json", RealLinearMap::zero(2, 2));

  const CliResult first = run_cli("classify --input " + dir.string());
  const CliResult second = run_cli("classify --input " + dir.string());
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);

  const json batch = json::parse(first.out);
  REQUIRE(batch["results"].size() == 3);
  CHECK(batch["results"][0]["classification"] == "mixed");
  CHECK(batch["results"][1]["classification"] == "complex_linear");
  CHECK(batch["results"][2]["classification"] == "zero");

  // A single-file run reproduces the batch entry: per-file seeds depend
  // only on the file name.
  const CliResult single = run_cli("classify --input " +
                                   (dir / "a_mixed.json").string());
  const json single_report = json::parse(single.out);
  CHECK(single_report["criteria"] == batch["results"][0]["criteria"]);
  CHECK(single_report["s"] == batch["results"][0]["s"]);
}

TEST_CASE("text output mode prints one line per file", "[cli]") {
  const fs::path file = work_dir() / "text_identity.json";
  save_map(file, RealLinearMap::identity(2));
  const CliResult cls = run_cli("classify --text --input " + file.string());
  REQUIRE(cls.code == 0);
  CHECK(cls.out.find("complex_linear") != std::string::npos);
  CHECK(cls.out.find("gamma=1") != std::string::npos);
}

TEST_CASE("check agrees with itself across the gallery", "[cli]") {
  for (const GalleryEntry& entry : gallery()) {
    const fs::path file = work_dir() / ("check_" + entry.name + ".json");
    save_map(file, entry.map);
    const CliResult check =
        run_cli("check --input " + file.string() + " --samples 2000");
    INFO(entry.name);
    REQUIRE(check.code == 0);  // decision and oracle always agree here
    const json report = json::parse(check.out);
    CHECK(report["agree"] == true);
    const bool expected_preserving =
        entry.expected != Classification::NotOrthogonalityPreserving;
    CHECK(report["oracle"] == expected_preserving);
    CHECK(report["decision"] == expected_preserving);
    if (!expected_preserving) {
      REQUIRE(report["witness"].is_object());
      CHECK(report["witness"]["x"].size() == entry.map.dim_h());
    } else {
      CHECK(report["witness"].is_null());
    }
  }
}

TEST_CASE("check reports the zero map as preserving", "[cli]") {
  const fs::path file = work_dir() / "zero.json";
  save_map(file, RealLinearMap::zero(2, 2));
  const CliResult check = run_cli("check --input " + file.string() +
                                  " --samples 500");
  REQUIRE(check.code == 0);
  const json report = json::parse(check.out);
  CHECK(report["classification"] == "zero");
  CHECK(report["oracle"] == true);
  CHECK(report["agree"] == true);
}

TEST_CASE("corrector writes a verified map for preservers and rejects others",
          "[cli]") {
  const fs::path mixed = work_dir() / "corr_mixed.json";
  save_map(mixed, synth_canonical(CanonicalSpec::standard(2, 4, 0.6)));
  const fs::path rfile = work_dir() / "corr_out.json";
  const CliResult ok = run_cli("corrector --input " + mixed.string() +
                               " --out " + rfile.string());
  REQUIRE(ok.code == 0);
  const json report = json::parse(ok.out);
  CHECK(report["verification"]["complex_linearity_residual"].get<double>() <=
        1e-9);
  CHECK(report["verification"]["isometry_residual"].get<double>() <= 1e-9);
  CHECK(report["verification"]["composition_preserves_orthogonality"] == true);

  // The emitted file holds R plus the verification block and can be loaded.
  const RealLinearMap r = load_map(rfile);
  CHECK(r.dim_h() == 4);
  CHECK(r.dim_k() == 4);

  const fs::path ident = work_dir() / "corr_identity.json";
  save_map(ident, RealLinearMap::identity(2));
  const fs::path rident = work_dir() / "corr_identity_out.json";
  REQUIRE(run_cli("corrector --input " + ident.string() + " --out " +
                  rident.string()).code == 0);
  CHECK(max_entry_diff(load_map(rident), RealLinearMap::identity(2)) == 0.0);

  const fs::path bad = work_dir() / "corr_bad.json";
  CMatrix c(2, 2), d(2, 2);
  c.at(1, 1) = 1.0;
  d.at(0, 0) = 1.0;
  save_map(bad, RealLinearMap(c, d));
  CHECK(run_cli("corrector --input " + bad.string() + " --out " +
                (work_dir() / "never.json").string()).code == 3);
}
