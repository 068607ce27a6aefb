// Command-line front end: classification, synthesis, corrector generation
// and oracle runs over JSON map files.
//
// Exit codes: 0 success, 1 usage error, 2 malformed/invalid input,
// 3 precondition failure (dimension errors, non-preserving input to
// corrector), 4 oracle/decision disagreement.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthokit/io.hpp"
#include "orthokit/orthokit.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace orthokit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDisagreement = 4;

json vec_to_json(const ComplexVec& v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

json classification_report(const fs::path& file, const ClassificationResult& r,
                           double tol) {
  json j;
  j["file"] = file.string();
  j["classification"] = to_string(r.kind);
  if (r.certificate) {
    j["gamma"] = r.certificate->gamma;
    j["s"] = r.certificate->s;
    j["c"] = r.certificate->c;
    j["both_directions"] = r.certificate->both_directions;
  }
  j["criteria"] = {{"b", r.criteria.b}, {"c", r.criteria.c}, {"d", r.criteria.d}};
  j["tolerances"] = {{"tol", tol}, {"membership", kMembershipTol}};
  return j;
}

void print_classification_text(std::ostream& os, const json& j) {
  os << j["file"].get<std::string>() << ": "
     << j["classification"].get<std::string>();
  if (j.contains("gamma"))
    os << "  gamma=" << j["gamma"].get<double>() << "  s=" << j["s"].get<double>()
       << "  c=" << j["c"].get<double>()
       << "  both_directions=" << (j["both_directions"].get<bool>() ? "yes" : "no");
  if (j.contains("criteria"))
    os << "  criteria(b,c,d)=" << j["criteria"]["b"].get<bool>() << ","
       << j["criteria"]["c"].get<bool>() << "," << j["criteria"]["d"].get<bool>();
  os << "\n";
}

int error_code_for(const Error& e) {
  if (dynamic_cast<const FormatError*>(&e)) return kExitBadInput;
  if (dynamic_cast<const SpecError*>(&e)) return kExitBadInput;
  if (dynamic_cast<const InsufficientCodomain*>(&e)) return kExitBadInput;
  return kExitPrecondition;  // dimension/zero-map/precondition failures
}

struct FileReport {
  json body;
  int code = kExitOk;
};

FileReport classify_file(const fs::path& file, double tol, std::uint64_t seed) {
  FileReport report;
  try {
    const RealLinearMap map = load_map(file);
    report.body = classification_report(file, classify_map(map, tol, seed), tol);
  } catch (const Error& e) {
    report.body = {{"file", file.string()}, {"error", e.what()}};
    report.code = error_code_for(e);
  }
  return report;
}

int cmd_classify(const std::string& input, double tol, std::uint64_t seed,
                 bool text) {
  const fs::path path(input);
  if (!fs::exists(path)) {
    std::cerr << "classify: no such path: " << input << "\n";
    return kExitBadInput;
  }

  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }

  // Per-file seeds depend only on the file name, so batch ordering and
  // thread scheduling never change any report.
  std::vector<FileReport> reports(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= files.size()) return;
      const std::uint64_t file_seed =
          seed ^ fnv1a(files[idx].filename().string());
      reports[idx] = classify_file(files[idx], tol, file_seed);
    }
  };
  const unsigned workers = std::max(
      1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                             static_cast<unsigned>(files.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  int code = kExitOk;
  for (const FileReport& r : reports) code = std::max(code, r.code);

  json out = {{"version", kVersion},
              {"command", "classify"},
              {"parameters",
               {{"input", input},
                {"tol", tol},
                {"seed", seed},
                {"format", text ? "text" : "json"}}}};
  if (fs::is_directory(path)) {
    out["results"] = json::array();
    for (const FileReport& r : reports) out["results"].push_back(r.body);
  } else {
    out.update(reports[0].body);
  }

  if (text) {
    std::cout << "orthokit " << kVersion << "  classify --input " << input
              << " --tol " << tol << " --seed " << seed << "\n";
    for (const FileReport& r : reports) {
      if (r.body.contains("error"))
        std::cout << r.body["file"].get<std::string>() << ": error: "
                  << r.body["error"].get<std::string>() << "\n";
      else
        print_classification_text(std::cout, r.body);
    }
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return code;
}

int cmd_synth(std::size_t dim_h, std::size_t dim_k, double s,
              std::vector<int> sigma, std::uint64_t seed,
              const std::string& out_path) {
  try {
    const CanonicalSpec spec =
        CanonicalSpec::random(dim_h, dim_k, s, seed, std::move(sigma));
    const RealLinearMap map = synth_canonical(spec);
    save_map(out_path, map);
    const json out = {{"version", kVersion},
                      {"command", "synth"},
                      {"parameters",
                       {{"dim_h", dim_h},
                        {"dim_k", dim_k},
                        {"s", s},
                        {"sigma", spec.sigma},
                        {"seed", seed},
                        {"out", out_path}}},
                      {"classification", to_string(classify_map(map).kind)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "synth: " << e.what() << "\n";
    return error_code_for(e);
  }
}

int cmd_check(const std::string& input, std::size_t samples,
              std::uint64_t seed, double tol) {
  try {
    const RealLinearMap map = load_map(input);
    const ClassificationResult cls = classify_map(map, tol, seed);
    const bool decision = cls.kind != Classification::NotOrthogonalityPreserving;
    const OracleReport oracle = sampling_oracle_report(map, samples, seed, tol);
    const bool agree = decision == oracle.preserved;

    json out = {{"version", kVersion},
                {"command", "check"},
                {"parameters",
                 {{"input", input},
                  {"samples", samples},
                  {"seed", seed},
                  {"tol", tol}}},
                {"classification", to_string(cls.kind)},
                {"decision", decision},
                {"oracle", oracle.preserved},
                {"agree", agree}};
    if (oracle.witness) {
      const auto& [x, y] = *oracle.witness;
      out["witness"] = {{"x", vec_to_json(x)},
                        {"y", vec_to_json(y)},
                        {"inner_xy",
                         {inner(x, y).real(), inner(x, y).imag()}},
                        {"inner_images",
                         {inner(apply(map, x), apply(map, y)).real(),
                          inner(apply(map, x), apply(map, y)).imag()}}};
    } else {
      out["witness"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return agree ? kExitOk : kExitDisagreement;
  } catch (const Error& e) {
    std::cerr << "check: " << e.what() << "\n";
    return error_code_for(e);
  }
}

int cmd_corrector(const std::string& input, const std::string& out_path,
                  double tol, std::uint64_t seed) {
  try {
    const RealLinearMap map = load_map(input);
    const OPDecision decision = is_orthogonality_preserving(map, tol);
    if (!decision.certificate) {
      std::cerr << "corrector: input map does not preserve orthogonality\n";
      return kExitPrecondition;
    }
    const RealLinearMap corrector = build_corrector(map, tol);
    const RealLinearMap isometry =
        scale(1.0 / decision.certificate->gamma, map);
    const RealLinearMap composed = compose(corrector, isometry);

    Rng rng(seed);
    double linearity = 0.0, isometry_defect = 0.0;
    const int verification_samples = 1000;
    for (int rep = 0; rep < verification_samples; ++rep) {
      ComplexVec x = rng.gaussian_vec(map.dim_h());
      if (norm(x) < 1e-6) continue;
      linearity = std::max(
          linearity,
          norm(apply(composed, times_i(x)) - times_i(apply(composed, x))) /
              norm(x));
      isometry_defect =
          std::max(isometry_defect,
                   std::abs(norm(apply(composed, x)) - norm(x)) / norm(x));
    }

    json out_json = map_to_json(corrector);
    out_json["verification"] = {
        {"complex_linearity_residual", linearity},
        {"isometry_residual", isometry_defect},
        {"samples", verification_samples},
        {"composition_preserves_orthogonality",
         sampling_oracle(composed, 2000, seed, tol)}};
    {
      std::ofstream out(out_path);
      if (!out) throw FormatError("cannot open " + out_path + " for writing");
      out << out_json.dump(2) << "\n";
    }

    const json report = {{"version", kVersion},
                         {"command", "corrector"},
                         {"parameters",
                          {{"input", input},
                           {"out", out_path},
                           {"tol", tol},
                           {"seed", seed}}},
                         {"gamma", decision.certificate->gamma},
                         {"s", decision.certificate->s},
                         {"verification", out_json["verification"]}};
    std::cout << report.dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "corrector: " << e.what() << "\n";
    return error_code_for(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification toolkit for real-linear orthogonality "
               "preservers between complex inner product spaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;

  auto* classify = app.add_subcommand(
      "classify", "Classify a map file (or every .json file in a directory)");
  std::string classify_input;
  bool want_json = false, want_text = false;
  classify->add_option("--input", classify_input, "Map file or directory")
      ->required();
  classify->add_option("--tol", tol, "Decision tolerance");
  classify->add_option("--seed", seed, "Seed for the randomized criterion");
  auto* json_flag = classify->add_flag("--json", want_json, "JSON output (default)");
  classify->add_flag("--text", want_text, "Plain text output")->excludes(json_flag);

  auto* synth = app.add_subcommand(
      "synth", "Synthesize a canonical orthogonality-preserving isometry");
  std::size_t dim_h = 2, dim_k = 4;
  double s_param = 0.0;
  std::vector<int> sigma;
  std::string out_path;
  synth->add_option("--dim-h", dim_h, "Domain dimension (>= 2)")->required();
  synth->add_option("--dim-k", dim_k, "Codomain dimension")->required();
  synth->add_option("--s", s_param, "Mixing parameter in [-1, 1]")->required();
  synth->add_option("--sigma", sigma, "Signs +/-1, one per domain direction");
  synth->add_option("--seed", seed, "Seed for the random orthonormal systems");
  synth->add_option("--out", out_path, "Output map file")->required();

  auto* check = app.add_subcommand(
      "check", "Compare the decision procedure against the sampling oracle");
  std::string check_input;
  check->add_option("--input", check_input, "Map file")->required();
  check->add_option("--samples", samples, "Number of orthogonal pairs");
  check->add_option("--seed", seed, "Sampling seed");
  check->add_option("--tol", tol, "Orthogonality tolerance");

  auto* corrector = app.add_subcommand(
      "corrector", "Build the map R making R o T complex-linear");
  std::string corr_input, corr_out;
  corrector->add_option("--input", corr_input, "Map file (must preserve)")
      ->required();
  corrector->add_option("--out", corr_out, "Output file for R")->required();
  corrector->add_option("--tol", tol, "Decision tolerance");
  corrector->add_option("--seed", seed, "Verification seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (classify->parsed())
    return cmd_classify(classify_input, tol, seed, want_text);
  if (synth->parsed())
    return cmd_synth(dim_h, dim_k, s_param, std::move(sigma), seed, out_path);
  if (check->parsed()) return cmd_check(check_input, samples, seed, tol);
  if (corrector->parsed()) return cmd_corrector(corr_input, corr_out, tol, seed);
  return kExitUsage;
}
