// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tpline/tpline.h"

namespace fs = std::filesystem;

namespace {

struct ReportDeleter {
  void operator()(tpl_report* r) const { tpl_report_free(r); }
};
using Report = std::unique_ptr<tpl_report, ReportDeleter>;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

// Writes the report when one was produced and returns the exit code.
int finish(tpl_status status, tpl_report* raw, const std::string& output, tpl_format format) {
  Report report(raw);
  const std::string rendered = tpl_report_render(report.get(), format);
  if (!rendered.empty() && !write_output(output, rendered)) {
    std::cerr << "error: cannot write " << output << "\n";
    return TPL_ERR_INPUT;
  }
  const std::string message = tpl_report_message(report.get());
  if (status != TPL_OK && !message.empty()) std::cerr << message << "\n";
  return static_cast<int>(status);
}

int with_input(const std::string& input, const std::string& output, tpl_format format,
               tpl_status (*call)(const char*, tpl_report**)) {
  std::string text;
  if (!read_file(input, text)) {
    std::cerr << "input error: cannot read " << input << "\n";
    return TPL_ERR_INPUT;
  }
  tpl_report* report = nullptr;
  const tpl_status status = call(text.c_str(), &report);
  return finish(status, report, output, format);
}

int solve_batch(const std::string& dir, const std::string& out_dir, tpl_format format,
                unsigned jobs) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "input error: " << dir << " is not a directory\n";
    return TPL_ERR_INPUT;
  }
  const fs::path target = out_dir.empty() ? fs::path(dir) : fs::path(out_dir);
  fs::create_directories(target, ec);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        entry.path().stem().extension() != ".sol")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  const char* suffix = format == TPL_FORMAT_TEXT ? ".sol.txt" : ".sol.json";
  auto solve_one = [&](const fs::path& file) {
    const fs::path out = target / (file.stem().string() + suffix);
    const int code = with_input(file.string(), out.string(), format, tpl_solve);
    if (code != 0) std::cerr << "  (" << file.filename().string() << ")\n";
    return code;
  };

  int worst = 0;
  std::size_t next = 0;
  jobs = std::max(1u, jobs);
  while (next < files.size()) {
    std::vector<std::future<int>> running;
    for (unsigned j = 0; j < jobs && next < files.size(); ++j, ++next)
      running.push_back(std::async(std::launch::async, solve_one, files[next]));
    for (auto& f : running) worst = std::max(worst, f.get());
  }
  std::cout << "solved " << files.size() << " file(s) into " << target.string() << "\n";
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transversal lines to four lines in RP^3 for totally positive configurations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tpl_version()));

  std::string format_name;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string input, output, batch, ts_text = "1/10,3/10,5/10,7/10", epsilon = "auto", curve_path;
  std::uint64_t seed = 0;
  std::uint32_t spots = 10, bound = 9;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  int k = 1, n = 3;

  auto* check = app.add_subcommand("check-tp", "Check the total positivity hypothesis");
  check->add_option("--input", input, "Configuration or {\"X\": matrix} JSON")->required();
  check->add_option("--output", output, "Report path (stdout when omitted)");

  auto* factor = app.add_subcommand("factor", "Loewner-Whitney parameters of a TP matrix");
  factor->add_option("--input", input, "{\"X\": matrix} JSON")->required();
  factor->add_option("--output", output, "Report path");

  auto* solve = app.add_subcommand("solve", "Solve for the two transversal lines");
  auto* solve_in = solve->add_option("--input", input, "Configuration JSON");
  auto* solve_batch_opt = solve->add_option("--batch", batch, "Directory of configuration files");
  solve_in->excludes(solve_batch_opt);
  solve->add_option("--output", output, "Solution path, or output directory with --batch");
  solve->add_option("--jobs", jobs, "Concurrent files in batch mode");

  auto* verify = app.add_subcommand("verify-identity", "Certify the discriminant identity");
  verify->add_option("--spots", spots, "Random spot evaluations");
  verify->add_option("--seed", seed, "Seed for spot points");
  verify->add_option("--output", output, "Certificate path");

  auto* sample = app.add_subcommand("curve-sample", "Epsilon sampling of four tangent lines");
  sample->add_option("--ts", ts_text, "Four rationals t1,t3,t5,t7");
  sample->add_option("--epsilon", epsilon, "\"auto\" or a positive rational");
  sample->add_option("--curve", curve_path, "Curve JSON (rational normal curve when omitted)");
  sample->add_option("--output", output, "Report path");

  auto* schubert = app.add_subcommand("schubert-count", "Degree of the Grassmannian");
  schubert->add_option("--k", k, "Subspace dimension")->required();
  schubert->add_option("--n", n, "Ambient projective dimension")->required();

  auto* random = app.add_subcommand("random-instance", "Random totally positive configuration");
  random->add_option("--seed", seed, "Generator seed");
  random->add_option("--bound", bound, "Numerator/denominator bound")->check(CLI::PositiveNumber);
  random->add_option("--output", output, "Instance path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return TPL_ERR_INPUT;
  }

  // schubert-count prints a bare integer unless JSON is requested.
  const bool default_text = schubert->parsed();
  const tpl_format format = format_name.empty()
                                ? (default_text ? TPL_FORMAT_TEXT : TPL_FORMAT_JSON)
                                : (format_name == "text" ? TPL_FORMAT_TEXT : TPL_FORMAT_JSON);

  tpl_report* report = nullptr;
  if (check->parsed()) return with_input(input, output, format, tpl_check_tp);
  if (factor->parsed()) return with_input(input, output, format, tpl_factor);
  if (solve->parsed()) {
    if (!batch.empty()) return solve_batch(batch, output, format, jobs);
    if (input.empty()) {
      std::cerr << "input error: solve needs --input or --batch\n";
      return TPL_ERR_INPUT;
    }
    return with_input(input, output, format, tpl_solve);
  }
  if (verify->parsed()) {
    const tpl_status status = tpl_verify_identity(spots, seed, &report);
    return finish(status, report, output, format);
  }
  if (sample->parsed()) {
    std::string curve;
    if (!curve_path.empty() && !read_file(curve_path, curve)) {
      std::cerr << "input error: cannot read " << curve_path << "\n";
      return TPL_ERR_INPUT;
    }
    const tpl_status status = tpl_curve_sample(curve_path.empty() ? nullptr : curve.c_str(),
                                               ts_text.c_str(), epsilon.c_str(), &report);
    return finish(status, report, output, format);
  }
  if (schubert->parsed()) {
    const tpl_status status = tpl_schubert_count(k, n, &report);
    return finish(status, report, output, format);
  }
  if (random->parsed()) {
    const tpl_status status = tpl_random_instance(seed, bound, &report);
    return finish(status, report, output, format);
  }
  return TPL_ERR_INPUT;
}
