#include "vir/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

// Labels may be written "m,n" or as two separate integers "m n".
std::vector<std::string> normalize_labels(const std::vector<std::string>& tokens) {
  bool any_comma = false;
  for (const auto& t : tokens) any_comma = any_comma || t.find(',') != std::string::npos;
  if (any_comma || tokens.size() % 2 != 0) return tokens;
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < tokens.size(); i += 2) out.push_back(tokens[i] + "," + tokens[i + 1]);
  return out;
}

int emit(const vir::JobConfig& job) {
  const auto out = vir::run_job(job);
  if (job.format == vir::OutputFormat::Json)
    std::cout << vir::document("vir." + job.command, out.data).dump(2) << '\n';
  else
    std::cout << out.text;
  return out.verification_failed ? vir::kExitVerificationFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-model Virasoro toolkit: Kac data, fusion, singular vectors, BPZ equations, blocks and crossing checks"};
  app.require_subcommand(1);
  app.fallthrough();

  vir::JobConfig job;
  std::string format = "text";
  std::string cache_dir;
  std::vector<std::string> tokens;
  std::string channel;
  std::string config_path;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cache_dir, "Directory for cached Gram matrices (overrides $VIR_CACHE_DIR)");

  auto model_args = [&](CLI::App* sub) {
    sub->add_option("p", job.p, "First model parameter")->required();
    sub->add_option("q", job.q, "Second model parameter")->required();
  };
  auto label_args = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("labels", tokens, help);
  };

  auto* kac = app.add_subcommand("kac-table", "Canonical Kac labels with exact weights");
  model_args(kac);
  auto* fusion = app.add_subcommand("fusion-table", "All fusion products among canonical labels");
  model_args(fusion);
  auto* fuse = app.add_subcommand("fuse", "Fusion product of two labels");
  model_args(fuse);
  label_args(fuse, "Two labels as m,n");
  auto* singular = app.add_subcommand("singular", "Primitive singular vectors of a Verma module");
  model_args(singular);
  label_args(singular, "Label as m,n or m n");
  singular->add_option("--max-level", job.max_level, "Highest level searched");
  auto* gram = app.add_subcommand("gram", "Gram matrix and determinant at one level");
  model_args(gram);
  label_args(gram, "Label as m,n or m n");
  gram->add_option("--level", job.level, "Level");
  auto* bpz = app.add_subcommand("bpz", "Reduced BPZ equation for <w4| w1(z1) w2(z2) |w3>");
  model_args(bpz);
  label_args(bpz, "Labels w4 w1 w2 w3 as m,n");
  auto* block = app.add_subcommand("block", "Evaluate one conformal block");
  model_args(block);
  label_args(block, "Labels w4 w1 w2 w3 as m,n");
  block->add_option("--channel", channel, "Intermediate label m,n")->required();
  block->add_option("--z", job.z, "Evaluation points in (0,1)")->required();
  block->add_option("--order", job.order, "Series order (default 50)");
  auto* crossing = app.add_subcommand("crossing", "Fusing matrix with associativity, commutativity and monodromy residuals");
  model_args(crossing);
  label_args(crossing, "Labels w4 w1 w2 w3 as m,n");
  crossing->add_option("--order", job.order, "Series order (default 200)");
  crossing->add_option("--z1", job.z1_grid, "Grid of z1 values");
  crossing->add_option("--ratio", job.ratio_grid, "Grid of z2/z1 values");
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite, or all of them");
  verify->add_option("suite", job.suite, "Suite name or 'all'")->required();
  auto* run = app.add_subcommand("run", "Execute a job described by a JSON file");
  run->add_option("config", config_path, "Path to the job file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return vir::exit_code(vir::ErrorKind::Parse);
  }

  try {
    if (run->parsed()) {
      std::ifstream in(config_path);
      if (!in) vir::fail(vir::ErrorKind::Parse, "cannot read job file " + config_path);
      vir::Json parsed;
      try {
        parsed = vir::Json::parse(in);
      } catch (const std::exception& e) {
        vir::fail(vir::ErrorKind::Parse, std::string("job file is not valid JSON: ") + e.what());
      }
      auto from_file = vir::job_from_json(parsed);
      if (format == "json") from_file.format = vir::OutputFormat::Json;
      if (!cache_dir.empty()) from_file.cache_dir = cache_dir;
      return emit(from_file);
    }
    job.command = app.get_subcommands().front()->get_name();
    job.labels = normalize_labels(tokens);
    if (!channel.empty()) job.channel = channel;
    if (!cache_dir.empty()) job.cache_dir = cache_dir;
    job.format = format == "json" ? vir::OutputFormat::Json : vir::OutputFormat::Text;
    return emit(job);
  } catch (const vir::Error& e) {
    std::cerr << "error (" << vir::to_string(e.kind()) << "): " << e.what() << '\n';
    return vir::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error (internal): " << e.what() << '\n';
    return vir::exit_code(vir::ErrorKind::Internal);
  }
}
