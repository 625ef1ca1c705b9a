#include "vir/job.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sys/wait.h>

using namespace vir;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string command = std::string(VIR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("label parsing and validation") {
    CHECK(parse_label("2,1") == KacLabel{2, 1});
    CHECK_THROWS_AS(parse_label("2;1"), Error);
    CHECK_THROWS_AS(parse_label("2,"), Error);
    JobConfig job;
    job.command = "fuse";
    job.p = 3;
    job.q = 4;
    job.labels = {"2,2"};
    CHECK_THROWS_AS(validate(job), Error);
    job.labels.push_back("2,2");
    CHECK_NOTHROW(validate(job));
    job.command = "frobnicate";
    CHECK_THROWS_AS(validate(job), Error);
  }

  TEST_CASE("job files") {
    const Json j{{"command", "singular"}, {"p", 3}, {"q", 4}, {"labels", {"2,1"}}, {"max_level", 3}};
    const auto job = job_from_json(j);
    CHECK(job.command == "singular");
    CHECK(job.max_level == 3);
    CHECK(job_from_json(to_json(job)).labels == job.labels);
    Json bad = j;
    bad["tolerance"] = 1e-3;
    CHECK_THROWS_AS(job_from_json(bad), Error);
  }

  TEST_CASE("exit codes") {
    CHECK(exit_code(ErrorKind::Parse) == 2);
    CHECK(exit_code(ErrorKind::Range) == 2);
    CHECK(exit_code(ErrorKind::Domain) == 3);
    CHECK(exit_code(ErrorKind::Fusion) == 3);
    CHECK(exit_code(ErrorKind::Conditioning) == 4);
    CHECK(exit_code(ErrorKind::Internal) == 5);
  }

  TEST_CASE("commands") {
    const auto kac = run_cli("kac-table 3 4");
    CHECK(kac.status == 0);
    CHECK(kac.out.find("(1,2)  1/16") != std::string::npos);
    CHECK(kac.out.find("(1,3)  1/2") != std::string::npos);
    CHECK(run_cli("kac-table 2 3 --format json").out.find("\"entries\"") != std::string::npos);
    CHECK(run_cli("kac-table 4 6").status == 2);
    CHECK(run_cli("kac-table 3").status == 2);
    CHECK(run_cli("fuse 3 4 2,2 2,2").out == "(1,1) (1,3)\n");
    const auto sing = run_cli("singular 3 4 2 1 --max-level 4");
    CHECK(sing.status == 0);
    CHECK(sing.out.rfind("level 2: L(-2) - 3/4 L(-1)^2\n", 0) == 0);
    CHECK(run_cli("block 3 4 1,2 1,2 1,2 1,2 --channel 1,1 --z 1.5").status == 3);
    CHECK(run_cli("block 3 4 1,1 1,1 1,1 1,1 --channel 1,2 --z 0.5").status == 3);
    const auto bpz = run_cli("bpz 3 4 1,2 1,2 1,2 1,2 --format json");
    CHECK(bpz.status == 0);
    const auto doc = Json::parse(bpz.out);
    CHECK(doc.at("schema_version") == kSchemaVersion);
    CHECK(doc.at("kind") == "vir.bpz");
  }

  TEST_CASE("verify subcommand") {
    const auto ok = run_cli("verify ising-crossing");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("max residual") != std::string::npos);
    CHECK(run_cli("verify no-such-suite").status == 2);
  }

  TEST_CASE("warm cache gives identical output") {
    std::random_device rd;
    const auto dir = std::filesystem::temp_directory_path() / ("vir-cli-cache-" + std::to_string(rd()));
    const std::string flags = " --format json --cache-dir " + dir.string();
    for (const std::string args : {"singular 4 5 2 2 --max-level 6", "gram 4 5 2 2 --level 5", "verify kac-determinant"}) {
      CAPTURE(args);
      const auto cold = run_cli(args + flags);
      const auto warm = run_cli(args + flags);
      CHECK(cold.status == 0);
      CHECK(!cold.out.empty());
      CHECK(cold.out == warm.out);
    }
    CHECK(!std::filesystem::is_empty(dir));
    std::filesystem::remove_all(dir);
  }
}
