#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "birkhoff/cli.hpp"

using namespace birkhoff;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = BIRKHOFF_CORPUS_DIR;

struct Run {
  std::string out;
  int exit_code;
};

/// Runs the installed binary through the shell and captures stdout.
Run run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" + std::string(BIRKHOFF_CLI) + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string corpus_file(const std::string& name) { return (kCorpus / name).string(); }

/// A scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("birkhoff_cli_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST(RunJob, HomologyOfSl2) {
  auto out = cli::run({"homology", "lie-vect", {corpus_file("sl2.json")}});
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.report["status"], "pass");
  EXPECT_EQ(out.report["results"]["h2"], 0);
  EXPECT_EQ(out.report["schema_version"], cli::kSchemaVersion);
}

TEST(RunJob, InputErrorsExitWithTwo) {
  auto bad = cli::run({"check", "group-ab", {corpus_file("bad_group.json")}});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_EQ(bad.report["status"], "error");
  EXPECT_EQ(bad.report["error"]["kind"], "NotLatinSquare");

  auto missing = cli::run({"check", "group-ab", {"/nonexistent/x.json"}});
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_EQ(missing.report["error"]["kind"], "ParseError");

  auto wrong = cli::run({"homology", "group-ab", {corpus_file("s3.json")}});
  EXPECT_EQ(wrong.exit_code, 2);
}

TEST(RunJob, ClassifyReportShape) {
  auto out = cli::run({"classify", "group-ab", {corpus_file("s3_c2.json")}});
  ASSERT_EQ(out.exit_code, 0) << out.report.dump(2);
  for (const char* key : {"central", "trivial", "normal"}) EXPECT_TRUE(out.report["results"][key].is_boolean()) << key;
  EXPECT_FALSE(out.report["results"]["central"].get<bool>());
  for (const auto& c : out.report["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c["status"] == "pass" || c["status"] == "skip") << c.dump();
  }
}

TEST(Selftest, BundledCorpusPasses) {
  auto out = cli::selftest(kCorpus);
  EXPECT_EQ(out.exit_code, 0) << out.report.dump(2);
  EXPECT_GE(out.report["results"]["cases"].get<int>(), 10);
}

TEST(Selftest, EmptyDirectoryHasNoChecks) {
  TempDir dir("empty");
  auto out = cli::selftest(dir.path);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.report["results"]["cases"], 0);
  EXPECT_TRUE(out.report["checks"].empty());
}

TEST(Selftest, CorruptedGoldenFailsTheNamedCheck) {
  TempDir dir("corrupt");
  for (const auto& e : fs::directory_iterator(kCorpus)) fs::copy_file(e.path(), dir.path / e.path().filename());
  auto path = dir.path / "sl2_homology.case.json";
  json c = json::parse(std::ifstream(path));
  c["expect"]["/results/h2"] = 5;
  std::ofstream(path) << c.dump();

  auto out = cli::selftest(dir.path);
  EXPECT_EQ(out.exit_code, 1);
  int failed = 0;
  for (const auto& check : out.report["checks"])
    if (check["status"] == "fail") {
      ++failed;
      EXPECT_EQ(check["name"], "sl2_homology");
      EXPECT_EQ(check["witness"]["pointer"], "/results/h2");
    }
  EXPECT_EQ(failed, 1);
}

TEST(Binary, OutputIsDeterministic) {
  for (const std::string& args : {"homology --variety lie-vect " + corpus_file("sl2.json"),
                                 "classify --variety group-ab " + corpus_file("s3_c2.json"),
                                 "check --variety pxm-xmod " + corpus_file("s3triv.json")}) {
    auto a = run_cli(args), b = run_cli(args);
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(a.exit_code, b.exit_code);
  }
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_cli("homology --variety lie-vect " + corpus_file("sl2.json")).exit_code, 0);
  EXPECT_EQ(run_cli("check --variety group-ab " + corpus_file("bad_group.json")).exit_code, 2);
  EXPECT_EQ(run_cli("homology --variety nonsense " + corpus_file("sl2.json")).exit_code, 2);
  EXPECT_EQ(run_cli("no-such-command").exit_code, 2);

  TempDir dir("exit");
  fs::copy_file(kCorpus / "sl2.json", dir.path / "sl2.json");
  json c = json::parse(std::ifstream(kCorpus / "sl2_homology.case.json"));
  c["expect"]["/results/h2"] = 1;
  std::ofstream(dir.path / "sl2_homology.case.json") << c.dump();
  EXPECT_EQ(run_cli("selftest", "BIRKHOFF_CORPUS=" + dir.path.string()).exit_code, 1);
}

TEST(Binary, SelftestOnEmptyCorpus) {
  TempDir dir("env");
  auto r = run_cli("selftest", "BIRKHOFF_CORPUS=" + dir.path.string());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out)["results"]["cases"], 0);
}

TEST(Binary, OutFileAndPrettyRendering) {
  TempDir dir("out");
  auto target = dir.path / "report.json";
  auto r = run_cli("homology --variety lie-vect --out " + target.string() + " " + corpus_file("sl2.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  json written = json::parse(std::ifstream(target));
  EXPECT_EQ(written["results"]["h2"], 0);

  auto pretty = run_cli("homology --pretty --variety lie-vect " + corpus_file("sl2.json"));
  EXPECT_EQ(pretty.exit_code, 0);
  EXPECT_EQ(pretty.out, cli::render_pretty(written));
}
