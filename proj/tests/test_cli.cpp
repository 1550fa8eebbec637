#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "voxtopo/cli.hpp"
#include "voxtopo/io.hpp"
#include "voxtopo/shapes.hpp"

using namespace voxtopo;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "voxtopo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("voxtopo_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("help output matches golden files") {
  for (const std::string sub : {"", "info", "components", "repair", "analyze", "mesh", "gen"}) {
    std::vector<std::string> args;
    if (!sub.empty()) args.push_back(sub);
    args.push_back("--help");
    const auto r = run(args);
    CHECK(r.code == 0);
    const std::string golden =
        std::string(VOXTOPO_GOLDEN_DIR) + "/help" + (sub.empty() ? "" : "_" + sub) + ".txt";
    if (std::getenv("VOXTOPO_UPDATE_GOLDEN")) write_file(golden, r.out);
    CHECK_MESSAGE(r.out == slurp(golden), "golden mismatch for '" << sub << "'");
  }
}

TEST_CASE("help lists every flag") {
  std::string all;
  for (const std::string sub : {"info", "components", "repair", "analyze", "mesh", "gen"}) {
    all += run({sub, "--help"}).out;
  }
  for (const char* flag : {"--format", "--budget", "--report", "--output", "--seed",
                           "--adjacency", "--shape"}) {
    CHECK_MESSAGE(all.find(flag) != std::string::npos, flag);
  }
}

TEST_CASE("gen then analyze a ring") {
  TempDir dir;
  const auto ring = dir / "ring.voxlist";
  auto g = run({"gen", "--shape", "ring", "--out", ring});
  REQUIRE(g.code == 0);
  CHECK(load_volume(ring, VolumeFormat::voxlist) == generate_shape(Ring{}));

  const auto a = run({"analyze", ring});
  REQUIRE(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["status"] == "ok");
  CHECK(j["components"][0]["surfaces"][0]["genus"] == 1);
  CHECK(j["input"]["path"] == ring);
  CHECK(j["input"]["format"] == "voxlist");

  const auto t = run({"analyze", ring, "--report", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("genus 1") != std::string::npos);

  // Same result through dvol.
  const auto dv = dir / "ring.dvol";
  REQUIRE(run({"gen", "--shape", "ring", "-o", dv}).code == 0);
  const auto ad = run({"analyze", dv});
  CHECK(nlohmann::json::parse(ad.out)["components"] == j["components"]);
  CHECK(run({"analyze", dv, "--format", "dvol"}).code == 0);
}

TEST_CASE("zero budget on a corner pair aborts with exit 2") {
  TempDir dir;
  const auto f = dir / "corner_pair.voxlist";
  write_file(f, "0 0 0\n1 1 1\n");
  const auto r = run({"analyze", f, "--budget", "0"});
  CHECK(r.code == kExitPipeline);
  CHECK(nlohmann::json::parse(r.out)["status"] == "repair_aborted");
  CHECK(r.err.find("repair_aborted") != std::string::npos);

  // The default budget rounds up and repairs it.
  const auto d = run({"analyze", f});
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["repair"]["deletions"] == 1);
  CHECK(run({"analyze", f, "--budget", "unlimited"}).code == 0);
}

TEST_CASE("usage and I/O errors map to exit codes") {
  TempDir dir;
  const auto f = dir / "cube.voxlist";
  write_file(f, "0 0 0\n");
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"analyze"}).code == kExitUsage);
  CHECK(run({"analyze", f, "--report", "xml"}).code == kExitUsage);
  CHECK(run({"analyze", f, "--budget", "-3"}).code == kExitUsage);
  CHECK(run({"analyze", f, "--format", "nrrd"}).code == kExitUsage);
  CHECK(run({"analyze", f, "--adjacency", "18"}).code == kExitUsage);
  CHECK(run({"gen", "--shape", "blob"}).code == kExitUsage);
  CHECK(run({"gen", "--shape", "cuboid:0,1,1"}).code == kExitUsage);
  // Flags are validated before the (missing) input is touched.
  CHECK(run({"analyze", dir / "missing.voxlist", "--report", "xml"}).code == kExitUsage);

  const auto missing = run({"analyze", dir / "missing.voxlist"});
  CHECK(missing.code == kExitIo);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  const auto bad = dir / "bad.voxlist";
  write_file(bad, "0 0 zero\n");
  CHECK(run({"info", bad}).code == kExitIo);
  write_file(bad, "# only a comment\n");
  CHECK(run({"analyze", bad}).code == kExitIo);
  CHECK(run({"gen", "--shape", "ring", "-o", "/nonexistent-dir/x.voxlist"}).code == kExitIo);
}

TEST_CASE("info, components, repair and mesh") {
  TempDir dir;
  const auto shell = dir / "shell.dvol";
  REQUIRE(run({"gen", "--shape", "shell", "-o", shell}).code == 0);

  const auto info = run({"info", shell});
  REQUIRE(info.code == 0);
  auto j = nlohmann::json::parse(info.out);
  CHECK(j["voxels"] == 124);
  CHECK(j["well_composed"] == true);
  CHECK(j["format"] == "dvol");
  CHECK(j["boundary_voxels"] == 124);  // every wall voxel touches the exterior or the cavity
  CHECK(run({"info", shell, "--report", "text"}).out.find("voxels: 124") != std::string::npos);

  const auto comps = run({"components", shell});
  REQUIRE(comps.code == 0);
  j = nlohmann::json::parse(comps.out);
  CHECK(j["count"] == 1);
  CHECK(j["cavities"] == 1);

  const auto pair = dir / "pair.voxlist";
  write_file(pair, "0 0 0\n1 1 1\n");
  CHECK(nlohmann::json::parse(run({"components", pair, "--adjacency", "6"}).out)["count"] == 2);
  CHECK(nlohmann::json::parse(run({"components", pair}).out)["count"] == 1);

  const auto fixed = dir / "fixed.voxlist";
  const auto rep = run({"repair", pair, "-o", fixed, "--budget", "5"});
  REQUIRE(rep.code == 0);
  j = nlohmann::json::parse(rep.out);
  CHECK(j["deletions"] == nlohmann::json::parse("[[0,0,0]]"));
  CHECK(j["aborted"] == false);
  CHECK(load_volume(fixed, VolumeFormat::voxlist).count() == 1);

  const auto to_stdout = run({"repair", pair});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out == "1 1 1\n");
  CHECK(nlohmann::json::parse(to_stdout.err)["passes"] == 1);
  CHECK(run({"repair", pair, "--budget", "0", "-o", fixed}).code == kExitPipeline);

  const auto mesh = run({"mesh", shell});
  REQUIRE(mesh.code == 0);
  CHECK(mesh.out.rfind("OFF\n", 0) == 0);
  CHECK(mesh.out.find("\n160 156 0\n") != std::string::npos);
}

TEST_CASE("no subcommand modifies its input") {
  TempDir dir;
  const auto f = dir / "noisy.voxlist";
  write_file(f, "0 0 0\n1 1 1\n2 0 1\n5 5 5\n");
  const auto before = slurp(f);
  const auto stamp = fs::last_write_time(f);
  for (const std::string sub : {"info", "components", "repair", "analyze", "mesh"}) {
    run({sub, f, "--output", dir / ("out_" + sub)});
    CHECK(slurp(f) == before);
    CHECK(fs::last_write_time(f) == stamp);
  }
}

TEST_CASE("thread cap from the environment") {
  TempDir dir;
  const auto f = dir / "ring.voxlist";
  REQUIRE(run({"gen", "--shape", "ring", "-o", f}).code == 0);
  const auto base = run({"analyze", f}).out;
  ::setenv("VOXTOPO_THREADS", "3", 1);
  CHECK(run({"analyze", f}).out == base);
  ::setenv("VOXTOPO_THREADS", "lots", 1);
  CHECK(run({"analyze", f}).code == kExitUsage);
  ::unsetenv("VOXTOPO_THREADS");
}

TEST_CASE("installed binary propagates exit codes") {
  TempDir dir;
  const auto f = dir / "pair.voxlist";
  write_file(f, "0 0 0\n1 1 1\n");
  const std::string cli = VOXTOPO_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  CHECK(status(cli + " analyze " + f) == 0);
  CHECK(status(cli + " analyze " + f + " --budget 0") == 2);
  CHECK(status(cli + " analyze " + dir / "nope.voxlist") == 3);
  CHECK(status(cli + " frobnicate") == 1);
}
