// End-to-end tests driving the installed command-line binary. The test
// runner exports WDDT_CLI with the path to the freshly built executable.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "wddt/multiplex.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "wddt_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("WDDT_CLI");
  REQUIRE_MESSAGE(cli != nullptr,
                  "WDDT_CLI must point at the command-line binary");
  const fs::path out_file = work_dir() / "stdout.txt";
  const fs::path err_file = work_dir() / "stderr.txt";
  const std::string cmd = std::string(cli) + " " + args + " > " +
                          out_file.string() + " 2> " + err_file.string();
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

const std::string kTwinTriangles =
    "a b 1\nb c 1\na c 1\na b 2\nb c 2\na c 2\n";

}  // namespace

TEST_CASE("cli: help and argument errors") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--help").out.find("gen") != std::string::npos);
  CHECK(run_cli("").exit_code == 2);             // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 2);   // unknown subcommand
  CHECK(run_cli("test --bogus 1").exit_code == 2);
}

TEST_CASE("cli gen: writes a round-trippable edge list and densities") {
  const fs::path file = work_dir() / "gen.edges";
  const RunResult r = run_cli(
      "gen --n 300 --tau 0.3,0.2 --family two-block --r 2 --lambda 0.8,0.8 "
      "--seed 7 --out " +
      file.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("layer1 density = 0.") != std::string::npos);
  CHECK(r.out.find("layer2 density = 0.") != std::string::npos);

  std::ifstream in(file);
  const wddt::MultiplexDataset ds = wddt::parse_multiplex_edgelist(in);
  CHECK(ds.graph.num_nodes() == 300);
  CHECK(ds.graph.num_layers() == 2);
  CHECK(ds.warnings.empty());

  // Same flags, same seed: byte-identical output.
  const fs::path file2 = work_dir() / "gen2.edges";
  run_cli(
      "gen --n 300 --tau 0.3,0.2 --family two-block --r 2 --lambda 0.8,0.8 "
      "--seed 7 --out " +
      file2.string());
  CHECK(slurp(file) == slurp(file2));

  // A different seed moves at least one edge.
  const fs::path file3 = work_dir() / "gen3.edges";
  run_cli(
      "gen --n 300 --tau 0.3,0.2 --family two-block --r 2 --lambda 0.8,0.8 "
      "--seed 8 --out " +
      file3.string());
  CHECK(slurp(file) != slurp(file3));
}

TEST_CASE("cli gen: invalid configurations exit 2") {
  const fs::path file = work_dir() / "bad.edges";
  const RunResult mismatch = run_cli(
      "gen --n 300 --tau 0.3,0.2 --family two-block --r 2 --lambda 0.8 "
      "--out " +
      file.string());
  CHECK(mismatch.exit_code == 2);
  CHECK(mismatch.err.find("length mismatch") != std::string::npos);

  const RunResult family = run_cli(
      "gen --n 10 --tau 0.3,0.2 --family banana --out " + file.string());
  CHECK(family.exit_code == 2);
  CHECK(family.err.find("unknown family") != std::string::npos);

  CHECK(run_cli("gen --n 10 --tau 0.3,0.2 --family power-law --beta 1,2")
            .exit_code == 2);  // --out is required
}

TEST_CASE("cli test: reports the statistic of a duplicated layer") {
  const fs::path file = work_dir() / "twins.edges";
  write(file, kTwinTriangles);
  const RunResult r = run_cli("test --input " + file.string());
  REQUIRE(r.exit_code == 0);
  // Identical layers: D = -6/sqrt(12) = -1.732, p = 0.083.
  CHECK(r.out.find("statistic = -1.732\n") != std::string::npos);
  CHECK(r.out.find("p_value = 0.083\n") != std::string::npos);
  CHECK(r.out.find("decision = Not Reject H0\n") != std::string::npos);

  // Selecting one layer is a configuration error.
  const RunResult single =
      run_cli("test --input " + file.string() + " --layers 1");
  CHECK(single.exit_code == 2);
  CHECK(single.err.find("need at least two layers") != std::string::npos);

  // Unreadable input is a configuration error.
  CHECK(run_cli("test --input " + (work_dir() / "missing.edges").string())
            .exit_code == 2);
}

TEST_CASE("cli test: degenerate layers exit 3") {
  const fs::path file = work_dir() / "degenerate.edges";
  write(file, "a b 1\nc d 1\na b 2\nb c 2\na c 2\n");
  const RunResult r = run_cli("test --input " + file.string());
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("cli test: node roster and layer map files") {
  const fs::path edges = work_dir() / "raw.edges";
  write(edges, kTwinTriangles);
  const fs::path roster = work_dir() / "roster.txt";
  write(roster, "ghost\na\nb\nc\n");
  const fs::path map = work_dir() / "map.txt";
  write(map, "1 lunch\n2 facebook\n");

  // The isolated roster node changes nothing for identical layers, and
  // the mapped names select the same two layers.
  const RunResult r = run_cli("test --input " + edges.string() +
                              " --node-roster " + roster.string() +
                              " --layer-map " + map.string() +
                              " --layers lunch,facebook");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("statistic = -1.732\n") != std::string::npos);

  const RunResult unknown = run_cli("test --input " + edges.string() +
                                    " --layer-map " + map.string() +
                                    " --layers lunch,dinner");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("unknown layer 'dinner'") != std::string::npos);
}

TEST_CASE("cli subsets: table to stdout, fixed-schema CSV to --out") {
  const fs::path file = work_dir() / "three.edges";
  write(file,
        "#nodes: a b c d e f\n"
        "#layers: x y z\n"
        "a b x\nb c x\na c x\nc d x\n"
        "a b y\na c y\na d y\nb d y\n"
        "e f z\n");
  const fs::path csv = work_dir() / "subsets.csv";
  const RunResult r = run_cli("subsets --input " + file.string() +
                              " --min 2 --max 3 --out " + csv.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("layers", 0) == 0);
  CHECK(r.out.find("x|y|z") != std::string::npos);

  const std::string report = slurp(csv);
  CHECK(report.rfind("layers,statistic,p_value,decision\n", 0) == 0);
  std::size_t rows = 0;
  for (const char ch : report) rows += ch == '\n' ? 1 : 0;
  CHECK(rows == 5);  // header + C(3,2) + C(3,3)
  CHECK(report.find("x|z,nan,nan,Degenerate") != std::string::npos);

  CHECK(run_cli("subsets --input " + file.string() + " --min 3 --max 2")
            .exit_code == 2);
}

TEST_CASE("cli simulate: inline cell") {
  const fs::path csv = work_dir() / "sim.csv";
  const RunResult r = run_cli(
      "simulate --n 50 --tau 0.3,0.2 --family two-block --r 2 "
      "--lambda 0.8,0.7 --reps 5 --seed 3 --out " +
      csv.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("[cell] n=50 L=2 family=two-block rejection_rate=") !=
        std::string::npos);
  CHECK(r.err.find("[1/1] cell") != std::string::npos);
  CHECK(slurp(csv).rfind(
            "n,L,family,parameters,rejection_rate,degenerate_count,reps,"
            "seed,error\n",
            0) == 0);

  // One replication: the rate is exactly zero or one.
  const RunResult once = run_cli(
      "simulate --n 50 --tau 0.3,0.2 --family two-block --r 2 "
      "--lambda 0.8,0.5 --reps 1 --seed 2");
  REQUIRE(once.exit_code == 0);
  const bool zero = once.out.find("rejection_rate=0.000") != std::string::npos;
  const bool one = once.out.find("rejection_rate=1.000") != std::string::npos;
  CHECK((zero || one));

  // Identical invocations give identical CSV bytes.
  const fs::path csv2 = work_dir() / "sim2.csv";
  run_cli(
      "simulate --n 50 --tau 0.3,0.2 --family two-block --r 2 "
      "--lambda 0.8,0.7 --reps 5 --seed 3 --out " +
      csv2.string());
  CHECK(slurp(csv) == slurp(csv2));

  // Inline cells are validated before anything runs.
  const RunResult bad = run_cli(
      "simulate --n 50 --tau 0.3,0.2 --family two-block --r 2 --lambda 0.8");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("length mismatch") != std::string::npos);
  CHECK(run_cli("simulate").exit_code == 2);
}

TEST_CASE("cli simulate: grid files") {
  const fs::path grid = work_dir() / "grid.ini";
  write(grid,
        "[tiny]\n"
        "n = 40\n"
        "tau = 0.3, 0.2\n"
        "family = two-block\n"
        "r = 2\n"
        "lambda = 0.8, 0.6\n"
        "reps = 4\n"
        "seed = 5\n"
        "\n"
        "[flat]\n"
        "n = 30\n"
        "tau = 0.3, 0.2\n"
        "family = power-law\n"
        "beta = 1, 1\n"
        "reps = 3\n");
  const fs::path csv = work_dir() / "grid.csv";
  const RunResult r = run_cli("simulate --grid-file " + grid.string() +
                              " --out " + csv.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.err.find("[1/2] tiny") != std::string::npos);
  CHECK(r.err.find("[2/2] flat") != std::string::npos);
  CHECK(r.out.find("[tiny]") != std::string::npos);
  CHECK(r.out.find("[flat]") != std::string::npos);
  std::size_t rows = 0;
  for (const char ch : slurp(csv)) rows += ch == '\n' ? 1 : 0;
  CHECK(rows == 3);

  // Parse failures exit 2 and carry a line number.
  const fs::path broken = work_dir() / "broken.ini";
  write(broken, "[x]\nn = 40\nwild = 1\n");
  const RunResult bad = run_cli("simulate --grid-file " + broken.string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("line 3: unknown key 'wild'") != std::string::npos);

  // Grid files and inline cells are mutually exclusive.
  CHECK(run_cli("simulate --grid-file " + grid.string() + " --n 40")
            .exit_code == 2);
}
