// End-to-end checks of the installed command line: exit-code contract,
// output formats, determinism of JSON reports. Runs the real binary, whose
// path arrives as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "linkobs/complex.hpp"

namespace {

int checks_failed = 0;

#define REQUIRE(cond, msg)                                                        \
  do {                                                                            \
    if (!(cond)) {                                                                \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg << "\n"; \
      ++checks_failed;                                                            \
    }                                                                             \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& cmd) {
  RunResult res;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-linkobs>\n";
    return 1;
  }
  const std::string cli = argv[1];
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "linkobs_cli_tests";
  fs::create_directories(tmp);

  // exit-code contract
  RunResult lemma = run(cli + " verify lemma21 --n 1");
  REQUIRE(lemma.exit_code == 0, "verify lemma21 --n 1 should exit 0");
  REQUIRE(lemma.output.find("rank 17") != std::string::npos, "lemma21 n=1 reports rank 17");
  REQUIRE(lemma.output.find("18 top cells") != std::string::npos, "lemma21 n=1 reports 18 cells");

  REQUIRE(run(cli + " verify thm12 --n 5").exit_code == 2, "out-of-range n exits 2");
  REQUIRE(run(cli + " frobnicate").exit_code == 2, "unknown subcommand exits 2");
  REQUIRE(run(cli + " verify thm99 --n 1").exit_code == 2, "unknown claim exits 2");

  // thm22 with a JSON report
  fs::path report1 = tmp / "thm22_a.json";
  fs::path report2 = tmp / "thm22_b.json";
  RunResult t22 = run(cli + " verify thm22 --n 2 --trials 20 --seed 7 --json " + report1.string());
  REQUIRE(t22.exit_code == 0, "verify thm22 exits 0");
  auto record = nlohmann::ordered_json::parse(slurp(report1.string()));
  REQUIRE(record["claim"] == "thm22", "report claim field");
  REQUIRE(record["evidence"]["parities"].size() == 20, "20 recorded parities");
  for (const auto& p : record["evidence"]["parities"])
    REQUIRE(p.get<int>() == 1, "every parity odd");

  // determinism: replay and byte-compare without the timestamp
  run(cli + " verify thm22 --n 2 --trials 20 --seed 7 --json " + report2.string());
  auto replay = nlohmann::ordered_json::parse(slurp(report2.string()));
  record.erase("timestamp");
  replay.erase("timestamp");
  REQUIRE(record.dump(2) == replay.dump(2), "replayed report is byte-identical sans timestamp");

  // build output parses back with the expected face counts
  RunResult built = run(cli + " build m --n 2");
  REQUIRE(built.exit_code == 0, "build m exits 0");
  linkobs::Complex M2 = linkobs::complex_from_text(built.output);
  REQUIRE(M2.count_of_dim(0) == 8, "M2 has 8 vertices");
  REQUIRE(M2.count_of_dim(1) == 25, "M2 has 25 edges");
  REQUIRE(M2.count_of_dim(2) == 20, "M2 has 20 triangles");

  RunResult sigma = run(cli + " build sigma --m 5 --k 1");
  REQUIRE(sigma.exit_code == 0, "build sigma exits 0");
  REQUIRE(linkobs::complex_from_text(sigma.output).count_of_dim(1) == 15, "K6 has 15 edges");

  // embed + lk round trip on the n = 1 certificate
  fs::path map_file = tmp / "m1.coords";
  REQUIRE(run(cli + " embed m --n 1 --out " + map_file.string()).exit_code == 0, "embed m exits 0");
  RunResult linked =
      run(cli + " lk --map " + map_file.string() + " --gamma \"c,a1\" --delta \"a0 a,a0 b,a2 a,a2 b\"");
  REQUIRE(linked.exit_code == 0, "lk exits 0");
  REQUIRE(linked.output == "1\n", "interleaved pair links");
  RunResult unlinked =
      run(cli + " lk --map " + map_file.string() + " --gamma \"c,a0\" --delta \"a1 a,a1 b,a2 a,a2 b\"");
  REQUIRE(unlinked.output == "0\n", "nested pair does not link");
  REQUIRE(run(cli + " lk --map " + map_file.string() +
              " --gamma \"a0,a1\" --delta \"a0 a,a0 b,a2 a,a2 b\"")
                  .exit_code == 2,
          "shared vertex rejected");

  // with an imported complex the spheres must be subcomplexes of it
  fs::path cx_file = tmp / "m1.complex";
  REQUIRE(run(cli + " build m --n 1 --out " + cx_file.string()).exit_code == 0, "build --out");
  RunResult linked_cx = run(cli + " lk --map " + map_file.string() + " --complex " +
                            cx_file.string() + " --gamma \"c,a1\" --delta \"a0 a,a0 b,a2 a,a2 b\"");
  REQUIRE(linked_cx.output == "1\n", "lk with imported complex");
  REQUIRE(run(cli + " lk --map " + map_file.string() + " --complex " + cx_file.string() +
              " --gamma \"a0 a1\" --delta \"a2 a,a2 b\"")
                  .exit_code == 2,
          "simplex outside the imported complex rejected");

  // parallel pair scans do not change any output
  fs::path serial_rep = tmp / "thm12_serial.json";
  fs::path threaded_rep = tmp / "thm12_threads.json";
  run(cli + " verify thm12 --n 2 --seed 3 --json " + serial_rep.string());
  run("LINKOBS_THREADS=2 " + cli + " verify thm12 --n 2 --seed 3 --json " + threaded_rep.string());
  {
    auto a = nlohmann::ordered_json::parse(slurp(serial_rep.string()));
    auto b = nlohmann::ordered_json::parse(slurp(threaded_rep.string()));
    a.erase("timestamp");
    b.erase("timestamp");
    REQUIRE(a.dump(2) == b.dump(2), "LINKOBS_THREADS=2 yields identical reports");
  }

  // schema: print, validate, reject truncation
  REQUIRE(run(cli + " schema").exit_code == 0, "schema exits 0");
  REQUIRE(run(cli + " schema --check " + report1.string()).exit_code == 0,
          "saved report conforms");
  fs::path broken = tmp / "broken.json";
  {
    auto j = nlohmann::ordered_json::parse(slurp(report1.string()));
    j.erase("evidence");
    std::ofstream out(broken);
    out << j.dump(2) << "\n";
  }
  REQUIRE(run(cli + " schema --check " + broken.string()).exit_code == 1,
          "truncated report rejected with exit 1");

  fs::remove_all(tmp);
  if (checks_failed == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cout << checks_failed << " cli check(s) failed\n";
  return 1;
}
