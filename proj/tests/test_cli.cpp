#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const fs::path kTmp = "cli_test_tmp";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void put(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  fs::create_directories(kTmp);
  fs::path out_path = kTmp / "stdout.txt";
  fs::path err_path = kTmp / "stderr.txt";
  std::string cmd = std::string(TEST_CLI_PATH) + " " + args + " > " + out_path.string() +
                    " 2> " + err_path.string();
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return RunResult{WEXITSTATUS(rc), slurp(out_path), slurp(err_path)};
}

}  // namespace

TEST_CASE("argument errors exit with code 1") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("minimize --help").code == 0);
  CHECK(run_cli("").code == 1);                 // a subcommand is required
  CHECK(run_cli("frobnicate").code == 1);       // unknown subcommand
  fs::create_directories(kTmp);
  put(kTmp / "plain.txt", "GAATACACATAC");
  std::string in = (kTmp / "plain.txt").string();
  CHECK(run_cli("minimize " + in + " --w 3").code == 1);                   // missing --k
  CHECK(run_cli("minimize " + in + " --w 1 --k 3").code == 1);             // w below 2
  CHECK(run_cli("minimize " + in + " --w 3 --k 0").code == 1);             // k not positive
  CHECK(run_cli("minimize " + in + " --w 3 --k 3 --engine bogus").code == 1);
  CHECK(run_cli("minimize " + in + " --w 3 --k 3 --order colex").code == 1);
  CHECK(run_cli("minimize " + in + " --w 3 --k 3 --block-scheme fixed:1").code == 1);
  CHECK(run_cli("verify --suite bogus").code == 1);
}

TEST_CASE("missing input files exit with code 3") {
  RunResult r = run_cli("minimize does_not_exist.txt --w 3 --k 3");
  CHECK(r.code == 3);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("minimize scans a plain text file") {
  fs::create_directories(kTmp);
  put(kTmp / "plain.txt", "GAATACACATAC\n");
  std::string in = (kTmp / "plain.txt").string();
  RunResult r = run_cli("minimize " + in + " --w 3 --k 3 --order lex");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n4\n6\n8\n");

  // Engine choice and the borrowed-window scan do not change the answer.
  for (const std::string& variant :
       {std::string("--engine deque"), std::string("--engine heap"),
        std::string("--engine two-layer --block-scheme fixed:4"),
        std::string("--space-efficient")}) {
    RunResult v = run_cli("minimize " + in + " --w 3 --k 3 --order lex " + variant);
    CHECK(v.code == 0);
    CHECK(v.out == r.out);
  }

  // --out writes the same bytes to a file instead.
  fs::path out_file = kTmp / "result.txt";
  RunResult w = run_cli("minimize " + in + " --w 3 --k 3 --order lex --out " + out_file.string());
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  CHECK(slurp(out_file) == r.out);
}

TEST_CASE("minimize handles FASTA records") {
  fs::create_directories(kTmp);
  put(kTmp / "two.fa", ">r1 longer description\nGAATAC\nACATAC\n>r2\nAAAAAAA\n");
  std::string in = (kTmp / "two.fa").string();
  RunResult r = run_cli("minimize " + in + " --w 3 --k 3 --order lex");
  CHECK(r.code == 0);
  CHECK(r.out == "record,pos\nr1,1\nr1,4\nr1,6\nr1,8\nr2,0\nr2,1\nr2,2\n");

  // A record shorter than one window is skipped with a warning, not an error.
  put(kTmp / "short.fa", ">r1\nGAATACACATAC\n>tiny\nACG\n");
  RunResult s = run_cli("minimize " + (kTmp / "short.fa").string() + " --w 3 --k 3 --order lex");
  CHECK(s.code == 0);
  CHECK(s.err.find("tiny") != std::string::npos);
  CHECK(s.err.find("skipped") != std::string::npos);
  CHECK(s.out == "record,pos\nr1,1\nr1,4\nr1,6\nr1,8\n");
}

TEST_CASE("trie reports the nodes where path minimizers start") {
  fs::create_directories(kTmp);
  put(kTmp / "trie.txt", "ACC\nACT\nATT\nATCACG\nATCACT\nATCAAG\nATCAATAG\nATCAATAA\n");
  std::string in = (kTmp / "trie.txt").string();
  RunResult r = run_cli("trie " + in + " --l 5 --k 2 --order lex --engine two-stack");
  CHECK(r.code == 0);
  CHECK(r.out == "7\n8\n12\n");

  RunResult v = run_cli("trie " + in + " --l 5 --k 2 --order lex --verbose");
  CHECK(v.code == 0);
  CHECK(v.out.find("node,offset\n") != std::string::npos);
  CHECK(v.out.find("15,2\n") != std::string::npos);  // deepest ACG branch, two up
  CHECK(v.err.find("18 nodes") != std::string::npos);

  // The monotonic queue cannot run a trie traversal.
  RunResult d = run_cli("trie " + in + " --l 5 --k 2 --engine deque");
  CHECK(d.code == 1);
}

TEST_CASE("verify runs its suites and reports per-suite lines") {
  RunResult r = run_cli("verify --suite hash --cases 25");
  CHECK(r.code == 0);
  CHECK(r.out.find("suite hash: 25 cases") != std::string::npos);
  CHECK(r.out.find("[ok]") != std::string::npos);

  RunResult b = run_cli("verify --suite border --sequences 6 --seed 5");
  CHECK(b.code == 0);
  CHECK(b.out.find("suite border: 6 cases") != std::string::npos);
  CHECK(b.out.find("0 mismatches, 0 witness violations [ok]") != std::string::npos);
}

TEST_CASE("bench writes one CSV row per engine") {
  RunResult r = run_cli(
      "bench --scenario one-way-slide --engines two-stack,deque --n 4000 --w 16 --k 4 --reps 1");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "engine,n,w,k,seed,total_ops,elapsed_ns,ns_per_op,max_live_pairs,rebuild_count,scenario");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(line.find("one-way-slide") != std::string::npos);
  }
  CHECK(rows == 2);

  CHECK(run_cli("bench --engines bogus --n 1000").code == 1);

  // The monotonic queue cannot oscillate; it is skipped with a note.
  RunResult o = run_cli("bench --scenario oscillating-window --engines deque --n 2000 --reps 1");
  CHECK(o.code == 0);
  CHECK(o.err.find("skipped") != std::string::npos);
}
