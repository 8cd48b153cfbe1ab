#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "latsb/cli.hpp"
#include "latsb/counting.hpp"

using namespace latsb;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "latsb");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "latsb_test_cli";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("check") {
  const Run m3 = run({"check", "--name", "M3"});
  CHECK(m3.code == 0);
  CHECK(m3.out.find("modular: true") != std::string::npos);
  CHECK(m3.out.find("distributive: false") != std::string::npos);
  CHECK(m3.out.find("geometric: true") != std::string::npos);
  CHECK(m3.out.find("whitney: [1,3,1]") != std::string::npos);

  const Run n5 = run({"check", "--name", "N5"});
  CHECK(n5.out.find("jordan_dedekind: false") != std::string::npos);
  CHECK(n5.out.find("modular: false") != std::string::npos);

  const Run pow3 = run({"check", "--powerset", "3"});
  CHECK(pow3.out.find("whitney: [1,3,3,1]") != std::string::npos);
  CHECK(pow3.out.find("false") == std::string::npos);
}

TEST_CASE("check rejects a non-lattice and names the pair") {
  const std::string path =
      write("bowtie.json", R"({"elements":["o","a","b","c","d","i"],"covers":[[0,1],[0,2],[1,3],[1,4],[2,3],[2,4],[3,5],[4,5]]})");
  const Run r = run({"check", "--lattice", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("not a lattice") != std::string::npos);
  CHECK(r.err.find("'a'") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--name", "Q7"}).code == 2);
  CHECK(run({"check", "--name", "M3", "--powerset", "2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"search", "--projective", "-q", "4", "-n", "2", "-d", "2"}).code == 2);
  CHECK(run({"bounds", "--projective", "-n", "3", "-d", "2", "--window", "3", "1"}).code == 2);
  CHECK(run({"check", "--projective", "-q", "2", "-n", "9"}).code == 2);  // past the cap
}

TEST_CASE("bounds") {
  const Run kks = run({"bounds", "--projective", "-q", "2", "-n", "4", "-d", "4", "--window", "2", "2"});
  CHECK(kks.code == 0);
  CHECK(kks.out == bound_csv_header() + "\nprojective,2,4,4,2,2,7,2.8074,2,1.0000,\n");
  const Run pw = run({"bounds", "--powerset", "-n", "7", "-d", "3"});
  CHECK(pw.out.find("\npowerset,,7,3,,,32,") != std::string::npos);
  const Run all = run({"bounds", "--projective", "-q", "2", "-n", "3", "-d", "1"});
  CHECK(all.out.find("\nprojective,2,3,1,,,16,") != std::string::npos);

  const Run table = run({"bounds", "--projective", "--n-min", "2", "--n-max", "6", "--d-min", "1", "--d-max", "4"});
  CHECK(count_lines(table.out) == 1 + 5 * 4);
  CHECK(table.out == run({"bounds", "--projective", "--n-min", "2", "--n-max", "6", "--d-min", "1", "--d-max", "4"}).out);

  const Run oracle = run({"bounds", "--projective", "-n", "2", "-d", "2", "--oracle"});
  CHECK(oracle.out.find(",3\n") != std::string::npos);

  const Run m3 = run({"bounds", "--name", "M3", "-d", "3"});
  CHECK(m3.out.find("\nlattice,,2,3,,,2,") != std::string::npos);
  CHECK(run({"bounds", "--name", "N5", "-d", "2"}).code == 2);
}

TEST_CASE("search") {
  const Run r = run({"search", "--projective", "-q", "2", "-n", "2", "-d", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["best_size"] == 3);
  CHECK(j["proven_optimal"] == true);
  CHECK(j["scheme"].size() == 3);
  CHECK(j["sandwich"]["status"] == "PASS");
  CHECK(j["sandwich"]["lsb"] == 5);

  CHECK(nlohmann::json::parse(run({"search", "--powerset", "-n", "3", "-d", "3"}).out)["best_size"] == 2);
  CHECK(nlohmann::json::parse(run({"search", "--powerset", "-n", "3", "-d", "1"}).out)["best_size"] == 8);

  const Run cut = run({"search", "--projective", "-n", "4", "-d", "3", "--budget-nodes", "1"});
  CHECK(cut.code == 3);
  CHECK(nlohmann::json::parse(cut.out)["proven_optimal"] == false);

  const Run n5 = run({"search", "--name", "N5", "-d", "2"});
  CHECK(n5.code == 0);
  CHECK(nlohmann::json::parse(n5.out)["sandwich"]["status"].get<std::string>().rfind("n/a", 0) == 0);
}

TEST_CASE("fig5") {
  const auto dir = scratch_dir();
  const std::string csv = (dir / "fig.csv").string();
  const Run r = run({"fig5", "-o", csv});
  REQUIRE(r.code == 0);
  const std::string text = slurp(csv);
  CHECK(count_lines(text) == 18);
  CHECK(text.rfind("n,lsb,lsb_log2,gv_lower,gv_lower_log2\n4,16,4.0000,", 0) == 0);
  CHECK(std::filesystem::exists(dir / "fig.gp"));
  CHECK(slurp(dir / "fig.gp").find("'fig.csv'") != std::string::npos);

  run({"fig5", "-o", (dir / "one.csv").string(), "-n", "9"});
  CHECK(count_lines(slurp(dir / "one.csv")) == 2);

  const std::string overlay = write("points.csv", "series,n,log2_size\nsome code,13,30.9\n");
  CHECK(run({"fig5", "-o", (dir / "ov.csv").string(), "--overlay", overlay}).code == 0);
  CHECK(slurp(dir / "ov_overlay.csv") == "series,n,log2_size\nsome code,13,30.9\n");
  CHECK(slurp(dir / "ov.gp").find("'some code'") != std::string::npos);

  CHECK(run({"fig5", "-o", (dir / "bad.csv").string(), "--overlay", write("bad1.csv", "n,log2\n")}).code == 2);
  CHECK(run({"fig5", "-o", (dir / "bad.csv").string(), "--overlay", write("bad2.csv", "series,n,log2_size\nX,13\n")}).code == 2);
  CHECK(run({"fig5", "-o", (dir / "bad.csv").string(), "--overlay", write("bad3.csv", "series,n,log2_size\nX,13,abc\n")}).code == 2);
}

TEST_CASE("overlay parser") {
  const auto pts = cli::parse_overlay("series,n,log2_size\r\nA,5,7.25\r\n\r\nB,6,9\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].series == "A");
  CHECK(pts[0].n == 5);
  CHECK(pts[0].log2_size == doctest::Approx(7.25));
  CHECK(pts[1].line == "B,6,9");
  CHECK_THROWS(cli::parse_overlay(""));
  CHECK_THROWS(cli::parse_overlay("series,n,log2_size\n,5,1\n"));
  CHECK_THROWS(cli::parse_overlay("series,n,log2_size\nA,-5,1\n"));
}

TEST_CASE("fig5 column recomputed through the recurrence") {
  const auto rows = cli::fig5_rows(2, 4, 4, 20, MaterializationCap{});
  REQUIRE(rows.size() == 17);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BigNat expect = 0;
    for (unsigned k = 0; k <= rows[i].n - 1; ++k) expect += gaussian_pascal(rows[i].n - 1, k, 2);
    CHECK(rows[i].lsb == expect);
    if (i) CHECK(rows[i].lsb > rows[i - 1].lsb);
  }
}

TEST_CASE("scheme") {
  const std::string planes = write("planes.txt", "q=2 n=3\n# two planes\n100/010\n010/101\n");
  const Run p = run({"scheme", "puncture", "--file", planes, "-w", "010/001"});
  CHECK(p.code == 0);
  CHECK(p.out.find("d: 2 → 0 (drop 2)") != std::string::npos);
  CHECK(run({"scheme", "puncture", "--file", planes, "-w", "I"}).out.find("d unchanged") != std::string::npos);

  const Run pp = run({"scheme", "puncture-project", "--file", planes, "-w", "010/001", "--seed", "3"});
  CHECK(pp.out.find("chooser: seeded(3)") != std::string::npos);
  CHECK(pp.out.find("image heights: 1..1") != std::string::npos);

  CHECK(run({"scheme", "mindist", "--file", planes}).out.find("d: 2\n") != std::string::npos);
  const Run single = run({"scheme", "mindist", "--file", write("one.txt", "101\n")});
  CHECK(single.code == 2);
  CHECK(single.err.find("undefined minimum distance") != std::string::npos);

  const Run code = run({"scheme", "mindist", "--as-code", "--file", write("code.txt", "n=5\n10110\n01101\n11111\n")});
  CHECK(code.out.find("injective true, distance-preserving true") != std::string::npos);
  CHECK(code.out.find("d: 2\n") != std::string::npos);

  const Run named = run({"scheme", "puncture", "--file", write("m3.txt", "name=M3\nA\nB\n"), "-w", "C"});
  CHECK(named.out.find("d: 2 → 0 (drop 2)") != std::string::npos);

  CHECK(run({"scheme", "puncture", "--file", planes}).code == 2);            // no -w
  CHECK(run({"scheme", "mindist", "--file", write("e.txt", "# nothing\n")}).code == 2);
  CHECK(run({"scheme", "mindist", "--file", write("x.txt", "q=2 n=3\n1x0\n")}).code == 2);
}

TEST_CASE("export round trip") {
  const Run j = run({"export-json", "--projective", "-n", "3"});
  REQUIRE(j.code == 0);
  const std::string path = write("sub3.json", j.out);
  const Run again = run({"export-json", "--lattice", path});
  CHECK(again.out == j.out);
  const Run chk = run({"check", "--lattice", path});
  CHECK(chk.out.find("whitney: [1,7,7,1]") != std::string::npos);
  const Run dot = run({"export-dot", "--name", "N5"});
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(count_lines(dot.out) > 5);
}

TEST_CASE("probe") {
  const Run r = run({"probe", "-q", "2", "-n", "4", "-l", "2", "-d", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "q,n,l,d,bound,optimum,gap,proven_optimal,attained,trivial,nodes\n"
                 "2,4,2,4,7,5,2,true,false,false," +
                     r.out.substr(r.out.rfind(',') + 1));
}
