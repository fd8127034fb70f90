#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

// stderr is folded into the captured text.
Run run(const std::string& args) {
  std::string cmd = std::string(HILBCOUNT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("hilbcount_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

bool single_error_line(const std::string& out, const std::string& kind) {
  return out.rfind("error[" + kind + "]: ", 0) == 0 && out.find('\n') == out.size() - 1;
}

}  // namespace

TEST(CliQueens, SmallTables) {
  auto r = run("queens --n 3 --k 1 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "k,u,phi\n1,1,1\n1,3,8\n");

  auto one = run("queens --n 1 --k 0 --format json");
  ASSERT_EQ(one.status, 0) << one.out;
  auto j = nlohmann::json::parse(one.out);
  EXPECT_EQ(j["rows"][0]["mu"], 1);
  EXPECT_EQ(j["rows"][0]["phi"]["1"], 1);
  EXPECT_EQ(j["partial"], false);
}

TEST(CliQueens, EightQueensHeadline) {
  auto r = run("queens --n 8 --k 8 --umin 10 --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"][0]["mu"], 11);
  EXPECT_EQ(j["rows"][0]["phi"]["11"], 48);
}

TEST(CliQueens, DeterministicAcrossWorkers) {
  auto a = run("queens --n 5 --kmin 0 --kmax 5 --format csv --workers 1");
  auto b = run("queens --n 5 --kmin 0 --kmax 5 --format csv --workers 3");
  auto c = run("queens --n 5 --kmin 0 --kmax 5 --format csv --workers 3 --no-symmetry");
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(CliQueens, CustomPieceAndGraph) {
  Scratch s;
  auto rook = s.write("rook.json", R"({"moves": [[1,0],[0,1],[-1,0],[0,-1]], "sliding": true})");
  auto custom = run("queens --n 4 --piece-file " + rook + " --kmin 0 --kmax 4 --format csv");
  auto builtin = run("queens --n 4 --piece rook --kmin 0 --kmax 4 --format csv");
  ASSERT_EQ(custom.status, 0) << custom.out;
  EXPECT_EQ(custom.out, builtin.out);

  // A path on three vertices: picking the middle frees nothing but itself.
  auto path = s.write("path.txt", "# path\n3\n0 1\n1 2\n");
  auto g = run("queens --graph " + path + " --k 1 --format csv");
  ASSERT_EQ(g.status, 0) << g.out;
  EXPECT_EQ(g.out, "k,u,phi\n1,1,1\n1,2,2\n");

  auto bad = s.write("bad.txt", "3\n0 1\n1 7\n");
  auto e = run("queens --graph " + bad + " --k 1");
  EXPECT_EQ(e.status, 1);
  EXPECT_TRUE(single_error_line(e.out, "input")) << e.out;
  EXPECT_NE(e.out.find("line 3"), std::string::npos) << e.out;
}

TEST(CliQueens, BudgetExhaustionIsExitTwoWithPartialRows) {
  auto r = run("queens --n 6 --kmin 0 --kmax 6 --budget 20000 --format json");
  EXPECT_EQ(r.status, 2);
  auto json_end = r.out.rfind('}');
  ASSERT_NE(json_end, std::string::npos) << r.out;
  auto j = nlohmann::json::parse(r.out.substr(0, json_end + 1));
  EXPECT_EQ(j["partial"], true);
  EXPECT_NE(r.out.find("error[budget]: "), std::string::npos);
}

TEST(CliWalks, KnightAndLine) {
  auto r = run("walks --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["f"]["closed_form"]["polynomial"], "7d^2+4d+1");
  EXPECT_EQ(j["f"]["closed_form"]["stable_from"], 3);
  EXPECT_EQ(j["g"]["closed_form"]["polynomial"], "28d-20");
  EXPECT_EQ(j["g"]["series"]["text"], "(1+6t+17t^2+12t^3-8t^4-4t^5+4t^6)/(1-t)^2");

  Scratch s;
  auto line = s.write("line.json", R"({"dimension": 2, "steps": [[1,0],[-1,0]]})");
  auto l = run("walks --steps " + line + " --format json");
  ASSERT_EQ(l.status, 0) << l.out;
  auto lj = nlohmann::json::parse(l.out);
  EXPECT_EQ(lj["g"]["closed_form"]["polynomial"], "2");
  EXPECT_EQ(lj["g"]["closed_form"]["stable_from"], 1);

  auto pretty = run("walks");
  EXPECT_NE(pretty.out.find("  7d^2+4d+1    d >= 3\n"), std::string::npos) << pretty.out;
}

TEST(CliWalks, MalformedStepSets) {
  Scratch s;
  auto zero = run("walks --steps " + s.write("zero.json", R"({"dimension": 2, "steps": [[1,0],[0,0]]})"));
  EXPECT_EQ(zero.status, 1);
  EXPECT_TRUE(single_error_line(zero.out, "input")) << zero.out;
  auto dup = run("walks --steps " + s.write("dup.json", R"({"dimension": 2, "steps": [[1,0],[1,0]]})"));
  EXPECT_EQ(dup.status, 1);
  auto junk = run("walks --steps " + s.write("junk.json", "{not json"));
  EXPECT_EQ(junk.status, 1);
  EXPECT_TRUE(single_error_line(junk.out, "input")) << junk.out;
  EXPECT_EQ(run("walks --steps " + s.path("missing.json")).status, 1);
}

TEST(CliHilbert, SeriesAndRoundTrip) {
  Scratch s;
  auto x1 = run("hilbert --ideal " + s.write("x1.txt", "vars 2\nx1\n") + " --format json");
  ASSERT_EQ(x1.status, 0) << x1.out;
  EXPECT_EQ(nlohmann::json::parse(x1.out)["series"]["text"], "(1)/(1-t)");

  auto empty = run("hilbert --ideal " + s.write("empty.txt", "vars 8\n") + " --format json");
  ASSERT_EQ(empty.status, 0) << empty.out;
  EXPECT_EQ(nlohmann::json::parse(empty.out)["series"]["text"], "(1)/(1-t)^8");

  auto exported = s.path("in_kernel.txt");
  ASSERT_EQ(run("walks --export-initial " + exported + " --format json").status, 0);
  auto back = run("hilbert --ideal " + exported + " --format json");
  ASSERT_EQ(back.status, 0) << back.out;
  EXPECT_EQ(nlohmann::json::parse(back.out)["closed_form"]["polynomial"], "28d-20");

  auto bad = run("hilbert --ideal " + s.write("bad.txt", "vars 2\nx1\nx1*q\n"));
  EXPECT_EQ(bad.status, 1);
  EXPECT_TRUE(single_error_line(bad.out, "input")) << bad.out;
  EXPECT_NE(bad.out.find("line 3"), std::string::npos) << bad.out;
}

TEST(CliOracle, Tables) {
  auto w = run("oracle walks --dmax 4 --format csv");
  ASSERT_EQ(w.status, 0);
  EXPECT_EQ(w.out, "d,f,g\n0,1,1\n1,8,8\n2,33,32\n3,76,68\n4,129,96\n");
  EXPECT_EQ(run("oracle walks --dmax 0 --format csv").out, "d,f,g\n0,1,1\n");
  auto q = run("oracle queens --n 3 --k 1");
  ASSERT_EQ(q.status, 0);
  EXPECT_EQ(q.out, "free,count\n3,8\n1,1\n");
}

TEST(CliErrors, BadFlagsAreInputErrors) {
  auto r = run("queens --n 0");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(single_error_line(r.out, "input")) << r.out;
  EXPECT_EQ(run("queens --n 3 --format xml").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
}

TEST(CliOutput, OutFileMatchesStdout) {
  Scratch s;
  auto file = s.path("table.csv");
  ASSERT_EQ(run("queens --n 4 --kmin 0 --kmax 3 --format csv --out " + file).status, 0);
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, run("queens --n 4 --kmin 0 --kmax 3 --format csv").out);
}
