#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef SHORTWORDS_CLI_PATH
#error "SHORTWORDS_CLI_PATH must point at the built binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("shortwords_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

RunResult run(const std::string& args) {
  fs::path out = work_dir() / "stdout.txt";
  fs::path err = work_dir() / "stderr.txt";
  std::string cmd = std::string(SHORTWORDS_CLI_PATH) + " " + args + " >" +
                    out.string() + " 2>" + err.string();
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

const std::string s8_file = R"(# symmetric group of degree 8
degree 8
g1 = (1,2)
g2 = (1,2,3,4,5,6,7,8)
)";

const std::string s8_target_file = R"(degree 8
a = (1,3,6)(2,4)
b = (1,7,8)(2,5)
)";

const std::string s4_file = R"(degree 4
g1 = (1,2)
g2 = (1,2,3,4)
)";

}  // namespace

TEST_CASE("order command", "[cli]") {
  auto g = write_file("s8.gens", s8_file);
  auto r = run("order " + g.string());
  CHECK(r.code == 0);
  CHECK(r.out == "40320\n");

  auto rj = run("order " + g.string() + " --json");
  CHECK(rj.code == 0);
  json j = json::parse(rj.out);
  CHECK(j["order"] == 40320);
}

TEST_CASE("lookup command and byte stability", "[cli]") {
  auto g = write_file("s8.gens", s8_file);
  auto r = run("lookup " + g.string() + " --element \"(2,8,7,6,4,3)\"");
  CHECK(r.code == 0);
  CHECK(r.out == "g1*g2^4*g1*g2^3\n");

  auto r2 = run("lookup " + g.string() + " --element \"(2,8,7,6,4,3)\"");
  CHECK(r2.out == r.out);  // byte-stable

  auto rj = run("lookup " + g.string() + " --element \"(2,8,7,6,4,3)\" --json");
  json j = json::parse(rj.out);
  CHECK(j["rendered"] == "g1*g2^4*g1*g2^3");
  CHECK(j["status"] == "found");
  CHECK(j["exponent"] == 1);
  CHECK(j["indices"] == json::array({1, 2, 2, 2, 2, 1, 2, 2, 2}));

  // verbose chatter goes to stderr, results stay on stdout
  auto rv = run("lookup " + g.string() + " --element \"(2,8,7,6,4,3)\" --verbose");
  CHECK(rv.out == r.out);
  CHECK(rv.err.find("level") != std::string::npos);
}

TEST_CASE("shortgens command", "[cli]") {
  auto g = write_file("s8.gens", s8_file);
  auto t = write_file("s8_target.gens", s8_target_file);
  auto r = run("shortgens " + g.string() + " --target " + t.string());
  CHECK(r.code == 0);
  CHECK(r.out ==
        "(g2*g1*g2^4)^5\n(g1*g2*g1*g2^4)^3\n(g1*g2^3*g1*g2*g1)^2\n"
        "(g1*g2*g1*g2*g1*g2^3*g1)^3\n");

  auto rj = run("shortgens " + g.string() + " --target " + t.string() + " --json");
  json j = json::parse(rj.out);
  CHECK(j["status"] == "complete");
  REQUIRE(j["words"].size() == 4);
  // text and JSON encode the same data
  std::istringstream lines(r.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    CHECK(j["words"][i]["rendered"] == line);
    ++i;
  }
  CHECK(i == j["words"].size());

  // iteration limit surfaces as exit code 3 with partial output
  auto rl = run("shortgens " + g.string() + " --target " + t.string() + " --limit 1");
  CHECK(rl.code == 3);
}

TEST_CASE("classes command", "[cli]") {
  auto g = write_file("s4.gens", s4_file);
  auto r = run("classes " + g.string());
  CHECK(r.code == 0);

  auto rj = run("classes " + g.string() + " --json");
  json j = json::parse(rj.out);
  REQUIRE(j["classes"].size() == 5);
  CHECK(j["group_order"] == 24);

  // decode the text table and compare with the JSON record
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "order 24");
  REQUIRE(std::getline(lines, line));  // header
  std::size_t row = 0;
  std::uint64_t size_sum = 0;
  while (std::getline(lines, line)) {
    REQUIRE(row < j["classes"].size());
    auto split = [](const std::string& s) {
      std::vector<std::string> out;
      std::size_t pos = 0;
      while (true) {
        auto bar = s.find(" | ", pos);
        std::string field = s.substr(pos, bar == std::string::npos ? bar : bar - pos);
        while (!field.empty() && field.back() == ' ') field.pop_back();
        out.push_back(field);
        if (bar == std::string::npos) break;
        pos = bar + 3;
      }
      return out;
    };
    auto fields = split(line);
    const json& jc = j["classes"][row];
    CHECK(fields[0] == jc["label"]);
    CHECK(fields[1] == jc["representative"]);
    CHECK(fields[2] == std::to_string(jc["centralizer_order"].get<std::uint64_t>()));
    size_sum += jc["size"].get<std::uint64_t>();
    ++row;
  }
  CHECK(row == 5);
  CHECK(size_sum == 24);

  // word representatives via the conjugacy lookup
  auto rw = run("classes " + g.string() + " --words --json");
  json jw = json::parse(rw.out);
  for (const auto& jc : jw["classes"]) CHECK(jc.contains("word"));
}

TEST_CASE("cosetaction command", "[cli]") {
  auto g = write_file("s4.gens", s4_file);
  auto u = write_file("s4_stab.gens",
                      "degree 4\nh1 = (1,2)\nh2 = (1,2,3)\n");
  auto r = run("cosetaction " + g.string() + " --subgroup " + u.string());
  CHECK(r.code == 0);
  CHECK(r.out == "degree 4\nimage_order 24\nkernel_order 1\nfaithful true\n");

  auto rj = run("cosetaction " + g.string() + " --subgroup " + u.string() + " --json");
  json j = json::parse(rj.out);
  CHECK(j["degree"] == 4);
  CHECK(j["image_order"] == 24);
  CHECK(j["kernel_order"] == 1);
  CHECK(j["faithful"] == true);
}

TEST_CASE("structure commands", "[cli]") {
  auto g = write_file("s4.gens", s4_file);

  auto syl = run("sylow2 " + g.string() + " --json");
  CHECK(json::parse(syl.out)["order"] == 8);

  auto cen = run("center " + g.string() + " --json");
  CHECK(json::parse(cen.out)["order"] == 1);

  auto cz = run("centralizer " + g.string() + " --element \"(1,2)(3,4)\" --json");
  CHECK(json::parse(cz.out)["order"] == 8);

  auto h = write_file("c3.gens", "degree 4\nh = (1,2,3)\n");
  auto nm = run("normalizer " + g.string() + " --subgroup " + h.string() + " --json");
  CHECK(json::parse(nm.out)["order"] == 6);

  auto tc = run("twocentral " + g.string() + " --json");
  json jtc = json::parse(tc.out);
  REQUIRE(jtc["classes"].size() == 1);
  CHECK(jtc["classes"][0]["centralizer_order"] == 8);

  auto d8 = write_file("d8.gens", "degree 4\nr = (1,2,3,4)\ns = (1,3)\n");
  auto mx = run("maxelab " + d8.string() + " --json");
  json jmx = json::parse(mx.out);
  REQUIRE(jmx["subgroups"].size() == 2);
  CHECK(jmx["subgroups"][0]["order"] == 4);
  CHECK(jmx["subgroups"][1]["order"] == 4);

  auto red = run("reduce " + g.string() + " --element \"(1,3,2,4)\"");
  CHECK(red.code == 0);
}

TEST_CASE("text and JSON encode the same data", "[cli]") {
  auto g = write_file("s4.gens", s4_file);

  // subgroup-shaped outputs: "order N" then one generator per line
  for (const std::string& cmd :
       {std::string("sylow2 "), std::string("center ")}) {
    auto rt = run(cmd + g.string());
    auto rj = run(cmd + g.string() + " --json");
    REQUIRE(rt.code == 0);
    json j = json::parse(rj.out);
    std::istringstream lines(rt.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "order " + std::to_string(j["order"].get<std::uint64_t>()));
    std::size_t i = 0;
    while (std::getline(lines, line)) {
      REQUIRE(i < j["generators"].size());
      CHECK(line == j["generators"][i]);
      ++i;
    }
    CHECK(i == j["generators"].size());
  }

  // runs are byte-stable
  auto a = run("classes " + g.string());
  auto b = run("classes " + g.string());
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes", "[cli]") {
  // 1: malformed file, with position information on stderr
  auto bad = write_file("bad.gens", "degree 5\ng1 = (1,9)\n");
  auto r1 = run("order " + bad.string());
  CHECK(r1.code == 1);
  CHECK(r1.err.find("line 2") != std::string::npos);

  auto missing = run("order " + (work_dir() / "nope.gens").string());
  CHECK(missing.code == 1);

  // 2: containment precondition
  auto small = write_file("c2.gens", "degree 4\ng1 = (1,2)\n");
  auto a4 = write_file("a4.gens", "degree 4\na = (1,2,3)\nb = (2,3,4)\n");
  auto r2 = run("shortgens " + small.string() + " --target " + a4.string());
  CHECK(r2.code == 2);
  CHECK(r2.err.find("can't generate subgroup") != std::string::npos);

  auto g = write_file("s4.gens", s4_file);
  auto r2b = run("lookup " + small.string() + " --element \"(1,3)\"");
  CHECK(r2b.code == 2);

  // 3: resource limits
  auto s8 = write_file("s8.gens", s8_file);
  auto r3 = run("classes " + s8.string() + " --element-limit 100");
  CHECK(r3.code == 3);

  auto r3b = run("lookup " + s8.string() +
                 " --element \"(2,8,7,6,4,3)\" --limit 2 --no-reduce");
  CHECK(r3b.code == 3);

  // 0 with empty stderr on success
  auto ok = run("order " + g.string());
  CHECK(ok.code == 0);
  CHECK(ok.err.empty());
}

TEST_CASE("search options", "[cli]") {
  auto g = write_file("s4.gens", s4_file);
  auto t = write_file("a4.gens", "degree 4\na = (1,2,3)\nb = (2,3,4)\n");
  auto x = write_file("v4.gens", "degree 4\nu = (1,2)(3,4)\nv = (1,3)(2,4)\n");

  // exclude seeds the search; one 3-cycle completes A4 over V4
  auto r = run("shortgens " + g.string() + " --target " + t.string() +
               " --exclude " + x.string());
  CHECK(r.code == 0);
  CHECK(r.out == "g1*g2\n");

  auto rr = run("shortgens " + g.string() + " --target " + x.string() +
                " --order-restriction 2 --json");
  CHECK(rr.code == 0);
  CHECK(json::parse(rr.out)["status"] == "complete");

  // an element whose exact word is long has a depth-1 conjugate
  auto rc = run("lookup " + g.string() + " --element \"(3,4)\" --conjugate --json");
  CHECK(rc.code == 0);
  json jc = json::parse(rc.out);
  CHECK(jc["status"] == "found_conjugate");
  CHECK(jc["rendered"] == "g1");

  auto re = run("lookup " + g.string() + " --element \"(3,4)\"");
  CHECK(re.code == 0);
  CHECK(re.out == "g2^2*g1*g2^2\n");

  auto rs = run("order " + g.string() + " --seed 7");
  CHECK(rs.code == 0);
  CHECK(rs.out == "24\n");
}

TEST_CASE("two-step flag", "[cli]") {
  auto g = write_file("s4.gens", s4_file);
  auto t = write_file("a4.gens", "degree 4\na = (1,2,3)\nb = (2,3,4)\n");
  auto s = write_file("v4.gens", "degree 4\nu = (1,2)(3,4)\nv = (1,3)(2,4)\n");

  auto r = run("shortgens " + g.string() + " --target " + s.string() +
               " --two-step " + t.string() + " --json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["status"] == "complete");
  CHECK(j.contains("step1"));
  CHECK(j.contains("nested"));
  CHECK(j["words"].size() >= 1);

  auto rl = run("lookup " + g.string() + " --element \"(1,2)(3,4)\" --two-step " +
                t.string());
  CHECK(rl.code == 0);
  CHECK_FALSE(rl.out.empty());
}
