#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/commands.hpp"

namespace {

const std::string kData = RAUZY_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rauzy");
  std::ostringstream out, err;
  const int code = rauzy::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "rauzy_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("classify") {
  const Outcome ok = run_cli({"classify", "--sub", data("hokkaido.sub")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("nice=true f=x^3 - x - 1") != std::string::npos);
  const Outcome bad = run_cli({"classify", "--sub", data("nonprojecting.sub")});
  CHECK(bad.code == 2);
}

TEST_CASE("input errors exit 1") {
  const Outcome malformed = run_cli({"classify", "--sub", data("malformed.sub")});
  CHECK(malformed.code == 1);
  CHECK(malformed.err.find("line 3") != std::string::npos);
  CHECK(run_cli({"fractal", "--sub", data("hokkaido.sub"), "--level", "15"}).code == 1);
  CHECK(run_cli({"classify", "--sub", data("missing.sub")}).code == 1);
  CHECK(run_cli({"classify"}).code == 1);
  CHECK(run_cli({"fractal", "--sub", data("hokkaido.sub"), "--type", "2^7"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("scc prints the full table") {
  const Outcome r = run_cli({"scc", "--sub", data("hokkaido.sub")});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 31);
}

TEST_CASE("coding starts with χ(u)") {
  const Outcome r = run_cli({"coding", "--sub", data("hokkaido.sub"), "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("34234323") != std::string::npos);
}

TEST_CASE("return reports are reproducible") {
  const auto a = scratch("return_a.json"), b = scratch("return_b.json");
  for (const auto& p : {a, b})
    CHECK(run_cli({"return", "--sub", data("hokkaido.sub"), "--n", "200", "--seed", "11", "--report", p.string()}).code ==
          0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("\"verified\"") != std::string::npos);
}

TEST_CASE("fractal SVG is deterministic") {
  const auto a = scratch("fractal_a.svg"), b = scratch("fractal_b.svg");
  for (const auto& p : {a, b})
    CHECK(run_cli({"fractal", "--sub", data("hokkaido.sub"), "--type", "2^4", "--level", "4", "--svg", p.string()})
              .code == 0);
  const std::string svg = slurp(a);
  CHECK(svg == slurp(b));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polygon") != std::string::npos);
}

TEST_CASE("render tiles the plane") {
  const auto p = scratch("render.svg");
  const Outcome poly = run_cli({"render", "--sub", data("hokkaido.sub"), "--faces", "1^3+1^4+2^4+2^5+3^5", "--exponent",
                                "1", "--iters", "4", "--svg", p.string()});
  CHECK(poly.code == 0);
  const Outcome frac = run_cli({"render", "--sub", data("hokkaido.sub"), "--faces", "1^3+1^4+2^4+2^5+3^5", "--mode",
                                "fractal", "--level", "5", "--exponent", "1"});
  CHECK(frac.code == 0);
}

TEST_CASE("matrices print every block") {
  const Outcome r = run_cli({"matrices", "--sub", data("tribonacci.sub")});
  CHECK(r.code == 0);
  for (const char* section : {"# B_", "# M_", "# N"}) CHECK(r.out.find(section) != std::string::npos);
  CHECK(run_cli({"matrices", "--sub", data("tribonacci.sub"), "--dim", "3"}).code == 1);
}

TEST_CASE("orbit and classify on the χ family only") {
  CHECK(run_cli({"orbit", "--sub", data("hokkaido.sub"), "--iters", "10"}).code == 0);
  CHECK(run_cli({"orbit", "--sub", data("tribonacci.sub"), "--iters", "10"}).code == 1);
}
