#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef EVST_CLI_PATH
#define EVST_CLI_PATH "evst"
#endif
#ifndef EVST_CONFIG_DIR
#define EVST_CONFIG_DIR "configs"
#endif

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(EVST_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string cfg(const char* name) {
  return std::string(EVST_CONFIG_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("classify exits cleanly on a valid config") {
  CHECK(run("classify --config " + cfg("supersonic.json")) == 0);
  CHECK(run("classify --config " + cfg("perturbed.json")) == 0);
}

TEST_CASE("classify with symbol dump writes the JSON matrices") {
  const std::string out = "/tmp/evst_cli_dump.json";
  CHECK(run("classify --config " + cfg("subsonic.json") + " --dump-symbols --out " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"principal\"") != std::string::npos);
  CHECK(text.find("\"re\"") != std::string::npos);
  CHECK(text.find("\"beta\"") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("roots and poles subcommands") {
  CHECK(run("roots --config " + cfg("supersonic.json")) == 0);
  CHECK(run("poles --config " + cfg("subsonic.json") + " --format json") == 0);
}

TEST_CASE("det-scan writes the scan schema") {
  const std::string out = "/tmp/evst_cli_scan.csv";
  CHECK(run("det-scan --config " + cfg("supersonic.json") + " --grid 64 --gamma 0.1 --out " +
            out) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("delta,eta,gamma,re_det,im_det,abs_det_normalized,class,", 0) == 0);
  std::remove(out.c_str());
}

TEST_CASE("region-map emits csv and svg") {
  const std::string csv = "/tmp/evst_cli_map.csv";
  const std::string svg = "/tmp/evst_cli_map.svg";
  CHECK(run("region-map --grid 12 --out " + csv) == 0);
  CHECK(slurp(csv).rfind("F_bar,v_bar,regime", 0) == 0);
  CHECK(run("region-map --grid 12 --format svg --out " + svg) == 0);
  CHECK(slurp(svg).find("</svg>") != std::string::npos);
  std::remove(csv.c_str());
  std::remove(svg.c_str());
}

TEST_CASE("separation and checks") {
  CHECK(run("separation --config " + cfg("supersonic.json")) == 0);
  CHECK(run("triangular-check --config " + cfg("supersonic.json") + " --grid 400") == 0);
  CHECK(run("trace --config " + cfg("perturbed.json") + " --grid 8") == 0);
}

TEST_CASE("exit codes") {
  SUBCASE("missing config file -> 4") {
    CHECK(run("classify --config /nonexistent.json") == 4);
  }
  SUBCASE("admissibility violation -> 2") {
    CHECK(run("separation --config " + cfg("excluded1.json")) == 2);
  }
}

TEST_SUITE_END();
