#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using dpm::cli::main_entry;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(std::vector<std::string> args) {
  args.insert(args.begin(), "dpm");
  std::ostringstream o, e;
  int c = main_entry(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("each subcommand succeeds with defaults") {
    for (std::string cmd : {"fibers", "mirror", "critvals", "cycles", "verify", "junction", "ghs", "mutate"}) {
      CAPTURE(cmd);
      auto r = call({cmd});
      CHECK(r.code == 0);
      auto j = nlohmann::json::parse(r.out);
      CHECK(j["command"] == cmd);
      CHECK(j["schema"] == "dpm/" + cmd + "/1");
      CHECK(j["pass"] == true);
    }
  }

  TEST_CASE("all degrees") {
    for (std::string d : {"1", "2", "3"}) {
      CHECK(call({"fibers", "--d", d}).code == 0);
      CHECK(call({"verify", "--d", d}).code == 0);
      CHECK(call({"junction", "--d", d}).code == 0);
    }
  }

  TEST_CASE("output is deterministic") {
    CHECK(call({"verify", "--d", "2"}).out == call({"verify", "--d", "2"}).out);
    CHECK(call({"cycles", "--format", "svg"}).out == call({"cycles", "--format", "svg"}).out);
    CHECK(call({"critvals", "--format", "csv"}).out == call({"critvals", "--format", "csv"}).out);
  }

  TEST_CASE("fiber report contents") {
    auto j = nlohmann::json::parse(call({"fibers", "--d", "1"}).out);
    CHECK(j["fibers"]["infinity"] == "I1");
    CHECK(j["fibers"]["euler_sum"] == 12);
  }

  TEST_CASE("bad input exits with 1") {
    CHECK(call({"fibers", "--d", "7"}).code == 1);
    CHECK(call({"cycles", "--epsilon", "0.01"}).code == 1);
    CHECK(call({"mutate", "--word", "Q3"}).code == 1);
    CHECK(call({"mutate", "--word", "R40"}).code == 1);
    CHECK(call({"nonsense"}).code == 1);
    CHECK(call({}).code == 1);
    CHECK(call({"fibers", "--format", "svg"}).code == 1);
  }

  TEST_CASE("mutate applies words") {
    auto j = nlohmann::json::parse(call({"mutate", "--d", "2", "--word", "R8 R7 L4"}).out);
    CHECK(j["pass"] == true);
  }

  TEST_CASE("exact epsilon and decimal tolerance") {
    CHECK(call({"cycles", "--epsilon", "1/50", "--tol", "1e-6"}).code == 0);
    CHECK(call({"cycles", "--tol", "1/1000000"}).code == 0);
  }
}
