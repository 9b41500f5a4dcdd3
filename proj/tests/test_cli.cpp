#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct CommandResult {
  int status = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("PARKFN_CLI");
  REQUIRE_MESSAGE(path != nullptr, "PARKFN_CLI must point at the parkfn binary");
  return path;
}

CommandResult run(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, got);
  }
  int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

}  // namespace

TEST_CASE("count") {
  CommandResult r = run(cli_path() + " count --family pf --m 3 --n 3");
  CHECK(r.status == 0);
  CHECK(r.output.find("\"count\":\"16\"") != std::string::npos);

  CommandResult csv = run(cli_path() + " count --family pf --m 3 --n 3 --format csv");
  CHECK(csv.output == "16\n");

  CommandResult ab = run(cli_path() + " count --family abpf --a 2 --b 2 --m 2");
  CHECK(ab.output.find("\"count\":\"12\"") != std::string::npos);

  CommandResult forest = run(cli_path() + " count --family forest --m 3 --n 5");
  CHECK(forest.output.find("\"count\":\"108\"") != std::string::npos);
}

TEST_CASE("verify") {
  CommandResult r = run(cli_path() + " verify --identity master-pf1 --m 4 --n 6");
  CHECK(r.status == 0);
  CHECK(r.output.find("\"equal\":true") != std::string::npos);

  CommandResult bad = run(cli_path() + " verify --identity nope --m 2 --n 2 2>/dev/null");
  CHECK(bad.status == 1);
}

TEST_CASE("bijection on a single input") {
  CommandResult r =
      run(cli_path() + " bijection --map rho_hat --input '(8,4,5,1,2,1,1,5,6)'");
  CHECK(r.status == 0);
  CHECK(r.output.find("[5,8,3,1,2,5,5,3,9]") != std::string::npos);

  CommandResult t =
      run(cli_path() + " bijection --map theta_hat --input '(8,4,5,1,2,1,1,5,6)'");
  CHECK(t.output.find("[5,8,2,2,1,5,5,4,9]") != std::string::npos);
}

TEST_CASE("enumerate | phi_inv | phi round trips byte-identically") {
  std::string base = cli_path() + " enumerate --family pf --m 3 --n 4";
  CommandResult plain = run(base);
  CHECK(plain.status == 0);
  CommandResult round = run(base + " | " + cli_path() + " bijection --map phi_inv | " +
                            cli_path() + " bijection --map phi");
  CHECK(round.status == 0);
  CHECK(round.output == plain.output);
  CHECK(plain.output.find(R"({"kind":"pf","m":3,"n":4,"prefs":[1,1,1]})") != std::string::npos);
}

TEST_CASE("sampling is reproducible") {
  std::string cmd = cli_path() + " sample --family pf --m 4 --n 6 --samples 25 --seed 7";
  CommandResult a = run(cmd);
  CommandResult b = run(cmd);
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"algorithm\":\"splitmix64\"") != std::string::npos);

  CommandResult c = run(cmd + " --workers 3");
  CHECK(run(cmd + " --workers 3").output == c.output);
}

TEST_CASE("stats") {
  CommandResult r = run(cli_path() + " stats --input '(8,4,5,1,2,1,1,5,6)'");
  CHECK(r.status == 0);
  CHECK(r.output.find("\"lel\":1") != std::string::npos);
  CHECK(r.output.find("\"ones\":3") != std::string::npos);
  CHECK(r.output.find("\"k_set\":[1,4,6,7]") != std::string::npos);

  CommandResult kk = run(cli_path() + " stats --input '(10,3,2,9,3,1)' --a 2 --b 2");
  CHECK(kk.output.find("\"leading_block\":5") != std::string::npos);
  CHECK(kk.output.find("\"o_set\":[[[2,5],[]]]") != std::string::npos);
}

TEST_CASE("dist emits csv") {
  CommandResult r = run(cli_path() + " dist --family pf --statistic lel --m 2 --n 2");
  CHECK(r.status == 0);
  CHECK(r.output.find("statistic_value,count,frequency") != std::string::npos);
  CHECK(r.output.find("1,2,") != std::string::npos);
  CHECK(r.output.find("2,1,") != std::string::npos);
}

TEST_CASE("errors exit with status 1 and a JSON diagnostic") {
  CommandResult r = run(cli_path() + " stats --input '(2,2)' 2>&1");
  CHECK(r.status == 1);
  CHECK(r.output.find("\"error\":\"NotAParkingFunction\"") != std::string::npos);

  CommandResult cap = run(cli_path() + " count --family pf --m 9 --n 9 --cap 10 2>&1");
  CHECK(cap.status == 1);
  CHECK(cap.output.find("SizeCapExceeded") != std::string::npos);

  // PARKFN_CAP mirrors --cap
  CommandResult env = run("PARKFN_CAP=10 " + cli_path() + " count --family pf --m 9 --n 9 2>&1");
  CHECK(env.status == 1);
  CHECK(env.output.find("SizeCapExceeded") != std::string::npos);
  CommandResult env_ok =
      run("PARKFN_CAP=100 " + cli_path() + " count --family pf --m 2 --n 3 --format csv");
  CHECK(env_ok.status == 0);
  CHECK(env_ok.output == "8\n");
}
