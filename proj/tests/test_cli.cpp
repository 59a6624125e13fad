#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(DOMGAME_CLI) + " " + args + " 2>/dev/null";
  if (!input.empty()) cmd = "printf '" + input + "' | " + cmd;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string last_line(const std::string& s) {
  auto end = s.find_last_not_of('\n');
  auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("solve") {
  auto r = run("solve --graph cycle:8 --variant ddg --start dom");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["winner"] == "sepy");
  r = run("solve --graph union:cycle:4+cycle:8 --start sepy --pass sepy");
  CHECK(nlohmann::json::parse(r.out)["winner"] == "sepy");
  r = run("solve --graph cycle:8 --variant bdg --start sepy");
  CHECK(nlohmann::json::parse(r.out)["winner"] == "dom");
  CHECK(run("solve --graph cycle:8 --start dom").out == run("solve --graph cycle:8 --start dom").out);
  CHECK(run("solve --graph cycle:9 --cap 8").code == 2);
  CHECK(run("solve --graph wheel:3").code == 1);
  CHECK(run("solve --graph cycle:4 --g6 C~").code == 1);
  CHECK(run("solve --graph cycle:4 --variant xyz").code == 1);
}

TEST_CASE("verify") {
  CHECK(run("verify --strategy ons --role dom --start sepy --corpus connected:6").code == 0);
  auto r = run("verify --strategy sepy-cycle --role sepy --graph cycle:9 --start dom");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["verified"] == true);
  CHECK(run("verify --strategy bdg-matching --role dom --graph path:3 --variant bdg").code == 3);
  CHECK(run("verify --strategy solver --role dom --graph cycle:8 --start dom").code == 1);
  CHECK(run("verify --strategy sepy-subdiv --role sepy --graph subdiv2:complete:4 --start dom").code == 0);
  CHECK(run("verify --strategy nonsense --graph cycle:8").code == 1);
}

TEST_CASE("play") {
  auto r = run("play --graph cycle:8 --start dom --dom random --sepy cycle --seed 1");
  CHECK(r.code == 0);
  auto fin = nlohmann::json::parse(last_line(r.out));
  CHECK(fin["winner"] == "sepy");
  CHECK(fin["plies"] <= 4);
  r = run("play --graph complete:4 --variant bdg --dom bdg-matching --sepy random --seed 2");
  CHECK(nlohmann::json::parse(last_line(r.out))["winner"] == "dom");
  CHECK(run("play --graph cycle:8 --dom random --sepy random --seed 4").out ==
        run("play --graph cycle:8 --dom random --sepy random --seed 4").out);
  // Garbage is re-prompted; end of input aborts.
  r = run("play --graph path:4 --dom human --sepy greedy", "9 red\\n");
  CHECK(r.code == 4);
  std::string every_move;
  for (int round = 0; round < 4; ++round) {
    for (int v = 0; v < 4; ++v) every_move += std::to_string(v) + " p\\n" + std::to_string(v) + " blue\\n";
  }
  r = run("play --graph path:4 --start dom --dom human --sepy solver", every_move);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(last_line(r.out)).contains("winner"));
  CHECK(run("play --graph cycle:8 --start sepy --dom sepy-cycle --sepy random").code == 3);
}

TEST_CASE("gen and suite") {
  Run r;
  CHECK(run("gen --graph complete:4").out == "C~\n");
  CHECK(run("gen --graph path:3 --format edges").out == "3 2\n0 1\n1 2\n");
  r = run("gen --corpus connected:3");
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  r = run("suite --only cycles");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS  1 cycles", 0) == 0);
  CHECK(r.out.find('\n') == r.out.size() - 1);
}
