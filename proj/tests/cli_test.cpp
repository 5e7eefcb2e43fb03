// Runs the palfact binary through the shell and checks output and exit codes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef PALFACT_CLI
#error "PALFACT_CLI must name the CLI binary"
#endif

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& stdin_text = "") {
  const std::string cmd = "printf '%s' '" + stdin_text + "' | " PALFACT_CLI " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Result r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("pl") {
  CHECK(run("pl", "abaab\n").out == "2\n");
  CHECK(run("pl", "").out == "0\n");
  CHECK(run("pl --algorithm quadratic", "abaca").out == "3\n");
  CHECK(run("pl --algorithm oracle", "abaca").out == "3\n");

  const auto all = run("pl --all-prefixes", "caaabaaabaaabaaa");
  CHECK(all.status == 0);
  CHECK(all.out == "0\n1\n2\n2\n2\n3\n3\n3\n2\n3\n3\n3\n2\n3\n3\n3\n2\n");
  CHECK(count_lines(all.out) == 17);

  // trailing newline is a symbol only when asked
  CHECK(run("pl --keep-newline", "aa\n").out == "2\n");
  CHECK(run("pl --symbols", "1 2 1 3 1 2 1").out == "1\n");
}

TEST_CASE("pl errors") {
  const auto capped = run("pl --algorithm oracle --oracle-cap 3", "abcd");
  CHECK(capped.status == 2);
  CHECK(run("pl --algorithm nope", "ab").status == 2);
  CHECK(run("pl /nonexistent/file").status == 2);
  CHECK(run("pl --symbols", "1 x").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("factorize") {
  const auto r = run("factorize", "abaca");
  CHECK(r.status == 0);
  std::string joined;
  int parts = 1;
  for (char c : r.out) {
    if (c == '|') ++parts;
    else if (c != '\n') joined += c;
  }
  CHECK(joined == "abaca");
  CHECK(parts == 3);

  CHECK(run("factorize", "a").out == "a\n");
  CHECK(run("factorize", "abaab").out == "a|baab\n");
  CHECK(run("factorize --symbols", "1 2 1 3").out == "1 2 1|3\n");

  const auto j = nlohmann::json::parse(run("factorize --json", "abbaabaabbba").out);
  CHECK(j.at("pl") == 3);
  REQUIRE(j.at("parts").size() == 3);
  CHECK(j.at("parts")[0].at("start") == 1);
  long covered = 0;
  for (const auto& p : j.at("parts")) covered += p.at("length").get<long>();
  CHECK(covered == 12);
}

TEST_CASE("zimin") {
  CHECK(run("zimin 10").out == "1 2 1 3 1 2 1 4 1 2\n");
  const auto empty = run("zimin 0");
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());

  const auto stats = run("zimin 1024 --stats");
  CHECK(stats.status == 0);
  CHECK(stats.out.find("MISMATCH") == std::string::npos);
  CHECK(stats.out.find("# all 1024 rounds match") != std::string::npos);
  CHECK(count_lines(stats.out) == 1 + 1 + 1024 + 1);
}

TEST_CASE("verify") {
  const auto ok = run("verify", "abbaabaabbbaabababbbabaaab");
  CHECK(ok.status == 0);
  CHECK(ok.out.rfind("ok n=26", 0) == 0);
  CHECK(ok.out.find("oracle=checked") != std::string::npos);
  CHECK(run("verify --oracle-cap 4", "abbaabaab").out.find("oracle=skipped") != std::string::npos);
  CHECK(run("verify", "").status == 0);
}

TEST_CASE("bench") {
  const auto csv = run("bench --family zimin --n 16 --csv -");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("# family=zimin n=16", 0) == 0);
  CHECK(csv.out.find("j,gap_triples,triples_processed\n1,1,") != std::string::npos);

  const auto js = run("bench --family random --n 1000 --sigma 4 --seed 3 --json");
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.at("n") == 1000);
  CHECK(j.at("seed") == 3);

  const auto sweep = run("bench --family zimin --log2-sizes 8:12 --jobs 2");
  CHECK(sweep.status == 0);
  CHECK(sweep.out.find("winner: n_log_n") != std::string::npos);

  CHECK(run("bench --family zimin --log2-sizes 8:10").status == 2);  // 3 sizes: refused
  CHECK(run("bench --family file").status == 2);
  CHECK(run("bench --family file --path /nonexistent/x").status == 2);

  const auto quad = run("bench --family repeated --n 1000 --engine quadratic --json");
  CHECK(nlohmann::json::parse(quad.out).at("total_triples") == 500500);
}
