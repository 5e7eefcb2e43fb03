// palfact: palindromic length and minimum palindromic factorization.
//
// Input is a file argument or stdin ("-"). By default each byte is one symbol
// (multibyte UTF-8 characters are treated as their byte sequences) and a
// single trailing newline is dropped; --symbols reads whitespace-separated
// decimal symbols instead.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "palfact/bench.hpp"
#include "palfact/core.hpp"
#include "palfact/fast.hpp"
#include "palfact/generators.hpp"
#include "palfact/naive.hpp"
#include "palfact/reconstruct.hpp"

namespace {

using namespace palfact;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string path = "-";
  bool symbols = false;
  bool keep_newline = false;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("input", in.path, "Input file, '-' for stdin")->capture_default_str();
  cmd->add_flag("--symbols", in.symbols, "Read whitespace-separated decimal symbols");
  cmd->add_flag("--keep-newline", in.keep_newline, "Keep a trailing newline in byte mode");
}

Text read_input(const InputFlags& in) {
  std::string data;
  if (in.path == "-") {
    data.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(in.path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + in.path);
    data.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  if (in.symbols) return parse_symbols(data);
  if (!in.keep_newline && !data.empty() && data.back() == '\n') {
    data.pop_back();
    if (!data.empty() && data.back() == '\r') data.pop_back();
  }
  return Text::from_bytes(data);
}

std::vector<PLRecord> compute(const Text& t, const std::string& algorithm, std::size_t cap) {
  if (algorithm == "quadratic") return pl_quadratic(t);
  if (algorithm == "oracle") return pl_oracle(t, cap);
  return pl_fast(t);
}

std::string render_part(const Text& t, const Part& p, bool symbols) {
  const auto s = t.slice(p.start, p.start + p.length - 1);
  std::string out;
  for (Symbol c : s) {
    if (symbols) {
      if (!out.empty()) out += ' ';
      out += std::to_string(c);
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

struct PlCmd {
  InputFlags in;
  bool all_prefixes = false;
  std::string algorithm = "fast";
  std::size_t oracle_cap = kDefaultOracleCap;

  int run() const {
    const Text t = read_input(in);
    const auto records = compute(t, algorithm, oracle_cap);
    if (all_prefixes) {
      for (const PLRecord& r : records) std::cout << r.pl << '\n';
    } else {
      std::cout << records.back().pl << '\n';
    }
    return kExitOk;
  }
};

struct FactorizeCmd {
  InputFlags in;
  bool json = false;
  std::string algorithm = "fast";

  int run() const {
    const Text t = read_input(in);
    const auto records = algorithm == "quadratic" ? pl_quadratic(t) : pl_fast(t);
    const Factorization f = factorize(t, records);
    if (!verify_factorization(t, f, records.back().pl)) {
      std::cerr << "palfact: factorization failed self-verification\n";
      return kExitVerify;
    }
    if (json) {
      nlohmann::json parts = nlohmann::json::array();
      for (const Part& p : f.parts) parts.push_back({{"start", p.start}, {"length", p.length}});
      std::cout << nlohmann::json{{"pl", records.back().pl}, {"parts", parts}}.dump() << '\n';
      return kExitOk;
    }
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
      if (i) std::cout << '|';
      std::cout << render_part(t, f.parts[i], in.symbols);
    }
    std::cout << '\n';
    return kExitOk;
  }
};

struct ZiminCmd {
  std::uint64_t n = 0;
  bool stats = false;

  int run() const {
    if (n == 0) return kExitOk;
    const Text z = zimin_prefix(n);
    std::cout << format_symbols(z) << '\n';
    if (!stats) return kExitOk;

    Session session({.shadow_check = true, .reserve = n});
    std::uint64_t mismatches = 0;
    std::cout << "# j,gap_triples,bitcount,match\n";
    for (Symbol c : z.symbols()) {
      session.push(c);
      const auto j = static_cast<std::uint64_t>(session.size());
      const std::uint64_t triples = session.gap_list().triples.size();
      const bool match = triples == bitcount(j);
      mismatches += !match;
      std::cout << j << ',' << triples << ',' << bitcount(j) << ',' << (match ? "match" : "MISMATCH")
                << '\n';
    }
    if (mismatches) {
      std::cout << "# " << mismatches << " of " << n << " rounds mismatch\n";
      return kExitVerify;
    }
    std::cout << "# all " << n << " rounds match\n";
    return kExitOk;
  }
};

struct VerifyCmd {
  InputFlags in;
  std::size_t oracle_cap = kDefaultOracleCap;

  int run() const {
    const Text t = read_input(in);
    const auto fast = pl_fast(t, {.shadow_check = true});
    const auto quad = pl_quadratic(t);
    std::optional<std::vector<PLRecord>> oracle;
    if (static_cast<std::size_t>(t.size()) <= oracle_cap) oracle = pl_oracle(t, oracle_cap);

    for (std::size_t j = 0; j < fast.size(); ++j) {
      const bool agree = fast[j].pl == quad[j].pl && (!oracle || (*oracle)[j].pl == fast[j].pl);
      if (!agree) {
        std::cout << "disagreement at prefix " << j << ": fast=" << fast[j].pl
                  << " quadratic=" << quad[j].pl;
        if (oracle) std::cout << " oracle=" << (*oracle)[j].pl;
        std::cout << '\n';
        return kExitVerify;
      }
    }
    for (const auto* records : {&fast, &quad}) {
      const Factorization f = factorize(t, *records);
      if (!verify_factorization(t, f, records->back().pl)) {
        std::cout << "factorization failed verification\n";
        return kExitVerify;
      }
    }
    std::cout << "ok n=" << t.size() << " pl=" << fast.back().pl
              << " oracle=" << (oracle ? "checked" : "skipped") << '\n';
    return kExitOk;
  }
};

struct BenchCmd {
  std::string family = "zimin";
  std::uint64_t n = 1024;
  std::uint64_t sigma = 2;
  std::uint64_t seed = 1;
  unsigned seeds = 1;
  std::string path;
  std::string engine = "fast";
  std::string csv;
  bool json = false;
  std::string log2_sizes;
  unsigned jobs = 1;
  bool shadow_check = false;

  bench::FamilySpec spec_for(std::uint64_t size, std::uint64_t s) const {
    if (family == "zimin") return bench::FamilySpec::zimin(size);
    if (family == "random") return bench::FamilySpec::random(size, sigma, s);
    if (family == "repeated") return bench::FamilySpec::repeated(size);
    return bench::FamilySpec::file(path);
  }

  void print_summary(const bench::RunSummary& s) const {
    if (json) {
      std::cout << bench::summary_json(s) << '\n';
    } else {
      std::cout << "family=" << s.family << " n=" << s.n << " seed=" << s.seed
                << " engine=" << bench::to_string(s.engine) << " total_triples=" << s.total_triples
                << " mean_suffix_palindromes=" << s.mean_suffix_palindromes
                << " final_pl=" << s.final_pl << " wall_ms=" << s.wall_clock_millis << '\n';
    }
  }

  int run() const {
    if (family == "file" && path.empty()) throw UsageError("--family file requires --path");
    if (family == "random") std::cerr << "# prng=" << kPrngName << '\n';
    bench::RunOptions options;
    options.engine = engine == "quadratic" ? bench::Engine::quadratic : bench::Engine::fast;
    options.shadow_check = shadow_check;

    if (!log2_sizes.empty()) return run_sweep(options);

    for (unsigned k = 0; k < seeds; ++k) {
      bench::FamilySpec spec = spec_for(n, seed + k);
      const Text text = bench::materialize(spec);
      spec.n = static_cast<std::uint64_t>(text.size());

      std::unique_ptr<std::ofstream> file;
      std::ostream* out = nullptr;
      if (csv == "-") {
        out = &std::cout;
      } else if (!csv.empty()) {
        const std::string name = seeds > 1 ? csv + "." + std::to_string(seed + k) : csv;
        file = std::make_unique<std::ofstream>(name);
        if (!*file) throw UsageError("cannot write " + name);
        out = file.get();
      }
      if (out) {
        bench::write_csv_header(*out, spec, options.engine);
        options.on_round = [out](const bench::RoundStats& r) { bench::write_csv_row(*out, r); };
      }
      print_summary(bench::run_instrumented(text, spec, options));
    }
    return kExitOk;
  }

  int run_sweep(const bench::RunOptions& options) const {
    unsigned lo = 0, hi = 0;
    char colon = 0;
    std::istringstream is(log2_sizes);
    if (!(is >> lo >> colon >> hi) || colon != ':' || lo > hi || hi > 40) {
      throw UsageError("--log2-sizes expects LO:HI with LO <= HI <= 40");
    }
    if (family == "file") throw UsageError("--log2-sizes does not apply to --family file");
    std::vector<bench::FamilySpec> specs;
    for (unsigned k = lo; k <= hi; ++k) {
      for (unsigned s = 0; s < seeds; ++s) specs.push_back(spec_for(std::uint64_t{1} << k, seed + s));
    }
    const auto summaries = bench::run_many(specs, options, jobs);
    for (const auto& s : summaries) print_summary(s);
    bench::print_scaling_report(std::cout, bench::fit_scaling(summaries));
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Palindromic length and minimum palindromic factorization"};
  app.require_subcommand(1);

  PlCmd pl;
  auto* pl_cmd = app.add_subcommand("pl", "Print the palindromic length");
  add_input_flags(pl_cmd, pl.in);
  pl_cmd->add_flag("--all-prefixes", pl.all_prefixes, "Print PL of every prefix, one per line");
  pl_cmd->add_option("--algorithm", pl.algorithm)
      ->check(CLI::IsMember({"fast", "quadratic", "oracle"}))
      ->capture_default_str();
  pl_cmd->add_option("--oracle-cap", pl.oracle_cap, "Largest input the oracle accepts")
      ->capture_default_str();

  FactorizeCmd fz;
  auto* fz_cmd = app.add_subcommand("factorize", "Print a minimum palindromic factorization");
  add_input_flags(fz_cmd, fz.in);
  fz_cmd->add_flag("--json", fz.json, "Print parts as JSON with 1-based start and length");
  fz_cmd->add_option("--algorithm", fz.algorithm)
      ->check(CLI::IsMember({"fast", "quadratic"}))
      ->capture_default_str();

  ZiminCmd zm;
  auto* zm_cmd = app.add_subcommand("zimin", "Print a prefix of the Zimin word");
  zm_cmd->add_option("n", zm.n, "Prefix length")->required();
  zm_cmd->add_flag("--stats", zm.stats, "Also print per-round gap-list sizes against popcount");

  VerifyCmd vf;
  auto* vf_cmd = app.add_subcommand("verify", "Cross-check all algorithms on every prefix");
  add_input_flags(vf_cmd, vf.in);
  vf_cmd->add_option("--oracle-cap", vf.oracle_cap)->capture_default_str();

  BenchCmd bn;
  auto* bn_cmd = app.add_subcommand("bench", "Run instrumented experiments");
  bn_cmd->add_option("--family", bn.family)
      ->check(CLI::IsMember({"zimin", "random", "repeated", "file"}))
      ->capture_default_str();
  bn_cmd->add_option("--n", bn.n, "Input length")->capture_default_str();
  bn_cmd->add_option("--sigma", bn.sigma, "Alphabet size (random)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bn_cmd->add_option("--seed", bn.seed, "First seed (random)")->capture_default_str();
  bn_cmd->add_option("--seeds", bn.seeds, "Number of consecutive seeds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bn_cmd->add_option("--path", bn.path, "Input file (family file)");
  bn_cmd->add_option("--engine", bn.engine)
      ->check(CLI::IsMember({"fast", "quadratic"}))
      ->capture_default_str();
  bn_cmd->add_option("--csv", bn.csv, "Per-round CSV destination, '-' for stdout");
  bn_cmd->add_flag("--json", bn.json, "Print summaries as JSON lines");
  bn_cmd->add_option("--log2-sizes", bn.log2_sizes, "Sweep n = 2^LO..2^HI and fit scaling models");
  bn_cmd->add_option("--jobs", bn.jobs, "Parallel runs in a sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bn_cmd->add_flag("--shadow-check", bn.shadow_check, "Verify every GPL read");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pl_cmd) return pl.run();
    if (*fz_cmd) return fz.run();
    if (*zm_cmd) return zm.run();
    if (*vf_cmd) return vf.run();
    if (*bn_cmd) return bn.run();
  } catch (const ConsistencyError& e) {
    std::cerr << "palfact: internal consistency failure: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "palfact: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
