#include "palfact/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "palfact/generators.hpp"
#include "palfact/naive.hpp"

namespace palfact::bench {

std::string FamilySpec::describe() const {
  switch (family) {
    case Family::zimin: return "zimin";
    case Family::random: return "random(sigma=" + std::to_string(sigma) + ")";
    case Family::repeated: return "repeated";
    case Family::file: return "file(" + path + ")";
  }
  return "unknown";
}

std::string to_string(Engine e) { return e == Engine::fast ? "fast" : "quadratic"; }

std::string to_string(ScalingModel m) { return m == ScalingModel::linear ? "linear" : "n_log_n"; }

Text materialize(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::zimin: return zimin_prefix(spec.n);
    case Family::random: return random_text(spec.n, spec.sigma, spec.seed);
    case Family::repeated: return repeated_symbol(spec.n);
    case Family::file: {
      std::ifstream in(spec.path, std::ios::binary);
      if (!in) throw IoError("cannot read " + spec.path);
      std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      if (in.bad()) throw IoError("error reading " + spec.path);
      return Text::from_bytes(bytes);
    }
  }
  throw std::invalid_argument("unknown family");
}

RunSummary run_instrumented(const FamilySpec& spec, const RunOptions& options) {
  return run_instrumented(materialize(spec), spec, options);
}

RunSummary run_instrumented(const Text& text, const FamilySpec& spec, const RunOptions& options) {
  using Clock = std::chrono::steady_clock;
  RunSummary s;
  s.n = static_cast<std::uint64_t>(text.size());
  s.family = spec.describe();
  s.seed = spec.seed;
  s.engine = options.engine;

  std::uint64_t suffix_total = 0;
  const auto t0 = Clock::now();

  if (options.engine == Engine::fast) {
    Session session({.shadow_check = options.shadow_check, .reserve = s.n});
    std::uint64_t before = 0;
    for (Symbol c : text.symbols()) {
      session.push(c);
      std::uint64_t suffixes = 0;
      for (const GapTriple& tr : session.gap_list().triples) suffixes += static_cast<std::uint64_t>(tr.count);
      suffix_total += suffixes;
      if (options.on_round) {
        const std::uint64_t now = session.triples_processed();
        options.on_round({session.size(), session.gap_list().triples.size(), now - before, suffixes});
        before = now;
      }
    }
    s.total_triples = session.triples_processed();
    s.final_pl = session.pl();
    s.shadow_checks = session.shadow_checks();
  } else {
    QuadraticStats stats;
    stats.record_set_sizes = true;
    const auto records = pl_quadratic(text, stats);
    for (std::size_t j = 0; j < stats.set_sizes.size(); ++j) {
      const std::uint64_t size = stats.set_sizes[j];
      suffix_total += size;
      if (options.on_round) options.on_round({static_cast<Position>(j + 1), size, size, size});
    }
    s.total_triples = stats.elements_processed;
    s.final_pl = records.back().pl;
  }

  s.wall_clock_millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  s.mean_suffix_palindromes = s.n ? static_cast<double>(suffix_total) / static_cast<double>(s.n) : 0.0;
  return s;
}

std::vector<RunSummary> run_many(std::span<const FamilySpec> specs, const RunOptions& options,
                                 unsigned jobs) {
  if (options.on_round) throw std::invalid_argument("run_many does not stream rounds");
  std::vector<RunSummary> out(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size() && !failed; i = next++) {
      try {
        out[i] = run_instrumented(specs[i], options);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(specs.size())));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void write_csv_header(std::ostream& os, const FamilySpec& spec, Engine engine) {
  os << "# family=" << spec.describe() << " n=" << spec.n;
  if (spec.family == Family::random) os << " seed=" << spec.seed << " prng=" << kPrngName;
  os << " engine=" << to_string(engine) << '\n';
  os << "j,gap_triples,triples_processed\n";
}

void write_csv_row(std::ostream& os, const RoundStats& r) {
  os << r.j << ',' << r.gap_triples << ',' << r.triples_processed << '\n';
}

std::string summary_json(const RunSummary& s) {
  nlohmann::json j = {
      {"n", s.n},
      {"family", s.family},
      {"seed", s.seed},
      {"prng", kPrngName},
      {"engine", to_string(s.engine)},
      {"total_triples", s.total_triples},
      {"mean_suffix_palindromes", s.mean_suffix_palindromes},
      {"wall_clock_millis", s.wall_clock_millis},
      {"final_pl", s.final_pl},
  };
  return j.dump();
}

ScalingReport fit_scaling(std::span<const RunSummary> summaries) {
  std::map<std::uint64_t, std::pair<double, int>> by_n;
  for (const RunSummary& s : summaries) {
    auto& [sum, runs] = by_n[s.n];
    sum += static_cast<double>(s.total_triples);
    ++runs;
  }
  if (by_n.size() < 4) {
    throw ScalingError("need at least 4 distinct sizes, got " + std::to_string(by_n.size()));
  }
  std::vector<std::uint64_t> sizes;
  for (const auto& [n, _] : by_n) sizes.push_back(n);
  if (sizes.front() < 2) throw ScalingError("sizes must be at least 2");
  for (std::size_t i = 1; i + 1 < sizes.size(); ++i) {
    const unsigned __int128 outer = static_cast<unsigned __int128>(sizes[i - 1]) * sizes[i + 1];
    const unsigned __int128 inner = static_cast<unsigned __int128>(sizes[i]) * sizes[i];
    if (outer != inner) throw ScalingError("sizes are not in geometric progression");
  }

  ScalingReport report;
  // For model y ≈ c·f(n), minimizing Σ((y - c f)/y)² gives c = Σa / Σa², a = f/y.
  auto fit = [&](auto f, double& coef, double& residual) {
    double sa = 0, saa = 0;
    for (const auto& [n, acc] : by_n) {
      const double y = acc.first / acc.second;
      const double a = f(static_cast<double>(n)) / y;
      sa += a;
      saa += a * a;
    }
    coef = sa / saa;
    double sq = 0;
    for (const auto& [n, acc] : by_n) {
      const double y = acc.first / acc.second;
      const double rel = 1.0 - coef * f(static_cast<double>(n)) / y;
      sq += rel * rel;
    }
    residual = std::sqrt(sq / static_cast<double>(by_n.size()));
  };
  fit([](double n) { return n; }, report.linear_coef, report.linear_residual);
  fit([](double n) { return n * std::log2(n); }, report.n_log_n_coef, report.n_log_n_residual);
  report.winner = report.n_log_n_residual < report.linear_residual ? ScalingModel::n_log_n
                                                                    : ScalingModel::linear;
  for (const auto& [n, acc] : by_n) {
    const double y = acc.first / acc.second;
    const double dn = static_cast<double>(n);
    report.rows.push_back({n, y, y / dn, y / (dn * std::log2(dn))});
  }
  return report;
}

void print_scaling_report(std::ostream& os, const ScalingReport& r) {
  os << std::setw(10) << "n" << std::setw(16) << "mean_total" << std::setw(12) << "total/n"
     << std::setw(16) << "total/nlog2n" << '\n';
  for (const ScalingRow& row : r.rows) {
    os << std::setw(10) << row.n << std::setw(16) << std::fixed << std::setprecision(1)
       << row.mean_total << std::setw(12) << std::setprecision(4) << row.per_n << std::setw(16)
       << row.per_n_log_n << '\n';
  }
  os << std::setprecision(6) << "linear:  coef=" << r.linear_coef
     << " rms_rel_residual=" << r.linear_residual << '\n'
     << "n_log_n: coef=" << r.n_log_n_coef << " rms_rel_residual=" << r.n_log_n_residual << '\n'
     << "winner: " << to_string(r.winner) << '\n';
  os.unsetf(std::ios::floatfield);
}

}  // namespace palfact::bench
