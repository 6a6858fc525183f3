#include "quadcycle/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "quadcycle/error.hpp"
#include "quadcycle/report.hpp"
#include "quadcycle/verification.hpp"

namespace quadcycle::cli {

namespace {

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_dev(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string map_echo(const QuadraticMap& m) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "a=%.17g b=%.17g c=%.17g", m.a(), m.b(), m.c());
  return buf;
}

void write_row(Family family, double param, std::ostream& out) {
  std::vector<std::string> cols(13);
  cols[0] = fmt12(param);
  try {
    const AnalysisReport report = analyze(family_map(family, param));
    cols[1] = fmt12(report.delta.value);
    cols[2] = std::string(to_string(report.existence));
    for (const BranchReport& br : report.branches) {
      const bool minus = br.cycle.branch == Branch::MinusDelta;
      cols[minus ? 4 : 3] = fmt12(br.stability.multiplier);
      cols[minus ? 6 : 5] = std::string(to_string(br.stability.verdict));
      for (std::size_t i = 0; i < 3; ++i) cols[(minus ? 10 : 7) + i] = fmt12(br.cycle.points[i]);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidMap && e.code() != ErrorCode::DegenerateFamily) throw;
    cols[2] = "InvalidMap";
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i > 0) out << ',';
    out << cols[i];
  }
  out << '\n';
}

void print_verification(const QuadraticMap& m, const VerificationResult& r, std::ostream& out) {
  const auto tag = [](bool ok) { return ok ? "[PASS] " : "[FAIL] "; };
  out << "map " << map_echo(m) << " delta=" << fmt12(r.delta) << '\n';
  if (!r.error.empty()) out << "[FAIL] error: " << r.error << '\n';
  out << tag(r.counts_agree()) << "existence: closed form " << to_string(r.existence) << ", oracle "
      << r.oracle_cycles << " cycle(s)\n";
  out << tag(r.points_agree()) << "points: max deviation " << fmt_dev(r.point_deviation) << " (tol "
      << fmt_dev(r.point_tolerance) << ")\n";
  out << tag(r.multipliers_agree()) << "multipliers: max deviation " << fmt_dev(r.multiplier_deviation)
      << " (tol " << fmt_dev(r.multiplier_tolerance) << ")\n";
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
}

int verify_random(long long count, std::uint64_t seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::array<int, 3> by_class{};
  int failures = 0;
  double max_points = 0.0;
  double max_mult = 0.0;
  for (long long i = 0; i < count; ++i) {
    const QuadraticMap m = random_map(rng);
    const VerificationResult r = verify_map(m);
    ++by_class[static_cast<std::size_t>(cycle_count(r.existence))];
    if (r.error.empty()) {
      max_points = std::max(max_points, r.point_deviation);
      max_mult = std::max(max_mult, r.multiplier_deviation);
    }
    if (!r.passed()) {
      ++failures;
      print_verification(m, r, out);
    }
  }
  out << "maps: " << count << "  seed: " << seed << "  failures: " << failures << '\n';
  out << "existence: NoCycles=" << by_class[0] << " UniqueCycle=" << by_class[1]
      << " TwoCycles=" << by_class[2] << '\n';
  out << "max point deviation: " << fmt_dev(max_points) << " (tol " << fmt_dev(kPointMatchTolerance) << ")\n";
  out << "max multiplier deviation: " << fmt_dev(max_mult) << " (tol " << fmt_dev(kMultiplierMatchTolerance)
      << ")\n";
  out << (failures == 0 ? "PASS" : "FAIL") << '\n';
  return failures == 0 ? kExitOk : kExitFailure;
}

void emit_json(const AnalysisReport& report, bool compact, std::ostream& out) {
  out << (compact ? to_json(report).dump() : to_json(report).dump(2)) << '\n';
}

}  // namespace

std::size_t write_sweep(Family family, double from, double to, double step, std::ostream& out) {
  out << kSweepHeader << '\n';
  if (!(step > 0.0) || !std::isfinite(from) || !std::isfinite(to) || to < from) return 0;
  const auto rows = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < rows; ++i) write_row(family, from + static_cast<double>(i) * step, out);
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Existence, location and stability of 3-cycles of x -> ax^2 + bx + c"};
  app.name("quadcycle");
  app.require_subcommand(1);

  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double lambda = 0.0;
  bool compact = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Classify the 3-cycles of one map (JSON)");
  analyze_cmd->add_option("--a", a, "quadratic coefficient")->required();
  analyze_cmd->add_option("--b", b, "linear coefficient")->required();
  analyze_cmd->add_option("--c", c, "constant term")->required();
  analyze_cmd->add_flag("--compact", compact, "single-line JSON");

  auto* offset_cmd = app.add_subcommand("analyze-offset", "Analyze x^2 + c (JSON)");
  offset_cmd->add_option("--c", c, "offset")->required();
  offset_cmd->add_flag("--compact", compact, "single-line JSON");

  auto* logistic_cmd = app.add_subcommand("analyze-logistic", "Analyze lambda x (1 - x) (JSON)");
  logistic_cmd->add_option("--lambda", lambda, "logistic parameter")->required();
  logistic_cmd->add_flag("--compact", compact, "single-line JSON");

  std::string family_name;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep of a classical family (CSV)");
  sweep_cmd->add_option("family", family_name, "offset | logistic")
      ->required()
      ->check(CLI::IsMember({"offset", "logistic"}));
  sweep_cmd->add_option("--from", from, "first parameter value")->required();
  sweep_cmd->add_option("--to", to, "last parameter value (inclusive)")->required();
  sweep_cmd->add_option("--step", step, "grid spacing, > 0")->required();
  sweep_cmd->add_option("--out", out_path, "output file (default: standard output)");

  long long random_count = 0;
  std::uint64_t seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the closed form with the brute-force oracle");
  auto* va = verify_cmd->add_option("--a", a, "quadratic coefficient");
  auto* vb = verify_cmd->add_option("--b", b, "linear coefficient");
  auto* vc = verify_cmd->add_option("--c", c, "constant term");
  auto* vr = verify_cmd->add_option("--random", random_count, "number of random maps");
  verify_cmd->add_option("--seed", seed, "seed for --random");
  vr->excludes(va)->excludes(vb)->excludes(vc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      emit_json(analyze(QuadraticMap(a, b, c)), compact, out);
    } else if (offset_cmd->parsed()) {
      emit_json(analyze_family(Family::Offset, c), compact, out);
    } else if (logistic_cmd->parsed()) {
      emit_json(analyze_family(Family::Logistic, lambda), compact, out);
    } else if (sweep_cmd->parsed()) {
      if (!(step > 0.0) || !std::isfinite(from) || !std::isfinite(to)) {
        err << "sweep: --step must be positive and the range finite\n";
        return kExitUsage;
      }
      const Family family = family_name == "offset" ? Family::Offset : Family::Logistic;
      if (out_path.empty()) {
        write_sweep(family, from, to, step, out);
      } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
          err << "sweep: cannot write " << out_path << '\n';
          return kExitFailure;
        }
        write_sweep(family, from, to, step, file);
        file.flush();
        if (!file) {
          err << "sweep: write to " << out_path << " failed\n";
          return kExitFailure;
        }
      }
    } else if (verify_cmd->parsed()) {
      if (vr->count() > 0) {
        if (random_count < 1) {
          err << "verify: --random needs N >= 1\n";
          return kExitUsage;
        }
        return verify_random(random_count, seed, out);
      }
      if (va->count() == 0 || vb->count() == 0 || vc->count() == 0) {
        err << "verify: give --a, --b and --c, or --random N [--seed S]\n";
        return kExitUsage;
      }
      const QuadraticMap m(a, b, c);
      const VerificationResult r = verify_map(m);
      print_verification(m, r, out);
      return r.passed() ? kExitOk : kExitFailure;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidMap || e.code() == ErrorCode::DegenerateFamily) {
      err << e.what() << '\n';
      return kExitUsage;
    }
    err << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace quadcycle::cli
