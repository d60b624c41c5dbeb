#include "ndmap/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ndmap/errors.hpp"
#include "ndmap/experiments.hpp"
#include "ndmap/linalg.hpp"
#include "ndmap/spectrum.hpp"

namespace ndmap::cli {
namespace {

using nlohmann::json;

std::string real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// nlohmann renders doubles with the shortest round-trip form.
json json_real(double value) { return value; }

SweepOptions sweep_options(const RunConfig& config) {
  SweepOptions options;
  options.k = config.k;
  options.J = config.J();
  options.delta = config.tol;
  options.guard = config.guard;
  options.threads = config.threads;
  return options;
}

ProblemParams problem_params(const RunConfig& config, double a) {
  return ProblemParams{config.k, a, config.J(), config.guard};
}

void write_sweep(const RunConfig& config, std::ostream& out) {
  const auto grid = b_values(config);
  const auto points = sweep(config.a, grid, sweep_options(config));
  if (config.format == Format::csv) {
    out << "b,measured_negative,theoretical_bound,min_eigenvalue,"
           "max_eigenvalue,skipped\n";
    for (const auto& p : points) {
      out << real(p.b);
      if (p.skipped()) {
        out << ",,,,,1\n";
        continue;
      }
      const auto& r = *p.report;
      out << ',' << r.measured_negative << ',' << r.theoretical_bound << ','
          << real(r.min_eigenvalue) << ',' << real(r.max_eigenvalue) << ",0\n";
    }
    return;
  }
  json rows = json::array();
  for (const auto& p : points) {
    json row{{"b", json_real(p.b)}, {"skipped", p.skipped()}};
    if (p.skipped()) {
      row["measured_negative"] = nullptr;
      row["theoretical_bound"] = nullptr;
      row["min_eigenvalue"] = nullptr;
      row["max_eigenvalue"] = nullptr;
    } else {
      const auto& r = *p.report;
      row["measured_negative"] = r.measured_negative;
      row["theoretical_bound"] = r.theoretical_bound;
      row["min_eigenvalue"] = json_real(r.min_eigenvalue);
      row["max_eigenvalue"] = json_real(r.max_eigenvalue);
    }
    rows.push_back(std::move(row));
  }
  out << json{{"command", "sweep"},
              {"a", json_real(config.a)},
              {"k", json_real(config.k)},
              {"size", config.size},
              {"tol", json_real(config.tol)},
              {"points", rows}}
             .dump(2)
      << '\n';
}

void write_trajectories(const RunConfig& config, std::ostream& out) {
  const auto grid = b_values(config);
  const auto points = trajectories(config.a, grid, sweep_options(config));
  if (config.format == Format::csv) {
    out << "b,index,eigenvalue\n";
    for (const auto& p : points) {
      for (std::size_t i = 0; i < p.eigenvalues.size(); ++i) {
        out << real(p.b) << ',' << i << ',' << real(p.eigenvalues[i]) << '\n';
      }
    }
    return;
  }
  json rows = json::array();
  for (const auto& p : points) {
    json ev = json::array();
    for (double v : p.eigenvalues) ev.push_back(json_real(v));
    rows.push_back({{"b", json_real(p.b)},
                    {"skipped", p.skipped},
                    {"eigenvalues", std::move(ev)}});
  }
  out << json{{"command", "trajectories"},
              {"a", json_real(config.a)},
              {"k", json_real(config.k)},
              {"size", config.size},
              {"points", rows}}
             .dump(2)
      << '\n';
}

void write_crossing(const RunConfig& config, std::ostream& out) {
  const auto report = verify_crossing(config.n, config.eps, sweep_options(config));
  if (config.format == Format::csv) {
    out << "n,center,eps,expected,measured,agrees\n";
    for (const auto& attempt : report.attempts) {
      out << report.n << ',' << real(report.center) << ',' << real(attempt.eps)
          << ',' << report.expected << ',' << attempt.measured << ','
          << (attempt.measured == report.expected ? 1 : 0) << '\n';
    }
    return;
  }
  json attempts = json::array();
  for (const auto& attempt : report.attempts) {
    attempts.push_back(
        {{"eps", json_real(attempt.eps)}, {"measured", attempt.measured}});
  }
  out << json{{"command", "crossing"},
              {"n", report.n},
              {"center", json_real(report.center)},
              {"expected", report.expected},
              {"measured", report.measured},
              {"agrees", report.agrees()},
              {"attempts", attempts}}
             .dump(2)
      << '\n';
}

void write_bound(const RunConfig& config, std::ostream& out) {
  const auto bound = bound_delta(config.a, *config.b, config.k, config.guard);
  if (config.format == Format::csv) {
    out << bound << '\n';
    return;
  }
  out << json{{"command", "bound"},
              {"a", json_real(config.a)},
              {"b", json_real(*config.b)},
              {"k", json_real(config.k)},
              {"bound", bound}}
             .dump(2)
      << '\n';
}

void write_assemble_dump(const RunConfig& config, std::ostream& out) {
  const ProblemParams params = problem_params(config, config.a);
  const NdMatrix matrix = config.method == AssemblyMethod::closed_form
                              ? assemble(params)
                              : assemble_series_oracle(params, config.series_cutoff);
  if (config.format == Format::csv) {
    write_dump(out, matrix);
    return;
  }
  json rows = json::array();
  for (Eigen::Index s = 0; s < matrix.size(); ++s) {
    json row = json::array();
    for (Eigen::Index t = 0; t < matrix.size(); ++t) {
      row.push_back(json_real(matrix(s, t)));
    }
    rows.push_back(std::move(row));
  }
  out << json{{"size", matrix.size()},
              {"k", json_real(config.k)},
              {"a", json_real(config.a)},
              {"method", matrix.method_name()},
              {"entries", rows}}
             .dump()
      << '\n';
}

void write_truncation_check(const RunConfig& config, std::ostream& out) {
  const ProblemParams params = problem_params(config, config.a);
  const double err_a = truncation_error(params);
  std::optional<double> err_b;
  std::optional<double> err_diff;
  if (config.b) {
    err_b = truncation_error(params.with_a(*config.b));
    err_diff = truncation_error_difference(params, *config.b);
  }
  if (config.format == Format::csv) {
    out << "a,b,k,size,truncation_a,truncation_b,truncation_difference\n";
    out << real(config.a) << ',' << (config.b ? real(*config.b) : "") << ','
        << real(config.k) << ',' << config.size << ',' << real(err_a) << ','
        << (err_b ? real(*err_b) : "") << ','
        << (err_diff ? real(*err_diff) : "") << '\n';
    return;
  }
  auto opt = [](const std::optional<double>& v) {
    return v ? json_real(*v) : json(nullptr);
  };
  out << json{{"command", "truncation-check"},
              {"a", json_real(config.a)},
              {"b", opt(config.b)},
              {"k", json_real(config.k)},
              {"size", config.size},
              {"truncation_a", json_real(err_a)},
              {"truncation_b", opt(err_b)},
              {"truncation_difference", opt(err_diff)}}
             .dump(2)
      << '\n';
}

void dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::sweep:
      return write_sweep(config, out);
    case Command::trajectories:
      return write_trajectories(config, out);
    case Command::crossing:
      return write_crossing(config, out);
    case Command::bound:
      return write_bound(config, out);
    case Command::assemble_dump:
      return write_assemble_dump(config, out);
    case Command::truncation_check:
      return write_truncation_check(config, out);
  }
}

void add_common(CLI::App& sub, RunConfig& config) {
  sub.add_option("--k", config.k, "Wavenumber")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--size", config.size, "Matrix dimension 4J")
      ->check(CLI::PositiveNumber)
      ->check(CLI::Validator(
          [](const std::string& s) -> std::string {
            return std::stoi(s) % 4 == 0 ? "" : "size must be divisible by 4";
          },
          "MULTIPLE OF 4"))
      ->capture_default_str();
  sub.add_option("--tol", config.tol, "Negative-eigenvalue threshold delta")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--guard", config.guard, "Resonance guard on a*k^2")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--out", config.out, "Output file (default: stdout)");
  sub.add_option("--format", config.format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::csv},
                                        {"json", Format::json}}))
      ->option_text("csv|json");
  sub.add_option("--threads", config.threads, "Worker threads (0 = auto)");
}

void add_b_range(CLI::App& sub, RunConfig& config) {
  auto* b = sub.add_option("--b", config.b, "Single b value");
  auto* bmin = sub.add_option("--b-min", config.b_min, "First b (default a)");
  auto* bmax = sub.add_option("--b-max", config.b_max, "Last b (default 200)");
  auto* step = sub.add_option("--b-step", config.b_step, "Grid step")
                   ->check(CLI::PositiveNumber)
                   ->capture_default_str();
  b->excludes(bmin)->excludes(bmax)->excludes(step);
}

}  // namespace

std::vector<double> b_values(const RunConfig& config) {
  if (config.b) return {*config.b};
  return make_grid(config.b_min.value_or(config.a),
                   config.b_max.value_or(kDefaultBMax), config.b_step);
}

ParseOutcome parse(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  RunConfig config;
  CLI::App app{"Neumann-to-Dirichlet matrices on the unit square"};
  app.require_subcommand(1);

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Negative counts of Lambda(b)-Lambda(a) against d(b)-d(a)");
  sweep_cmd->add_option("--a", config.a, "Reference coefficient")->required();
  add_b_range(*sweep_cmd, config);
  add_common(*sweep_cmd, config);

  auto* traj_cmd = app.add_subcommand(
      "trajectories", "Full spectrum of Lambda(b)-Lambda(a) per b");
  traj_cmd->add_option("--a", config.a, "Reference coefficient")->required();
  add_b_range(*traj_cmd, config);
  add_common(*traj_cmd, config);

  auto* crossing_cmd = app.add_subcommand(
      "crossing", "Negative count across the Neumann eigenvalue pi^2 n");
  crossing_cmd->add_option("--n", config.n, "l^2 + m^2 of the crossing")
      ->required();
  crossing_cmd->add_option("--eps", config.eps, "Half-width of the window")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(*crossing_cmd, config);

  auto* bound_cmd = app.add_subcommand("bound", "Lattice count d(b)-d(a)");
  bound_cmd->add_option("--a", config.a, "Lower coefficient")->required();
  bound_cmd->add_option("--b", config.b, "Upper coefficient")->required();
  add_common(*bound_cmd, config);

  auto* dump_cmd =
      app.add_subcommand("assemble-dump", "Write the ND matrix for Lambda(a)");
  dump_cmd->add_option("--a", config.a, "Coefficient")->required();
  dump_cmd->add_option("--method", config.method, "closed_form or series_oracle")
      ->transform(CLI::CheckedTransformer(std::map<std::string, AssemblyMethod>{
          {"closed_form", AssemblyMethod::closed_form},
          {"series_oracle", AssemblyMethod::series_oracle}}))
      ->option_text("closed_form|series_oracle");
  dump_cmd->add_option("--series-cutoff", config.series_cutoff,
                       "Mode cutoff for series_oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(*dump_cmd, config);

  auto* trunc_cmd = app.add_subcommand(
      "truncation-check", "Spectral-norm truncation estimate at J versus J/2");
  trunc_cmd->add_option("--a", config.a, "Coefficient")->required();
  trunc_cmd->add_option("--b", config.b, "Optional second coefficient");
  add_common(*trunc_cmd, config);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return {std::nullopt, kExitUsage};
  }

  if (*sweep_cmd) config.command = Command::sweep;
  if (*traj_cmd) config.command = Command::trajectories;
  if (*crossing_cmd) config.command = Command::crossing;
  if (*bound_cmd) config.command = Command::bound;
  if (*dump_cmd) config.command = Command::assemble_dump;
  if (*trunc_cmd) config.command = Command::truncation_check;
  return {config, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buffer;
    dispatch(config, buffer);
    if (config.out.empty()) {
      out << buffer.str();
      return kExitOk;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file " << config.out << '\n';
      return kExitPrecondition;
    }
    file << buffer.str();
    if (!file.flush()) {
      err << "error: failed writing " << config.out << '\n';
      return kExitPrecondition;
    }
    return kExitOk;
  } catch (const ResonanceError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitPrecondition;
}

int main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  const ParseOutcome parsed = parse(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace ndmap::cli
