// adiasearch: spectra, schedules, exact dynamics, Grover crossing times,
// protocol Monte Carlo and bounded-resource runtimes as CSV / JSON.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "adiasearch/errors.hpp"
#include "commands.hpp"

namespace {

enum ExitCode : int { kOk = 0, kArgumentError = 2, kNumericalError = 3, kIoError = 4 };

using adiasearch::cli::OutputFormat;

// Renders into memory first so a failed computation never leaves a partial file.
void emit(const std::string& path, const std::function<void(std::ostream&)>& produce) {
  std::ostringstream buffer;
  produce(buffer);
  if (path.empty() || path == "-") {
    std::cout << buffer.str();
    std::cout.flush();
    if (!std::cout) throw adiasearch::cli::IoError("failed writing to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw adiasearch::cli::IoError("cannot open '" + path + "' for writing");
  file << buffer.str();
  file.close();
  if (!file) throw adiasearch::cli::IoError("failed writing '" + path + "'");
}

const std::map<std::string, adiasearch::ScheduleKind> kScheduleNames = {
    {"proposed", adiasearch::ScheduleKind::Proposed},
    {"original", adiasearch::ScheduleKind::Original},
    {"linear", adiasearch::ScheduleKind::Linear}};

const std::map<std::string, OutputFormat> kFormatNames = {{"csv", OutputFormat::Csv},
                                                          {"json", OutputFormat::Json}};

void add_format(CLI::App* cmd, OutputFormat& format) {
  cmd->add_option_function<std::string>(
         "--format", [&format](const std::string& v) { format = kFormatNames.at(v); },
         "csv | json")
      ->check(CLI::IsMember(kFormatNames));
}

void add_schedule(CLI::App* cmd, adiasearch::ScheduleKind& kind) {
  cmd->add_option_function<std::string>(
         "--schedule", [&kind](const std::string& v) { kind = kScheduleNames.at(v); },
         "proposed | original | linear")
      ->check(CLI::IsMember(kScheduleNames));
}

void add_tolerances(CLI::App* cmd, adiasearch::cli::Tolerances& tol) {
  cmd->add_option("--atol", tol.atol, "Absolute integrator tolerance")->capture_default_str();
  cmd->add_option("--rtol", tol.rtol, "Relative integrator tolerance")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = adiasearch::cli;

  CLI::App app{"Adiabatic unstructured search: schedules, dynamics and runtime analysis"};
  app.require_subcommand(1);
  std::string out_path;

  cli::SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Ground/excited energies, gap and q(s)");
  spectrum_cmd->add_option("--n", spectrum.n, "Qubit count")->required();
  spectrum_cmd->add_option("--samples", spectrum.samples, "Number of s samples")->capture_default_str();
  spectrum_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_format(spectrum_cmd, spectrum.format);

  cli::ScheduleArgs schedule;
  auto* schedule_cmd = app.add_subcommand("schedule", "s(tau) and ideal probability q(tau)");
  add_schedule(schedule_cmd, schedule.kind);
  schedule_cmd->add_option("--n", schedule.n, "Qubit count")->required();
  schedule_cmd->add_option("--eps", schedule.eps, "Diabaticity")->capture_default_str();
  schedule_cmd->add_option("--samples", schedule.samples, "Number of tau samples")->capture_default_str();
  schedule_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_format(schedule_cmd, schedule.format);

  cli::SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Exact p(tau) and eps(tau) trajectories");
  add_schedule(simulate_cmd, simulate.kind);
  simulate_cmd->add_option("--n", simulate.n, "Qubit count")->required();
  simulate_cmd->add_option("--eps", simulate.eps, "Diabaticity")->capture_default_str();
  simulate_cmd->add_option("--samples", simulate.samples, "Grid points over [0, 1]")->capture_default_str();
  add_tolerances(simulate_cmd, simulate.tol);
  simulate_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_format(simulate_cmd, simulate.format);

  cli::CrossingArgs crossing;
  double crossing_eps = 0.0;
  auto* crossing_cmd = app.add_subcommand("crossing", "Time after which p_a exceeds Grover's p_g");
  crossing_cmd->add_option("--n", crossing.n_list, "Qubit counts, e.g. 10,12,14")
      ->required()
      ->delimiter(',');
  crossing_cmd->add_option("--k", crossing.k, "Grover iterations per time unit")->capture_default_str();
  auto* crossing_eps_opt =
      crossing_cmd->add_option("--eps", crossing_eps, "Override the matched diabaticity");
  crossing_cmd->add_option("--samples", crossing.samples, "Scan points over the window")->capture_default_str();
  add_tolerances(crossing_cmd, crossing.tol);
  crossing_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_format(crossing_cmd, crossing.format);

  cli::ProtocolArgs protocol;
  auto* protocol_cmd = app.add_subcommand("protocol", "Truncated evolution plus seeded Monte Carlo");
  protocol_cmd->add_option("--n", protocol.n, "Qubit count")->required();
  protocol_cmd->add_option("--eps", protocol.eps, "Diabaticity")->capture_default_str();
  protocol_cmd->add_option("--p", protocol.p, "Target success probability")->required();
  protocol_cmd->add_option("--trials", protocol.trials, "Monte Carlo measurements")->capture_default_str();
  protocol_cmd->add_option("--seed", protocol.seed, "PRNG seed")->capture_default_str();
  add_tolerances(protocol_cmd, protocol.tol);
  protocol_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_format(protocol_cmd, protocol.format);

  cli::ResourcesArgs resources;
  auto* resources_cmd = app.add_subcommand("resources", "Runtime under S processors and coherence t_c");
  resources_cmd->add_option("--n", resources.n, "Qubit count")->required();
  resources_cmd->add_option("--eps", resources.eps, "Diabaticity")->capture_default_str();
  resources_cmd->add_option("--S", resources.processors, "Processors (0 = unbounded)")->capture_default_str();
  resources_cmd->add_option("--tc", resources.t_c, "Coherence time")->required();
  resources_cmd->add_option("--alpha", resources.alpha, "Failure probability")->capture_default_str();
  resources_cmd->add_option("--c", resources.overhead, "Constant overhead per run")->capture_default_str();
  resources_cmd->add_option("--k", resources.k, "Grover iterations per time unit")->capture_default_str();
  resources_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_format(resources_cmd, resources.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kArgumentError;
  }

  try {
    if (*spectrum_cmd) {
      emit(out_path, [&](std::ostream& o) { cli::cmd_spectrum(spectrum, o); });
    } else if (*schedule_cmd) {
      emit(out_path, [&](std::ostream& o) { cli::cmd_schedule(schedule, o); });
    } else if (*simulate_cmd) {
      emit(out_path, [&](std::ostream& o) { cli::cmd_simulate(simulate, o); });
    } else if (*crossing_cmd) {
      if (*crossing_eps_opt) crossing.eps = crossing_eps;
      emit(out_path, [&](std::ostream& o) { cli::cmd_crossing(crossing, o); });
    } else if (*protocol_cmd) {
      emit(out_path, [&](std::ostream& o) { cli::cmd_protocol(protocol, o); });
    } else if (*resources_cmd) {
      emit(out_path, [&](std::ostream& o) { cli::cmd_resources(resources, o); });
    }
  } catch (const cli::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const adiasearch::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::logic_error& e) {
    // DomainError, UnsupportedModelError and SizeError are all logic errors.
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kArgumentError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
  return kOk;
}
