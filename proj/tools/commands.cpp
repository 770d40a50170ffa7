#include "commands.hpp"

#include <atomic>
#include <cstdio>
#include <string>
#include <thread>
#include <utility>

#include "json.hpp"

#include "adiasearch/analysis.hpp"
#include "adiasearch/dynamics.hpp"
#include "adiasearch/errors.hpp"
#include "adiasearch/grover.hpp"
#include "adiasearch/spectral.hpp"

namespace adiasearch::cli {
namespace {

using json = nlohmann::ordered_json;

// Column-oriented numeric table with `# key=value` metadata.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::Csv) {
      for (const auto& [key, value] : metadata) out << "# " << key << '=' << value << '\n';
      for (std::size_t j = 0; j < columns.size(); ++j) out << (j ? "," : "") << columns[j];
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
        out << '\n';
      }
      return;
    }
    json doc;
    json meta = json::object();
    for (const auto& [key, value] : metadata) meta[key] = value;
    doc["metadata"] = meta;
    json records = json::array();
    for (const auto& row : rows) {
      json record = json::object();
      for (std::size_t j = 0; j < row.size(); ++j) record[columns[j]] = row[j];
      records.push_back(std::move(record));
    }
    doc["rows"] = std::move(records);
    out << doc.dump(2) << '\n';
  }
};

void require_samples(int samples) {
  detail::require(samples >= 2, "--samples must be at least 2");
}

IvpConfig ivp_config(const Tolerances& tol) {
  IvpConfig cfg;
  cfg.atol = tol.atol;
  cfg.rtol = tol.rtol;
  cfg.validate();
  return cfg;
}

// Writes a single JSON record, or a one-row CSV with the same keys.
void write_record(std::ostream& out, const json& record, OutputFormat format) {
  if (format == OutputFormat::Json) {
    out << record.dump(2) << '\n';
    return;
  }
  std::string header;
  std::string values;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += it.key();
    if (it.value().is_number_float()) {
      values += format_number(it.value().get<double>());
    } else if (it.value().is_string()) {
      values += it.value().get<std::string>();
    } else {
      values += it.value().dump();
    }
  }
  out << header << '\n' << values << '\n';
}

}  // namespace

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

void cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  require_samples(args.samples);
  const SearchInstance instance(args.n, 0.5);
  const double N = instance.size();

  Table table;
  table.metadata = {{"n", std::to_string(args.n)}, {"N", format_number(N)}};
  table.columns = {"s", "E0", "E1", "gap", "q_ideal"};
  for (double s : uniform_grid(0.0, 1.0, args.samples)) {
    const SpectralPoint sp = spectral_point(s, N);
    table.rows.push_back({s, sp.e0, sp.e1, sp.gap, sp.alpha * sp.alpha});
  }
  table.write(out, args.format);
}

void cmd_schedule(const ScheduleArgs& args, std::ostream& out) {
  require_samples(args.samples);
  const SearchInstance instance(args.n, args.eps);
  const ScheduleSpec spec(args.kind, instance);
  const double N = instance.size();

  Table table;
  table.metadata = {{"kind", std::string(to_string(args.kind))},
                    {"n", std::to_string(args.n)},
                    {"eps", format_number(args.eps)},
                    {"T", format_number(spec.duration)}};
  table.columns = {"tau", "s", "q_ideal"};
  for (double tau : uniform_grid(0.0, 1.0, args.samples))
    table.rows.push_back({tau, s_of_tau(args.kind, tau, N), ideal_q_of_tau(args.kind, tau, N)});
  table.write(out, args.format);
}

void cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  require_samples(args.samples);
  const SearchInstance instance(args.n, args.eps);
  const IvpConfig cfg = ivp_config(args.tol);
  const auto points = simulate(args.kind, instance, args.samples, cfg);

  Table table;
  table.metadata = {{"kind", std::string(to_string(args.kind))},
                    {"n", std::to_string(args.n)},
                    {"eps", format_number(args.eps)},
                    {"T", format_number(duration(args.kind, instance.size(), args.eps))},
                    {"atol", format_number(args.tol.atol)},
                    {"rtol", format_number(args.tol.rtol)}};
  table.columns = {"tau", "s", "p", "eps_exact", "norm_residual"};
  for (const TrajectoryPoint& pt : points)
    table.rows.push_back({pt.tau, pt.s, pt.p, pt.eps_exact, pt.norm_residual});
  table.write(out, args.format);
}

void cmd_crossing(const CrossingArgs& args, std::ostream& out) {
  detail::require(!args.n_list.empty(), "--n needs at least one value");
  for (int n : args.n_list)
    detail::require(n >= 1 && n <= 40, "crossing sizes must lie in [1, 40], got " + std::to_string(n));
  detail::require(args.samples >= 3, "--samples must be at least 3 for the crossing scan");
  const IvpConfig cfg = ivp_config(args.tol);

  CrossingOptions options;
  options.eps = args.eps;
  options.scan_points = args.samples;
  options.window_end = args.window_end;

  // Each entry is computed independently; results are stored by index so the
  // output order does not depend on scheduling.
  std::vector<json> entries(args.n_list.size());
  std::vector<std::exception_ptr> failures(args.n_list.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < args.n_list.size(); i = next++) {
      const int n = args.n_list[i];
      const double N = domain_size(n);
      json entry;
      entry["n"] = n;
      try {
        const CrossingResult r = crossing_time(N, args.k, cfg, options);
        entry["eps_used"] = r.eps_used;
        entry["T"] = r.T;
        entry["tau_cross"] = r.tau_cross;
        entry["t_cross"] = r.t_cross;
        entry["residual"] = r.residual;
        entry["no_crossing"] = false;
      } catch (const NoCrossingError& e) {
        entry["eps_used"] = options.eps.value_or(matched_diabaticity(N, args.k));
        entry["no_crossing"] = true;
        entry["message"] = e.what();
      } catch (...) {
        failures[i] = std::current_exception();
      }
      entries[i] = std::move(entry);
    }
  };
  const unsigned thread_count =
      std::min<unsigned>(worker_threads(), static_cast<unsigned>(args.n_list.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < thread_count; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  if (args.format == OutputFormat::Json) {
    out << json(entries).dump(2) << '\n';
    return;
  }
  out << "# k=" << format_number(args.k) << '\n';
  out << "n,eps_used,tau_cross,t_cross,residual,no_crossing\n";
  for (const json& e : entries) {
    const bool none = e["no_crossing"].get<bool>();
    out << e["n"].get<int>() << ',' << format_number(e["eps_used"].get<double>()) << ',';
    if (none) {
      out << ",,,true\n";
    } else {
      out << format_number(e["tau_cross"].get<double>()) << ','
          << format_number(e["t_cross"].get<double>()) << ','
          << format_number(e["residual"].get<double>()) << ",false\n";
    }
  }
}

void cmd_protocol(const ProtocolArgs& args, std::ostream& out) {
  const SearchInstance instance(args.n, args.eps);
  const ProtocolParams params = protocol_params(instance, args.p);
  const ProtocolOutcome outcome = run_protocol(params, args.trials, args.seed, ivp_config(args.tol));

  json record;
  record["n"] = args.n;
  record["eps"] = args.eps;
  record["p"] = args.p;
  record["T"] = params.T;
  record["t_f"] = params.t_f;
  record["p_exact"] = outcome.p_exact;
  record["empirical_frequency"] = outcome.empirical_frequency;
  record["trials"] = outcome.trials;
  record["seed"] = outcome.seed;
  write_record(out, record, args.format);
}

void cmd_resources(const ResourcesArgs& args, std::ostream& out) {
  const SearchInstance instance(args.n, args.eps);
  detail::require(args.processors >= 0, "--S must be non-negative (0 means unbounded)");
  ResourceBudget budget;
  if (args.processors > 0) budget.processors = args.processors;
  budget.t_c = args.t_c;
  budget.alpha = args.alpha;
  budget.overhead = args.overhead;
  budget.validate();

  const double N = instance.size();
  const auto limited = max_probability_for_coherence(args.t_c, N, args.eps);
  const double grover_p = bounded_depth_probability(args.t_c, args.k, N);

  json record;
  record["n"] = args.n;
  record["eps"] = args.eps;
  record["S"] = args.processors;
  record["t_c"] = args.t_c;
  record["alpha"] = args.alpha;
  record["c"] = args.overhead;
  record["k"] = args.k;
  record["p_max"] = limited.p;
  record["advantage_threshold"] = limited.advantage_threshold;
  record["advantage"] = limited.advantage;
  record["required_runs"] = required_runs(limited.p, args.alpha);
  record["adiabatic_runtime"] = overall_runtime(budget, instance);
  record["grover_p"] = grover_p;
  record["grover_required_runs"] = required_runs(grover_p, args.alpha);
  record["grover_runtime"] = grover_bounded_runtime(budget, N, args.k);
  write_record(out, record, args.format);
}

}  // namespace adiasearch::cli
