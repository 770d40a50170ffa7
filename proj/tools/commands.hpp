#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adiasearch/schedules.hpp"

namespace adiasearch::cli {

enum class OutputFormat { Csv, Json };

OutputFormat parse_output_format(std::string_view name);

/// Failure to open or write an output destination.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double atol = 1e-12;
  double rtol = 1e-12;
};

struct SpectrumArgs {
  int n = 1;
  int samples = 101;
  OutputFormat format = OutputFormat::Csv;
};

struct ScheduleArgs {
  ScheduleKind kind = ScheduleKind::Proposed;
  int n = 1;
  double eps = 0.02;
  int samples = 1001;
  OutputFormat format = OutputFormat::Csv;
};

struct SimulateArgs {
  ScheduleKind kind = ScheduleKind::Proposed;
  int n = 1;
  double eps = 0.02;
  int samples = 2001;
  Tolerances tol;
  OutputFormat format = OutputFormat::Csv;
};

struct CrossingArgs {
  std::vector<int> n_list;
  double k = 1.0;
  std::optional<double> eps;
  int samples = 4001;  ///< scan points over the crossing window
  double window_end = 0.3;
  Tolerances tol;
  OutputFormat format = OutputFormat::Json;
};

struct ProtocolArgs {
  int n = 1;
  double eps = 0.02;
  double p = 0.0;
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
  Tolerances tol;
  OutputFormat format = OutputFormat::Json;
};

struct ResourcesArgs {
  int n = 1;
  double eps = 0.02;
  std::int64_t processors = 1;  ///< 0 means unbounded
  double t_c = 1.0;
  double alpha = 0.01;
  double overhead = 0.0;
  double k = 1.0;
  OutputFormat format = OutputFormat::Json;
};

void cmd_spectrum(const SpectrumArgs& args, std::ostream& out);
void cmd_schedule(const ScheduleArgs& args, std::ostream& out);
void cmd_simulate(const SimulateArgs& args, std::ostream& out);
void cmd_crossing(const CrossingArgs& args, std::ostream& out);
void cmd_protocol(const ProtocolArgs& args, std::ostream& out);
void cmd_resources(const ResourcesArgs& args, std::ostream& out);

/// 17 significant digits, the CSV number format.
std::string format_number(double value);

}  // namespace adiasearch::cli
