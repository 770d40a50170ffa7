#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "adiasearch/grover.hpp"
#include "adiasearch/schedules.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace adiasearch;
using namespace adiasearch::cli;
using doctest::Approx;
using nlohmann::json;

namespace {

struct Csv {
  std::vector<std::string> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  return out;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("#", 0) == 0) {
      csv.metadata.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      std::vector<double> row;
      for (const auto& cell : split(line)) row.push_back(std::stod(cell));
      csv.rows.push_back(row);
    }
  }
  return csv;
}

template <class Args, class Fn>
std::string run(Fn fn, const Args& args) {
  std::ostringstream out;
  fn(args, out);
  return out.str();
}

}  // namespace

TEST_CASE("number formatting round trips") {
  for (double x : {0.1, 1.0 / 3.0, 2.0e-300, 123456789.123456789, -0.0}) {
    CHECK(std::stod(format_number(x)) == x);
  }
  CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("output format names") {
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK_THROWS(parse_output_format("xml"));
}

TEST_CASE("spectrum command") {
  SpectrumArgs args;
  args.n = 2;
  args.samples = 11;
  const auto csv = parse_csv(run(cmd_spectrum, args));
  CHECK(csv.header == std::vector<std::string>{"s", "E0", "E1", "gap", "q_ideal"});
  REQUIRE(csv.rows.size() == 11);
  CHECK(csv.rows[0] == std::vector<double>{0.0, 0.0, 1.0, 1.0, csv.rows[0][4]});
  CHECK(csv.rows[0][4] == Approx(0.25).epsilon(1e-15));
  CHECK(csv.rows[5][0] == 0.5);
  CHECK(csv.rows[5][3] == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("schedule command") {
  ScheduleArgs args;
  args.n = 4;
  args.samples = 101;
  const auto proposed = parse_csv(run(cmd_schedule, args));
  CHECK(proposed.header == std::vector<std::string>{"tau", "s", "q_ideal"});
  CHECK(proposed.rows[50][1] == Approx(0.5).epsilon(1e-15));
  const std::string t_line = "# T=" + format_number(duration(ScheduleKind::Proposed, 16.0, 0.02));
  CHECK(std::find(proposed.metadata.begin(), proposed.metadata.end(), t_line) != proposed.metadata.end());

  args.kind = ScheduleKind::Original;
  const auto original = parse_csv(run(cmd_schedule, args));
  for (const auto& row : original.rows) CHECK(std::abs(row[2] - grover_q_of_tau(row[0], 16.0)) <= 1e-12);

  args.format = OutputFormat::Json;
  const auto doc = json::parse(run(cmd_schedule, args));
  CHECK(doc["rows"].size() == 101);
  CHECK(doc["metadata"]["kind"] == "original");
}

TEST_CASE("simulate command") {
  SimulateArgs args;
  args.n = 8;
  args.eps = 0.02;
  const auto csv = parse_csv(run(cmd_simulate, args));
  CHECK(csv.header == std::vector<std::string>{"tau", "s", "p", "eps_exact", "norm_residual"});
  REQUIRE(csv.rows.size() == 2001);
  CHECK(csv.rows[0][2] == Approx(1.0 / 256.0).epsilon(1e-15));
  CHECK(csv.rows[0][3] <= 1e-12);
  double max_eps = 0.0;
  double max_residual = 0.0;
  for (const auto& row : csv.rows) {
    max_eps = std::max(max_eps, row[3]);
    max_residual = std::max(max_residual, std::abs(row[4]));
  }
  CHECK(max_eps <= 0.02 * (1.0 + 1e-3));
  CHECK(max_residual <= 1e-9);

  // Byte-identical reruns.
  CHECK(run(cmd_simulate, args) == run(cmd_simulate, args));
}

TEST_CASE("crossing command") {
  CrossingArgs args;
  args.n_list = {10, 12};
  args.k = 0.1;
  const auto doc = json::parse(run(cmd_crossing, args));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(doc[i]["n"] == args.n_list[i]);
    CHECK(doc[i]["no_crossing"] == false);
    CHECK(doc[i]["eps_used"].get<double>() ==
          matched_diabaticity(std::ldexp(1.0, args.n_list[i]), 0.1));
    CHECK(doc[i]["residual"].get<double>() <= 1e-9);
  }

  args.n_list = {10};
  args.k = 1.0;
  const auto none = json::parse(run(cmd_crossing, args));
  CHECK(none[0]["no_crossing"] == true);
  CHECK(none[0].contains("message"));

  args.n_list = {41};
  CHECK_THROWS(run(cmd_crossing, args));
}

TEST_CASE("protocol command") {
  ProtocolArgs args;
  args.n = 6;
  args.eps = 0.1;
  args.p = 1.0 / 64.0;
  args.trials = 1000;
  const auto floor = json::parse(run(cmd_protocol, args));
  CHECK(floor["t_f"] == 0.0);
  CHECK(floor["p_exact"] == 1.0 / 64.0);

  args.p = 0.3;
  args.trials = 100000;
  const auto doc = json::parse(run(cmd_protocol, args));
  const double p_exact = doc["p_exact"];
  CHECK(p_exact >= 0.3 - 1e-6);
  const double sigma = std::sqrt(p_exact * (1.0 - p_exact) / 1e5);
  CHECK(std::abs(doc["empirical_frequency"].get<double>() - p_exact) <= 3.0 * sigma);
  for (const char* key : {"T", "t_f", "p_exact", "empirical_frequency", "trials", "seed"}) {
    CHECK(doc.contains(key));
  }
}

TEST_CASE("resources command") {
  ResourcesArgs args;
  args.n = 10;
  args.eps = 0.1;
  args.t_c = 1.0;
  args.alpha = std::exp(-1.0);
  args.overhead = 1.0;
  const auto none = json::parse(run(cmd_resources, args));
  CHECK(none["advantage"] == false);
  CHECK(none["adiabatic_runtime"].get<double>() == Approx(1024.0).epsilon(1e-12));

  args.processors = 0;
  args.t_c = 200.0;
  const auto unbounded = json::parse(run(cmd_resources, args));
  CHECK(unbounded["adiabatic_runtime"].get<double>() == Approx(201.0).epsilon(1e-15));
  for (const char* key : {"p_max", "advantage_threshold", "required_runs", "adiabatic_runtime", "grover_runtime"}) {
    CHECK(unbounded.contains(key));
  }
}
