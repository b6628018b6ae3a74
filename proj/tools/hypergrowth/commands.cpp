#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypergrowth/cli.hpp"
#include "hypergrowth/diagnostics.hpp"
#include "hypergrowth/errors.hpp"
#include "hypergrowth/fitting.hpp"
#include "hypergrowth/ingest.hpp"
#include "hypergrowth/report.hpp"

namespace hypergrowth::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kDefaultGridPoints = 512;

struct InputOptions {
  std::string year_col = "year";
  std::string value_col = "value";
  std::string weighting = "unweighted";
  std::optional<double> fit_from;
  std::optional<double> fit_to;

  CsvSchema schema() const { return {year_col, value_col}; }
  Weighting weighting_mode() const { return weighting_from_string(weighting); }
};

struct GridOptions {
  std::optional<double> from;
  std::optional<double> to;
  std::size_t points = kDefaultGridPoints;
};

struct OutputOptions {
  std::string out_dir = ".";
  std::string format = "json";
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--year-col", o.year_col, "Year column name")
      ->capture_default_str();
  cmd->add_option("--value-col", o.value_col, "Value column name")
      ->capture_default_str();
  cmd->add_option("--weighting", o.weighting,
                  "Reciprocal-space weighting: unweighted | size_squared")
      ->check(CLI::IsMember({"unweighted", "size_squared"}))
      ->capture_default_str();
  cmd->add_option("--fit-from", o.fit_from, "Earliest year used in fits");
  cmd->add_option("--fit-to", o.fit_to, "Latest year used in fits");
}

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--grid-from", g.from,
                  "First curve year (default: earliest data year)");
  cmd->add_option("--grid-to", g.to,
                  "Last curve year (default: singularity guard)");
  cmd->add_option("--grid-points", g.points, "Number of curve points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
      ->capture_default_str();
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out-dir", o.out_dir, "Directory for emitted files")
      ->capture_default_str();
  cmd->add_option("--format", o.format,
                  "What to print on stdout: json (report) or csv (main curve)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json echo_inputs(const InputOptions& o) {
  return {{"year_col", o.year_col},
          {"value_col", o.value_col},
          {"weighting", o.weighting},
          {"fit_from", optional_json(o.fit_from)},
          {"fit_to", optional_json(o.fit_to)}};
}

TimeSeries load(const std::string& path, const InputOptions& o) {
  return parse_csv_file(path, o.schema());
}

TimeSeries fit_window(const TimeSeries& s, const InputOptions& o) {
  return s.window(o.fit_from.value_or(-std::numeric_limits<double>::infinity()),
                  o.fit_to.value_or(std::numeric_limits<double>::infinity()));
}

std::vector<double> resolve_grid(const GridOptions& g, double default_from,
                                 double guard, json& echo) {
  const double from = g.from.value_or(default_from);
  const double to = g.to.value_or(guard);
  if (!(from < to)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "curve grid is empty: from " << from << " to " << to;
    throw DomainError(msg.str());
  }
  echo["grid"] = {{"from", from}, {"to", to}, {"points", g.points}};
  return evenly_spaced(from, to, g.points);
}

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& what) {
  std::vector<double> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size()) {
      throw CLI::ValidationError(what, "cannot parse '" + std::string(item) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string curve_table(const std::vector<double>& grid,
                        const std::vector<std::pair<std::string,
                                                    std::vector<double>>>& cols) {
  CsvTable t{{"year"}, {grid}};
  for (const auto& [name, values] : cols) {
    t.header.push_back(name);
    t.columns.push_back(values);
  }
  return render_csv(t);
}

std::vector<double> values_of(const DiagnosticsCurve& c) {
  std::vector<double> v;
  for (const auto& s : c.samples) v.push_back(s.value);
  return v;
}

void emit(const OutputOptions& o, const json& report, const std::string& csv,
          std::ostream& out) {
  if (o.format == "csv") {
    out << csv;
  } else {
    out << report.dump(2) << '\n';
  }
}

// --------------------------------------------------------------------------
// fit

struct FitCommand {
  std::string input;
  InputOptions in;
  GridOptions grid;
  OutputOptions output;

  int run(const std::vector<std::string>& argv, std::ostream& out) const {
    const TimeSeries raw = load(input, in);
    const TimeSeries series = fit_window(raw, in);
    const HyperbolicFit fit = fit_hyperbolic(series, in.weighting_mode());

    json echo = {{"command", "fit"}, {"argv", argv}, {"input", input},
                 {"inputs", echo_inputs(in)}, {"out_dir", output.out_dir},
                 {"format", output.format}};
    const auto years = resolve_grid(grid, series.points().front().year,
                                    fit.params.guard_time(), echo);
    const TimeSeries curve = predict(fit, years);

    const std::string csv = curve_table(years, {{"value", curve.values()}});
    const fs::path dir(output.out_dir);
    write_text(dir / "fit_curve.csv", csv);

    json report = {{"schema_version", kSchemaVersion},
                   {"command", "fit"},
                   {"fit", to_json(fit, series)},
                   {"outputs", {{"curve", "fit_curve.csv"}}},
                   {"config_echo", echo}};
    write_text(dir / "fit_report.json", report.dump(2) + "\n");
    emit(output, report, csv, out);
    return kSuccess;
  }
};

// --------------------------------------------------------------------------
// ratio

struct RatioCommand {
  std::string numerator;
  std::string denominator;
  InputOptions in;
  GridOptions grid;
  OutputOptions output;

  int run(const std::vector<std::string>& argv, std::ostream& out) const {
    const TimeSeries num_raw = load(numerator, in);
    const TimeSeries den_raw = load(denominator, in);
    const TimeSeries num = fit_window(num_raw, in);
    const TimeSeries den = fit_window(den_raw, in);
    const RatioFit fit = fit_ratio(num, den, in.weighting_mode());
    const TimeSeries observed = derive_per_capita(num_raw, den_raw);

    json echo = {{"command", "ratio"}, {"argv", argv},
                 {"numerator", numerator}, {"denominator", denominator},
                 {"inputs", echo_inputs(in)}, {"out_dir", output.out_dir},
                 {"format", output.format}};
    const double first =
        std::min(num.points().front().year, den.points().front().year);
    const auto years = resolve_grid(grid, first, fit.model.guard_time(), echo);
    const DiagnosticsCurve model_curve = value_curve(fit.model, years);

    CsvTable pc{{"year", "observed", "model"}, {{}, {}, {}}};
    double sq = 0.0;
    std::size_t n = 0;
    for (const Observation& p : observed.points()) {
      pc.columns[0].push_back(p.year);
      pc.columns[1].push_back(p.value);
      if (fit.model.admits(p.year)) {
        const double m = eval_ratio(fit.model, p.year);
        pc.columns[2].push_back(m);
        sq += (p.value - m) * (p.value - m);
        ++n;
      } else {
        pc.columns[2].push_back(std::numeric_limits<double>::quiet_NaN());
      }
    }
    const std::string curve_csv =
        curve_table(years, {{"value", values_of(model_curve)}});
    const fs::path dir(output.out_dir);
    write_text(dir / "per_capita.csv", render_csv(pc));
    write_text(dir / "ratio_curve.csv", curve_csv);

    json residuals = json::array();
    for (const auto& r : fit.per_capita) {
      residuals.push_back({{"year", r.year},
                           {"observed", r.observed},
                           {"predicted", r.predicted},
                           {"residual", r.residual}});
    }
    json report = {
        {"schema_version", kSchemaVersion},
        {"command", "ratio"},
        {"fits",
         {{"numerator", to_json(fit.numerator, num)},
          {"denominator", to_json(fit.denominator, den)}}},
        {"ratio", to_json(fit.model)},
        {"per_capita",
         {{"series", observed.name()},
          {"n_observed", observed.size()},
          {"n_compared", n},
          {"rmse", n ? json(std::sqrt(sq / double(n))) : json(nullptr)},
          {"fit_window_residuals", residuals},
          {"out_of_domain_years", fit.out_of_domain_years}}},
        {"outputs",
         {{"per_capita", "per_capita.csv"}, {"curve", "ratio_curve.csv"}}},
        {"config_echo", echo}};
    write_text(dir / "ratio_report.json", report.dump(2) + "\n");
    emit(output, report, curve_csv, out);
    return kSuccess;
  }
};

// --------------------------------------------------------------------------
// diagnose

struct DiagnoseCommand {
  std::optional<double> fa, fk, ga, gk;
  std::string numerator;
  std::string denominator;
  std::vector<std::string> extra_series;
  std::string levels;
  std::string candidates = "1750,1870";
  double alpha = 0.05;
  std::string break_weighting = "size_squared";
  InputOptions in;
  GridOptions grid;
  OutputOptions output;

  int run(const std::vector<std::string>& argv, std::ostream& out) const {
    const bool model_given = fa || fk || ga || gk;
    const bool files_given = !numerator.empty() || !denominator.empty();
    if (model_given == files_given || (model_given && !(fa && fk && ga && gk)) ||
        (files_given && (numerator.empty() || denominator.empty()))) {
      throw CLI::ValidationError(
          "diagnose",
          "give either all of --fa --fk --ga --gk or both --gdp and --pop");
    }
    const std::vector<double> level_list = parse_number_list(levels, "--levels");
    const std::vector<double> candidate_list =
        parse_number_list(candidates, "--candidates");
    const Weighting break_mode = weighting_from_string(break_weighting);

    json echo = {{"command", "diagnose"}, {"argv", argv},
                 {"inputs", echo_inputs(in)}, {"levels", level_list},
                 {"candidates", candidate_list}, {"alpha", alpha},
                 {"break_weighting", break_weighting},
                 {"series", extra_series}, {"out_dir", output.out_dir},
                 {"format", output.format}};

    std::optional<RatioModel> model;
    std::vector<std::pair<std::string, TimeSeries>> break_targets;
    std::optional<TimeSeries> observed;
    json fits = nullptr;
    double first_year = 0.0;
    if (model_given) {
      model = make_ratio(HyperbolicParams(*fa, *fk), HyperbolicParams(*ga, *gk));
      echo["model"] = {{"fa", *fa}, {"fk", *fk}, {"ga", *ga}, {"gk", *gk}};
    } else {
      const TimeSeries num_raw = load(numerator, in);
      const TimeSeries den_raw = load(denominator, in);
      const TimeSeries num = fit_window(num_raw, in);
      const TimeSeries den = fit_window(den_raw, in);
      const RatioFit fit = fit_ratio(num, den, in.weighting_mode());
      model = fit.model;
      fits = {{"numerator", to_json(fit.numerator, num)},
              {"denominator", to_json(fit.denominator, den)}};
      first_year = std::min(num.points().front().year, den.points().front().year);
      observed = derive_per_capita(num, den);
      break_targets.emplace_back(num.name(), num);
      break_targets.emplace_back(den.name(), den);
      echo["gdp"] = numerator;
      echo["pop"] = denominator;
    }

    const auto years = resolve_grid(grid, first_year, model->guard_time(), echo);
    if (model_given) {
      // Noiseless components sampled on the diagnostic grid.
      break_targets.emplace_back(
          "synthetic_numerator", synthesize(model->numerator(), years));
      break_targets.emplace_back(
          "synthetic_denominator", synthesize(model->denominator(), years));
    }
    for (const auto& path : extra_series) {
      const TimeSeries s = load(path, in);
      break_targets.emplace_back(s.name(), s);
    }

    const DiagnosticsCurve value = value_curve(*model, years);
    const DiagnosticsCurve gradient = gradient_curve(*model, years);
    const DiagnosticsCurve rate = growth_rate_curve(*model, years);
    const std::string time_csv =
        curve_table(years, {{"ratio", values_of(value)},
                            {"gradient", values_of(gradient)},
                            {"growth_rate", values_of(rate)}});
    const fs::path dir(output.out_dir);
    write_text(dir / "curves_time.csv", time_csv);

    json outputs = {{"curves_time", "curves_time.csv"}};
    json monotonicity = {{"time",
                          {{"ratio", to_json(monotonicity_check(value))},
                           {"gradient", to_json(monotonicity_check(gradient))},
                           {"growth_rate", to_json(monotonicity_check(rate))}}}};

    if (!level_list.empty()) {
      const SizeCurves size = curves_vs_size(*model, level_list);
      CsvTable t{{"level", "year", "gradient", "growth_rate"}, {{}, size.times, {}, {}}};
      for (std::size_t i = 0; i < size.times.size(); ++i) {
        t.columns[0].push_back(size.gradient.samples[i].x);
        t.columns[2].push_back(size.gradient.samples[i].value);
        t.columns[3].push_back(size.growth_rate.samples[i].value);
      }
      write_text(dir / "curves_size.csv", render_csv(t));
      outputs["curves_size"] = "curves_size.csv";
      if (size.times.size() >= 2) {
        monotonicity["size"] = {
            {"gradient", to_json(monotonicity_check(size.gradient))},
            {"growth_rate", to_json(monotonicity_check(size.growth_rate))}};
      }
    }

    if (observed && observed->size() >= 3) {
      const DiagnosticsCurve obs = observed_growth_rate(*observed);
      CsvTable t{{"year", "growth_rate"}, {{}, {}}};
      for (const auto& s : obs.samples) {
        t.columns[0].push_back(s.x);
        t.columns[1].push_back(s.value);
      }
      write_text(dir / "observed_growth.csv", render_csv(t));
      outputs["observed_growth"] = "observed_growth.csv";
    }

    json breaks = json::array();
    for (const auto& [name, series] : break_targets) {
      for (const ScanEntry& e :
           takeoff_scan(series, candidate_list, alpha, break_mode)) {
        breaks.push_back(to_json(e, name));
      }
    }

    json report = {
        {"schema_version", kSchemaVersion},
        {"command", "diagnose"},
        {"model", to_json(*model)},
        {"fits", fits},
        {"monotonicity", monotonicity},
        {"break_tests", breaks},
        {"annotations",
         {{"industrial_revolution",
           {{"begin", kIndustrialRevolution.begin},
            {"end", kIndustrialRevolution.end}}}}},
        {"outputs", outputs},
        {"config_echo", echo}};
    write_text(dir / "diagnose_report.json", report.dump(2) + "\n");
    emit(output, report, time_csv, out);
    return kSuccess;
  }
};

// --------------------------------------------------------------------------
// synth

struct SynthCommand {
  double a = 0.0;
  double k = 0.0;
  double from = 0.0;
  double to = 0.0;
  std::optional<double> step;
  std::optional<std::size_t> points;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string name = "synthetic";
  std::string year_col = "year";
  std::string value_col = "value";

  int run(std::ostream& out) const {
    const HyperbolicParams params(a, k);
    if (!params.admits(to)) {
      std::ostringstream msg;
      msg.precision(10);
      msg << "--to " << to << " is at or past the singularity guard of a = " << a
          << ", k = " << k << " (t_s = a/k = " << params.singularity_time() << ")";
      throw DomainError(msg.str());
    }
    std::vector<double> grid;
    if (points) {
      grid = evenly_spaced(from, to, *points);
    } else {
      grid = stepped_grid(from, to, step.value_or(1.0));
    }
    const TimeSeries s = synthesize(params, grid, {noise}, seed, name);
    std::ostringstream csv;
    write_csv(csv, s, {year_col, value_col});
    if (out_path.empty() || out_path == "-") {
      out << csv.str();
    } else {
      write_text(out_path, csv.str());
    }
    return kSuccess;
  }
};

// --------------------------------------------------------------------------
// downsample

struct DownsampleCommand {
  std::string input;
  std::vector<double> years;
  std::string out_path;
  std::string year_col = "year";
  std::string value_col = "value";

  int run(std::ostream& out) const {
    const CsvSchema schema{year_col, value_col};
    const TimeSeries s = parse_csv_file(input, schema);
    const TimeSeries sub = s.subset(years);
    std::ostringstream csv;
    write_csv(csv, sub, schema);
    if (out_path.empty() || out_path == "-") {
      out << csv.str();
    } else {
      write_text(out_path, csv.str());
    }
    return kSuccess;
  }
};

void write_error(std::ostream& err, std::string_view kind,
                 const std::string& message, std::optional<std::size_t> line,
                 int code) {
  json e = {{"kind", kind}, {"message", message}};
  if (line) e["line"] = *line;
  err << json{{"error", e}, {"exit_code", code}}.dump() << '\n';
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::no_solution:
      return kNumericError;
    case ErrorKind::parse:
    case ErrorKind::validation:
    case ErrorKind::insufficient_data:
    case ErrorKind::fit_rejected:
    case ErrorKind::no_common_years:
    case ErrorKind::year_mismatch:
    case ErrorKind::missing_year:
      return kDataError;
  }
  return kDataError;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hyperbolic growth fitting and growth-regime diagnostics",
               "hypergrowth"};
  app.require_subcommand(1);

  FitCommand fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a hyperbolic trajectory to a series");
  fit_cmd->add_option("input,--input", fit.input, "CSV file")->required();
  add_input_options(fit_cmd, fit.in);
  add_grid_options(fit_cmd, fit.grid);
  add_output_options(fit_cmd, fit.output);

  RatioCommand ratio;
  auto* ratio_cmd =
      app.add_subcommand("ratio", "Fit GDP and population and model GDP/cap");
  ratio_cmd->add_option("--gdp,--numerator", ratio.numerator, "Numerator CSV")
      ->required();
  ratio_cmd->add_option("--pop,--denominator", ratio.denominator,
                        "Denominator CSV")
      ->required();
  add_input_options(ratio_cmd, ratio.in);
  add_grid_options(ratio_cmd, ratio.grid);
  add_output_options(ratio_cmd, ratio.output);

  DiagnoseCommand diag;
  auto* diag_cmd = app.add_subcommand(
      "diagnose", "Gradient, growth-rate, monotonicity and break-test diagnostics");
  diag_cmd->add_option("--fa", diag.fa, "Numerator intercept a");
  diag_cmd->add_option("--fk", diag.fk, "Numerator slope k");
  diag_cmd->add_option("--ga", diag.ga, "Denominator intercept a");
  diag_cmd->add_option("--gk", diag.gk, "Denominator slope k");
  diag_cmd->add_option("--gdp,--numerator", diag.numerator, "Numerator CSV");
  diag_cmd->add_option("--pop,--denominator", diag.denominator, "Denominator CSV");
  diag_cmd->add_option("--series", diag.extra_series,
                       "Additional CSV series to break-test");
  diag_cmd->add_option("--levels", diag.levels,
                       "Comma-separated ratio levels for curves vs size");
  diag_cmd->add_option("--candidates", diag.candidates,
                       "Comma-separated candidate break years (empty for none)")
      ->capture_default_str();
  diag_cmd->add_option("--alpha", diag.alpha, "Break-test significance level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  diag_cmd->add_option("--break-weighting", diag.break_weighting,
                       "Break-test weighting: unweighted | size_squared")
      ->check(CLI::IsMember({"unweighted", "size_squared"}))
      ->capture_default_str();
  add_input_options(diag_cmd, diag.in);
  add_grid_options(diag_cmd, diag.grid);
  add_output_options(diag_cmd, diag.output);

  SynthCommand synth;
  auto* synth_cmd = app.add_subcommand("synth", "Sample a hyperbolic trajectory");
  synth_cmd->add_option("--a", synth.a, "Intercept a")->required();
  synth_cmd->add_option("--k", synth.k, "Slope k")->required();
  synth_cmd->add_option("--from", synth.from, "First year")->required();
  synth_cmd->add_option("--to", synth.to, "Last year")->required();
  auto* step_opt = synth_cmd->add_option("--step", synth.step, "Year step (default 1)");
  synth_cmd->add_option("--points", synth.points, "Evenly spaced point count")
      ->excludes(step_opt);
  synth_cmd->add_option("--noise", synth.noise, "Multiplicative log-normal sigma")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("--out", synth.out_path, "Output CSV (default stdout)");
  synth_cmd->add_option("--name", synth.name, "Series name");
  synth_cmd->add_option("--year-col", synth.year_col)->capture_default_str();
  synth_cmd->add_option("--value-col", synth.value_col)->capture_default_str();

  DownsampleCommand down;
  auto* down_cmd = app.add_subcommand(
      "downsample", "Keep only the listed years of a series");
  down_cmd->add_option("input,--input", down.input, "CSV file")->required();
  down_cmd->add_option("--years", down.years, "Years to keep")
      ->required()
      ->delimiter(',');
  down_cmd->add_option("--out", down.out_path, "Output CSV (default stdout)");
  down_cmd->add_option("--year-col", down.year_col)->capture_default_str();
  down_cmd->add_option("--value-col", down.value_col)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what(), std::nullopt, kUsageError);
    return kUsageError;
  }

  try {
    if (fit_cmd->parsed()) return fit.run(args, out);
    if (ratio_cmd->parsed()) return ratio.run(args, out);
    if (diag_cmd->parsed()) return diag.run(args, out);
    if (synth_cmd->parsed()) return synth.run(out);
    if (down_cmd->parsed()) return down.run(out);
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    write_error(err, to_string(e.kind()), e.what(), e.line(), code);
    return code;
  } catch (const CLI::Error& e) {
    write_error(err, "usage", e.what(), std::nullopt, kUsageError);
    return kUsageError;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what(), std::nullopt, kDataError);
    return kDataError;
  }
  return kUsageError;
}

}  // namespace hypergrowth::cli
