#include "algser/commands.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "algser/coefficient_file.hpp"
#include "algser/hermite_pade.hpp"
#include "algser/oracle.hpp"
#include "algser/predictor.hpp"

namespace algser::cli {

namespace {

using nlohmann::json;

constexpr int kFullDigits = std::numeric_limits<Real>::max_digits10;

std::string full(Real v) { return fmt::format("{:.{}g}", v, kFullDigits); }
std::string fixed(Real v, int digits) { return fmt::format("{:.{}f}", v, digits); }

DegreeSpec spec_from(const RunConfig& config) {
  if (config.degrees.empty()) throw Error(ErrorKind::InvalidSpec, "--degrees is required");
  if (config.N == 0) return DegreeSpec(config.degrees);
  return DegreeSpec(config.N, config.degrees);
}

json spec_json(const DegreeSpec& spec) {
  return {{"N", spec.N()}, {"degrees", spec.degrees()}, {"M", required_input_length(spec)}};
}

std::string spec_line(const DegreeSpec& spec, const PolynomialSet& set) {
  const Normalization norm = set.normalization();
  return fmt::format("# {} M={} normalization p_{{{},{}}}=1", spec.describe(),
                     required_input_length(spec), norm.n, norm.j);
}

int report(const Error& e, const std::string& context, std::ostream& err) {
  err << "error: " << to_string(e.kind()) << ": " << e.what();
  if (!context.empty()) err << " [" << context << "]";
  err << '\n';
  return exit_code_for(e.kind());
}

// Catches library errors and maps them to exit codes; `context` names the
// spec being run so messages identify the failing fit.
template <typename Body>
int guarded(const RunConfig& config, std::ostream& err, Body&& body) {
  std::string context;
  try {
    if (!config.degrees.empty()) {
      try {
        context = spec_from(config).describe();
      } catch (const Error&) {
      }
    }
    return body();
  } catch (const Error& e) {
    return report(e, context, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kFailure;
  }
}

void write_prediction_text(std::ostream& out, const std::vector<ErrorRow>& rows,
                           const std::vector<Real>& predicted, std::size_t start, int digits,
                           bool with_truth) {
  if (with_truth) {
    out << fmt::format("{:>4} {:>14} {:>14} {:>14} {:>15}\n", "j", "f_j", "a_j", "|f_j-a_j|",
                       "rel. error (%)");
    for (const ErrorRow& r : rows) {
      out << fmt::format("{:>4} {:>14} {:>14} {:>14} {:>15}\n", r.j, fixed(r.truth, digits),
                         fixed(r.predicted, digits), fixed(r.abs_err, digits),
                         r.rel_err_pct ? fixed(*r.rel_err_pct, 2) : std::string("n/a"));
    }
    return;
  }
  out << fmt::format("{:>4} {:>14}\n", "j", "a_j");
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    out << fmt::format("{:>4} {:>14}\n", start + i, fixed(predicted[i], digits));
  }
}

json error_row_json(const ErrorRow& r) {
  json row = {{"j", r.j},
              {"f_j", static_cast<double>(r.truth)},
              {"a_j", static_cast<double>(r.predicted)},
              {"abs_err", static_cast<double>(r.abs_err)}};
  row["rel_err_pct"] = r.rel_err_pct ? json(static_cast<double>(*r.rel_err_pct)) : json(nullptr);
  row["zero_truth"] = r.zero_truth();
  return row;
}

struct SweepRow {
  std::size_t prefix = 0;
  std::optional<Real> predicted;
  std::optional<ErrorRow> error;
  std::string status = "ok";
};

SweepRow sweep_one(const PowerSeries& f, const DegreeSpec& spec, std::size_t prefix) {
  SweepRow row;
  row.prefix = prefix;
  try {
    const PowerSeries seed = truncate(f, prefix);
    const PolynomialSet set = solve_hpp(seed, spec);
    PredictionState state(seed, spec, set, prefix);
    const Real value = predict_next(state);
    row.predicted = value;
    if (prefix < f.size()) {
      row.error = reference_errors(f, std::span<const Real>(&value, 1), prefix).front();
    }
  } catch (const Error& e) {
    row.status = std::string(to_string(e.kind()));
  }
  return row;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InsufficientCoefficients: return exit_code::kInsufficientInput;
    case ErrorKind::SingularSystem: return exit_code::kSingularSystem;
    case ErrorKind::ZeroDenominator: return exit_code::kZeroDenominator;
    case ErrorKind::InvalidSeries:
    case ErrorKind::InvalidSpec:
    case ErrorKind::InvalidInput:
    case ErrorKind::SpecMismatch: return exit_code::kUsage;
    case ErrorKind::Overflow:
    case ErrorKind::DegreeCollapse:
    case ErrorKind::BranchAmbiguity:
    case ErrorKind::NoConvergence: return exit_code::kFailure;
  }
  return exit_code::kFailure;
}

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    const DegreeSpec spec = spec_from(config);
    const PowerSeries f = read_coefficient_file(config.input);
    const PolynomialSet set = solve_hpp(f, spec);
    const std::vector<Real> residual = verify_order(f, set, spec);
    Real max_residual{0};
    for (Real r : residual) max_residual = std::max(max_residual, std::abs(r));

    switch (config.format) {
      case OutputFormat::Text:
        out << spec_line(spec, set) << '\n';
        for (int n = 0; n <= spec.N(); ++n) {
          out << "P_" << n << ':';
          for (Real c : set.poly(n)) out << ' ' << full(c);
          out << '\n';
        }
        out << "max |order residual|: " << fmt::format("{:.3e}", max_residual) << '\n';
        break;
      case OutputFormat::Csv:
        out << "n,j,p_nj\n";
        for (int n = 0; n <= spec.N(); ++n) {
          const auto& p = set.poly(n);
          for (std::size_t j = 0; j < p.size(); ++j) out << n << ',' << j << ',' << full(p[j]) << '\n';
        }
        break;
      case OutputFormat::Json: {
        json polys = json::array();
        for (int n = 0; n <= spec.N(); ++n) {
          json p = json::array();
          for (Real c : set.poly(n)) p.push_back(static_cast<double>(c));
          polys.push_back(std::move(p));
        }
        const json doc = {{"spec", spec_json(spec)},
                          {"normalization", {{"n", set.normalization().n}, {"j", set.normalization().j}}},
                          {"polys", std::move(polys)},
                          {"max_residual", static_cast<double>(max_residual)}};
        out << doc.dump(2) << '\n';
        break;
      }
    }
    return exit_code::kOk;
  });
}

int cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    if (config.predict == 0) throw Error(ErrorKind::InvalidInput, "--predict must be >= 1");
    const DegreeSpec spec = spec_from(config);
    const PowerSeries f = read_coefficient_file(config.input);
    const PolynomialSet set = solve_hpp(f, spec);
    const std::vector<Real> predicted = predict_k(f, spec, set, config.predict);
    const std::size_t start = required_input_length(spec);

    std::vector<ErrorRow> rows;
    const bool with_truth = config.truth.has_value();
    if (with_truth) rows = reference_errors(read_coefficient_file(*config.truth), predicted, start);

    switch (config.format) {
      case OutputFormat::Text:
        out << spec_line(spec, set) << '\n';
        write_prediction_text(out, rows, predicted, start, config.digits, with_truth);
        break;
      case OutputFormat::Csv:
        if (with_truth) {
          out << "j,f_j,a_j,abs_err,rel_err_pct\n";
          for (const ErrorRow& r : rows) {
            out << r.j << ',' << full(r.truth) << ',' << full(r.predicted) << ',' << full(r.abs_err)
                << ',' << (r.rel_err_pct ? full(*r.rel_err_pct) : std::string()) << '\n';
          }
        } else {
          out << "j,a_j\n";
          for (std::size_t i = 0; i < predicted.size(); ++i) out << start + i << ',' << full(predicted[i]) << '\n';
        }
        break;
      case OutputFormat::Json: {
        json list = json::array();
        if (with_truth) {
          for (const ErrorRow& r : rows) list.push_back(error_row_json(r));
        } else {
          for (std::size_t i = 0; i < predicted.size(); ++i) {
            list.push_back({{"j", start + i}, {"a_j", static_cast<double>(predicted[i])}});
          }
        }
        const json doc = {{"spec", spec_json(spec)}, {"rows", std::move(list)}};
        out << doc.dump(2) << '\n';
        break;
      }
    }
    return exit_code::kOk;
  });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    const DegreeSpec spec = spec_from(config);
    const PowerSeries f = read_coefficient_file(config.input);
    const std::size_t m = required_input_length(spec);
    if (f.size() < m) {
      throw Error(ErrorKind::InsufficientCoefficients,
                  "sweep needs at least " + std::to_string(m) + " coefficients");
    }
    // Prefixes M..L-1 each have a next known coefficient to compare with;
    // a file of exactly M coefficients still yields its one prediction.
    const std::size_t last = std::max(m, f.size() - 1);
    std::vector<std::future<SweepRow>> pending;
    for (std::size_t prefix = m; prefix <= last; ++prefix) {
      pending.push_back(std::async(std::launch::async, sweep_one, std::cref(f), std::cref(spec), prefix));
    }
    std::vector<SweepRow> rows;
    for (auto& p : pending) rows.push_back(p.get());

    switch (config.format) {
      case OutputFormat::Text:
        out << fmt::format("# {} M={} one-step sweep, fixed spec\n", spec.describe(), m);
        out << fmt::format("{:>6} {:>4} {:>14} {:>14} {:>14} {:>15}\n", "prefix", "j", "f_j", "a_j",
                           "|f_j-a_j|", "rel. error (%)");
        for (const SweepRow& r : rows) {
          if (!r.predicted) {
            out << fmt::format("{:>6} {:>4} fit failed: {}\n", r.prefix, r.prefix, r.status);
            continue;
          }
          const std::string a = fixed(*r.predicted, config.digits);
          if (r.error) {
            out << fmt::format("{:>6} {:>4} {:>14} {:>14} {:>14} {:>15}\n", r.prefix, r.prefix,
                               fixed(r.error->truth, config.digits), a,
                               fixed(r.error->abs_err, config.digits),
                               r.error->rel_err_pct ? fixed(*r.error->rel_err_pct, 2) : std::string("n/a"));
          } else {
            out << fmt::format("{:>6} {:>4} {:>14} {:>14}\n", r.prefix, r.prefix, "", a);
          }
        }
        break;
      case OutputFormat::Csv:
        out << "prefix,j,f_j,a_j,abs_err,rel_err_pct,status\n";
        for (const SweepRow& r : rows) {
          out << r.prefix << ',' << r.prefix << ',' << (r.error ? full(r.error->truth) : "") << ','
              << (r.predicted ? full(*r.predicted) : "") << ',' << (r.error ? full(r.error->abs_err) : "")
              << ',' << (r.error && r.error->rel_err_pct ? full(*r.error->rel_err_pct) : "") << ','
              << r.status << '\n';
        }
        break;
      case OutputFormat::Json: {
        json list = json::array();
        for (const SweepRow& r : rows) {
          json row = r.error ? error_row_json(*r.error) : json{{"j", r.prefix}};
          row["prefix"] = r.prefix;
          if (r.predicted && !r.error) row["a_j"] = static_cast<double>(*r.predicted);
          row["status"] = r.status;
          list.push_back(std::move(row));
        }
        const json doc = {{"spec", spec_json(spec)}, {"rows", std::move(list)}};
        out << doc.dump(2) << '\n';
        break;
      }
    }
    return exit_code::kOk;
  });
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.count == 0) {
    err << "error: --count must be >= 1\n";
    return exit_code::kUsage;
  }
  if (config.example.empty()) {
    err << "error: an example name or oracle expression is required\n";
    return exit_code::kUsage;
  }
  try {
    std::optional<OracleSpec> spec = named_example(config.example);
    if (!spec) spec = parse_oracle_expression(config.example);
    const PowerSeries coeffs = taylor(*spec, config.count);
    write_coefficients(out, coeffs.coeffs());
    return exit_code::kOk;
  } catch (const Error& e) {
    err << "error: unknown example or invalid expression '" << config.example << "': " << e.what()
        << '\n';
    return exit_code::kUsage;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == "fit") return cmd_fit(config, out, err);
  if (config.command == "predict") return cmd_predict(config, out, err);
  if (config.command == "sweep") return cmd_sweep(config, out, err);
  if (config.command == "oracle") return cmd_oracle(config, out, err);
  err << "error: unknown command '" << config.command << "'\n";
  return exit_code::kUsage;
}

}  // namespace algser::cli
