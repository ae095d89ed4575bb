// algser: fit Hermite-Padé polynomials to a truncated power series and
// predict the coefficients that were not used by the fit.
//
//   algser oracle ex1 --count 12 > ex1.txt
//   algser fit     --input ex1.txt --N 2 --degrees 1,1,1
//   algser predict --input ex1.txt --N 2 --degrees 1,1,1 --predict 6 --truth ex1.txt
//   algser sweep   --input ex1.txt --N 2 --degrees 1,1,1

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "algser/commands.hpp"

namespace {

using algser::cli::OutputFormat;
using algser::cli::RunConfig;

void add_fit_options(CLI::App& sub, RunConfig& config) {
  sub.add_option("--input", config.input, "Coefficient file")->required();
  sub.add_option("--N", config.N, "Degree of the algebraic equation (inferred from --degrees if omitted)")
      ->check(CLI::PositiveNumber);
  sub.add_option("--degrees", config.degrees, "Polynomial degrees p_0..p_N, comma separated")
      ->required()
      ->delimiter(',');
}

void add_format_options(CLI::App& sub, RunConfig& config) {
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
  sub.add_option("--format", config.format, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub.add_option("--digits", config.digits, "Decimals shown in text tables")
      ->check(CLI::Range(0, 30));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series coefficient prediction from Hermite-Pade polynomials"};
  app.require_subcommand(1);
  RunConfig config;

  auto* fit = app.add_subcommand("fit", "Fit Hermite-Pade polynomials and print them");
  add_fit_options(*fit, config);
  add_format_options(*fit, config);

  auto* predict = app.add_subcommand("predict", "Predict coefficients beyond the fitted ones");
  add_fit_options(*predict, config);
  add_format_options(*predict, config);
  predict->add_option("--predict", config.predict, "Number of coefficients to predict")
      ->check(CLI::PositiveNumber);
  predict->add_option("--truth", config.truth, "Coefficient file with reference values");

  auto* sweep = app.add_subcommand("sweep", "One-step predictions on growing prefixes");
  add_fit_options(*sweep, config);
  add_format_options(*sweep, config);

  auto* oracle = app.add_subcommand("oracle", "Write reference Taylor coefficients");
  oracle->add_option("example,--example", config.example, "ex1, ex2, ex3 or an oracle expression");
  oracle->add_option("--count", config.count, "Number of coefficients")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return algser::cli::exit_code::kUsage;
  }

  for (const auto* sub : app.get_subcommands()) config.command = sub->get_name();
  return algser::cli::run(config, std::cout, std::cerr);
}
