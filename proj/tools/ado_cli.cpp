#include <iostream>

#include <CLI11.hpp>

#include "ado/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Coloured Alexander (ADO) invariants of braid closures"};

  ado::RunConfig config;
  std::string lambdaText;
  app.add_option("--braid", config.braidText,
                 "braid word, e.g. \"1 -2 1 -2\" or \"s1^3\"");
  app.add_option("--strands", config.strands, "strand count for --braid");
  app.add_option("--knot", config.knot,
                 "built-in knot: unknot|trefoil|figure-eight|hopf|cinquefoil");
  app.add_option("--color", config.color, "colour N (level)")->required();
  app.add_option("--method", config.method, "direct|topological|both")
      ->default_val("both");
  app.add_option("--lambda", lambdaText,
                 "numeric colour parameter, \"a+bi\" or real");
  app.add_option("--format", config.format, "text|json")->default_val("text");
  app.add_option("--max-color", config.maxColor, "largest accepted N")
      ->default_val(5);

  try {
    app.parse(argc, argv);
    if (!lambdaText.empty()) config.lambda = ado::parse_lambda(lambdaText);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ado::kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ado::kExitParseError;
  }

  return ado::run(config, std::cout, std::cerr);
}
