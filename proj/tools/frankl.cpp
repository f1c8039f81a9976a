#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace frankl::cli;

int main(int argc, char** argv) {
  CLI::App app{"Certify FC-families for the union-closed sets conjecture"};
  app.require_subcommand(1);

  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit elapsed_ms from reports");

  std::string family_text, weights_text, label;
  auto* verify = app.add_subcommand("verify", "Run the share search on one family/weights pair");
  verify->add_option("--family", family_text, "JSON array of sorted sets, e.g. [[0,1],[1,2]]")
      ->required();
  verify->add_option("--weights", weights_text, "Weights by element: 1,2,0 or [1,2,0]")
      ->required();
  verify->add_option("--label", label, "Label for the report line");

  std::string table_path;
  unsigned threads = 1;
  auto* table = app.add_subcommand("table", "Verify every record of a JSON-lines file");
  table->add_option("--file", table_path, "Path to a records file (e.g. data/table1.jsonl)")
      ->required();
  table->add_option("--threads", threads, "Rows verified concurrently")
      ->check(CLI::PositiveNumber);

  NefRequest nef_req;
  std::string filters;
  auto* nef = app.add_subcommand("nef", "Non-equivalent nkm-family representatives");
  nef->add_option("--n", nef_req.n, "Domain size")->required();
  nef->add_option("--k", nef_req.k, "Set size")->required();
  nef->add_option("--m", nef_req.m, "Number of sets")->required();
  nef->add_option("--filter", filters, "Comma list of not533, not634");
  nef->add_flag("--allow-large", nef_req.allow_large, "Lift the n <= 7 guard");

  OracleRequest oracle_req;
  auto* oracle = app.add_subcommand("oracle", "Differential checks against brute force");
  oracle->add_option("subcommand", oracle_req.subcommand,
                     "examples | uce-vs-ssn | refine | refine-exhaustive | closure")
      ->required();
  oracle->add_option("--n", oracle_req.n, "Domain size");
  oracle->add_option("--max-sets", oracle_req.max_sets, "Largest candidate family (uce-vs-ssn)");
  oracle->add_option("--max-weight", oracle_req.max_weight, "Largest weight value");
  oracle->add_option("--max-size", oracle_req.max_size, "Largest random family (closure)");
  oracle->add_option("--trials", oracle_req.trials, "Random trials");
  oracle->add_option("--seed", oracle_req.seed, "RNG seed");
  oracle->add_flag("--allow-large", oracle_req.allow_large, "Lift the default size guards");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  const OutputOptions output{.timing = !no_timing};
  try {
    if (*verify) {
      CandidateRecord record;
      record.label = label;
      record.family = parse_family_arg(family_text);
      record.weights = parse_weights_arg(weights_text);
      validate_record(record);
      return cmd_verify(record, std::cout, std::cerr, output);
    }
    if (*table) return cmd_table_file(table_path, threads, std::cout, std::cerr, output);
    if (*nef) {
      parse_nef_filters(filters, nef_req);
      return cmd_nef(nef_req, std::cout, std::cerr);
    }
    if (*oracle) return cmd_oracle(oracle_req, std::cout, std::cerr);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}
