// tropscheme: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tropscheme/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Scheme-theoretic tropicalization of homogeneous ideals over valued fields"};
  app.require_subcommand(1);

  tropscheme::cli::Flags flags;
  bool json = false;
  std::string file;
  std::string grid;

  for (const auto& name : tropscheme::cli::commands()) {
    CLI::App* sub = app.add_subcommand(name, "run the '" + name + "' command on a problem file");
    sub->add_option("file", file, "problem file")->required()->check(CLI::ExistingFile);
    sub->add_option("--max-degree", flags.max_degree, "largest degree to compute");
    sub->add_option("--max-chain", flags.max_chain, "longest relation chain searched for congruence membership");
    sub->add_option("--grid", grid, "integer sample range a:b for set-theoretic checks");
    sub->add_option("--circuit-limit", flags.circuit_limit, "largest connected column set for circuit enumeration");
    sub->add_option("--mz-limit", flags.mz_limit, "largest generator component for dimension search");
    sub->add_flag("--json", json, "print the JSON report instead of text");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::string command = app.get_subcommands().front()->get_name();
  if (!grid.empty()) {
    try {
      flags.grid = tropscheme::parse_range({grid, 0, 0});
    } catch (const tropscheme::ParseError&) {
      std::cerr << "--grid expects a:b\n";
      return 2;
    }
  }
  std::ifstream in(file);
  std::stringstream buf;
  buf << in.rdbuf();

  tropscheme::cli::Result res = tropscheme::cli::run(command, buf.str(), flags);
  if (json)
    std::cout << res.doc.dump(2) << "\n";
  else
    (res.exit_code == 0 ? std::cout : std::cerr) << res.text;
  return res.exit_code;
}
