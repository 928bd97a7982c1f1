#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "birkhoff/cli.hpp"

#ifndef BIRKHOFF_DEFAULT_CORPUS
#define BIRKHOFF_DEFAULT_CORPUS "corpus"
#endif

namespace {

const std::map<std::string, std::string> kHelp{
    {"check", "Validate an object (group, algebra or precrossed module)"},
    {"reflect", "Reflect an object into the subvariety"},
    {"commutator", "Relative commutator [K,B] of an extension"},
    {"classify", "Central, trivial, normal and split flags of an extension"},
    {"centralise", "Quotient an extension by its relative commutator"},
    {"homology", "Second homology and H1 of an algebra"},
    {"uce", "Universal central extension of a perfect algebra"},
    {"five-term", "Five-term (or three-term tail) sequence of an extension"},
    {"compare", "Loday against Chevalley-Eilenberg comparison for a perfect Lie algebra"},
    {"certify", "Universality certificate; extra inputs form the comparison family"},
};

int emit(const birkhoff::cli::Outcome& out, bool pretty, const std::string& path) {
  const std::string text = pretty ? birkhoff::cli::render_pretty(out.report) : out.report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path);
    if (!f) {
      std::cerr << "cannot write " << path << "\n";
      return 2;
    }
    f << text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative central extensions of groups, Leibniz algebras and precrossed modules"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string variety, out_path;
  bool pretty = false;
  std::size_t guard = birkhoff::kDefaultHomGuard;
  std::vector<std::string> inputs;

  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_flag("--pretty", pretty, "Human-readable rendering of the report");
  app.add_option("--guard-size", guard, "Largest source order allowed for homomorphism enumeration")
      ->check(CLI::PositiveNumber);

  std::string chosen;
  for (const auto& name : birkhoff::cli::command_names()) {
    auto* sub = app.add_subcommand(name, kHelp.at(name));
    sub->add_option("--variety", variety, "Ambient variety and reflector")
        ->required()
        ->check(CLI::IsMember(birkhoff::cli::variety_names()));
    sub->add_option("inputs", inputs, "Input JSON files")->required();
    sub->callback([&chosen, name] { chosen = name; });
  }
  auto* self = app.add_subcommand("selftest", "Run the bundled corpus");
  self->callback([&chosen] { chosen = "selftest"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (chosen == "selftest") {
    const char* env = std::getenv("BIRKHOFF_CORPUS");
    return emit(birkhoff::cli::selftest(env ? env : BIRKHOFF_DEFAULT_CORPUS), pretty, out_path);
  }
  birkhoff::cli::Job job{chosen, variety, inputs, guard};
  return emit(birkhoff::cli::run(job), pretty, out_path);
}
