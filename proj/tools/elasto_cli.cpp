#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "experiments.hpp"

int main(int argc, char** argv) {
  using namespace elasto::cli;
  CLI::App app{"Desk-scale elastic scattering experiments"};
  app.require_subcommand(1);

  std::string config, out, schema_for;
  int workers = 1;
  std::int64_t seed = 0;
  std::string chosen;
  std::vector<CLI::App*> subs;
  for (const auto& name : experiment_names()) {
    auto* s = app.add_subcommand(name, "run the " + name + " experiment");
    s->add_option("--config", config, "JSON config file")->required();
    s->add_option("--workers", workers, "concurrent sweep points")->check(CLI::PositiveNumber);
    s->add_option("--out", out, "output path prefix (overrides the config)");
    s->add_option("--seed", seed, "master seed (overrides the config)")->check(CLI::NonNegativeNumber);
    s->callback([&chosen, name] { chosen = name; });
    subs.push_back(s);
  }
  auto* sch = app.add_subcommand("schema", "print the JSON Schema of an experiment config");
  sch->add_option("experiment", schema_for, "experiment name")->required()->check(CLI::IsMember(experiment_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (sch->parsed()) {
    std::cout << config_schema(schema_for).dump(2) << "\n";
    return 0;
  }
  bool seed_given = false;
  for (auto* s : subs)
    if (s->parsed()) seed_given = s->count("--seed") > 0;
  return run_command(chosen, config, out, workers, seed_given ? &seed : nullptr, std::cerr);
}
