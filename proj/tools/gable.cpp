#include "gable/commands.hpp"
#include "gable/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Flags {
  std::string complex, pair, sub, terms, region, tower, witness, system, point, t;
  std::vector<std::string> covers, subset;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  int max_k = 3;
  bool reduced = false;
  bool timing = false;
  std::string out = "json";
  std::string suite;
};

nlohmann::json build_request(const std::string& command, const Flags& f) {
  using gable::io::load_file;
  nlohmann::json req = nlohmann::json::object();
  auto file = [&](const char* key, const std::string& path) {
    if (!path.empty()) req[key] = load_file(path);
  };
  file("complex", f.complex);
  file("pair", f.pair);
  file("sub", f.sub);
  file("terms", f.terms);
  file("region", f.region);
  file("tower", f.tower);
  file("witness", f.witness);
  file("system", f.system);
  file("point", f.point);
  if (!f.covers.empty()) {
    req["covers"] = nlohmann::json::array();
    for (const auto& c : f.covers) req["covers"].push_back(load_file(c));
  }
  if (!f.subset.empty()) req["subset"] = f.subset;
  if (!f.t.empty()) req["t"] = f.t;
  if (f.k) req["k"] = *f.k;
  if (f.reduced) req["reduced"] = true;
  if (command == "verify") {
    std::uint64_t seed = 0;
    if (f.seed) {
      seed = *f.seed;
    } else if (const char* env = std::getenv("GABLE_SEED")) {
      seed = std::stoull(env);
    }
    req["suite"] = f.suite;
    req["seed"] = seed;
    req["jobs"] = f.jobs;
    req["max_k"] = f.max_k;
  }
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simplicial homology, cross products, roofs and Cech towers"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--complex", f.complex, "Simplicial complex JSON")->check(CLI::ExistingFile);
  app.add_option("--pair", f.pair, "Complex pair JSON")->check(CLI::ExistingFile);
  app.add_option("--sub", f.sub, "Subcomplex JSON")->check(CLI::ExistingFile);
  app.add_option("--terms", f.terms, "Chain or term list JSON")->check(CLI::ExistingFile);
  app.add_option("--region", f.region, "Diagonal region(s) JSON")->check(CLI::ExistingFile);
  app.add_option("--tower", f.tower, "Cover tower JSON")->check(CLI::ExistingFile);
  app.add_option("--cover", f.covers, "Cover JSON (repeatable, fine first)")->check(CLI::ExistingFile);
  app.add_option("--witness", f.witness, "Refinement witness JSON")->check(CLI::ExistingFile);
  app.add_option("--system", f.system, "Inverse system or poset JSON")->check(CLI::ExistingFile);
  app.add_option("--subset", f.subset, "Element labels for cofinal")->delimiter(',');
  app.add_option("--point", f.point, "Point JSON for retract")->check(CLI::ExistingFile);
  app.add_option("--t", f.t, "Homotopy parameter in [0,1], e.g. 1/2");
  app.add_option("--k", f.k, "Dimension");
  app.add_flag("--reduced", f.reduced, "Reduced homology");
  app.add_option("--out", f.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", f.seed, "Random seed (default: GABLE_SEED or 0)");
  app.add_option("--jobs", f.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_option("--max-k", f.max_k, "Largest k for the parity suite");
  app.add_flag("--timing", f.timing, "Add wall-clock seconds to the report");

  for (const auto& name : gable::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->fallthrough();
    if (name == "verify") sub->add_option("suite", f.suite, "Suite name or 'all'")->required();
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  nlohmann::json rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    rep = gable::report(command, build_request(command, f));
  } catch (const std::exception& e) {
    // Input files that fail to load or parse.
    rep = {{"command", command}, {"ok", false}, {"error", {{"kind", "parse-error"}, {"message", e.what()}, {"witness", ""}}}};
  }
  if (f.timing) {
    rep["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  std::ostream& os = rep.at("ok").get<bool>() || rep.contains("result") ? std::cout : std::cerr;
  if (f.out == "text") {
    os << gable::render_text(rep);
  } else {
    os << rep.dump(2) << '\n';
  }
  return rep.at("ok").get<bool>() ? 0 : 1;
}
