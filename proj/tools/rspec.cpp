#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "rspec/cli/commands.hpp"
#include "rspec/kernel/errors.hpp"

namespace {

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw rspec::InvalidArgument("cannot open workspace file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, supports and classifying subcategories of finitely generated modules"};
  app.require_subcommand(1);
  std::string workspace_path, format = "json";
  app.add_option("-w,--workspace", workspace_path, "DSL file with ring/module/prime bindings ('-' for stdin)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  struct Spec {
    std::string name, help;
    std::vector<std::pair<std::string, std::string>> options;
  };
  const std::vector<Spec> specs = {
      {"ass", "Associated primes", {{"module", "module name or expression"}, {"candidates", "candidate primes {..}"}}},
      {"supp", "Support as a specialization closure", {{"module", "module name or expression"}}},
      {"filtration", "Prime filtration", {{"module", "module name or expression"}}},
      {"spectral", "Spectral test", {{"module", "module name or expression"}}},
      {"torsion", "Torsion decomposition for a set", {{"module", "module"}, {"set", "closure{...} or set name"}}},
      {"bass", "Bass number flags", {{"module", "module"}, {"prime", "prime"}, {"range", "k0..k1 (default 0..2)"}}},
      {"injres", "Symbolic injective resolution", {{"module", "module"}, {"upto", "last degree (default 2)"}, {"candidates", "candidate primes {..}"}}},
      {"member",
       "Class membership",
       {{"module", "module"}, {"class", "serre|torsion|torsionfree|oneres|ctilde|psi"}, {"set", "set"},
        {"gseq", "G-sequence name"}, {"points", "point set"}, {"candidates", "sample primes {..}"}}},
      {"verify",
       "Verification suites",
       {{"suite", "p3_9|ashah|dr9_4|p5corr|supp_ass|torsionpair|injective|bass|cor710|homsub|gseq"},
        {"ring", "ring for bijection suites (default ZZ/12)"}, {"bound", "size bound (default 144)"},
        {"seed", "random seed (default 1)"}, {"scale", "case-count multiplier (default 1)"}}},
  };
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, CLI::App*> subs;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    subs[s.name] = sub;
    for (const auto& [opt, help] : s.options) sub->add_option("--" + opt, values[s.name][opt], help);
    // --ring is shared by every command for inline expressions
    if (s.name != "verify") sub->add_option("--ring", values[s.name]["ring"], "ring for inline expressions");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    rspec::Workspace ws;
    if (!workspace_path.empty()) ws = rspec::parse_workspace(read_source(workspace_path), workspace_path);
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      std::map<std::string, std::string> flags;
      for (const auto& [k, v] : values[name]) {
        if (sub->count("--" + k) > 0) flags[k] = v;
      }
      rspec::CommandOutcome out = rspec::run_command(ws, name, flags);
      out.report["provenance"]["workspace"] = workspace_path.empty() ? "none" : workspace_path;
      if (format == "json") {
        std::cout << out.report.dump(2) << "\n";
      } else {
        std::cout << rspec::render_text(out.report);
      }
      if (out.exit_code == 2) std::cerr << "counterexample found\n";
      return out.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
