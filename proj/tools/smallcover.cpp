#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "smallcover/commands.hpp"

namespace cli = smallcover::cli;

int main(int argc, char** argv) {
  CLI::App app{"Small covers, mod-2 characteristic classes and the 120-cell extension"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  cli::CommonOptions common;
  std::string out_dir;
  app.add_option("--out", out_dir, "Directory for result files (default: stdout)");
  app.add_option("--seed", common.seed, "Recorded in the output header");
  app.add_option("--threads", common.threads, "Worker threads for canonical forms")->check(CLI::Range(1U, 256U));
  app.add_flag("--allow-large", common.allow_large, "Lift the facet-count guard on enumeration");

  std::string scheme_ref;
  auto* validate = app.add_subcommand("validate", "Check a scheme and print its face numbers");
  validate->add_option("scheme", scheme_ref, "Builtin name or scheme file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List small covers up to symmetry and recoloring");
  enumerate->add_option("scheme", scheme_ref, "Builtin name or scheme file")->required();

  std::optional<std::string> class_file;
  auto* sw = app.add_subcommand("sw-report", "Stiefel-Whitney classes of every small cover");
  sw->add_option("scheme", scheme_ref, "Builtin name or scheme file")->required();
  sw->add_option("--classes", class_file, "Class list instead of enumerating");

  cli::Build4dOptions b;
  auto* build = app.add_subcommand("build4d", "Extend a coloring into the ambient scheme and certify it");
  build->add_option("--base", b.base, "Base scheme")->capture_default_str();
  build->add_option("--ambient", b.ambient, "Ambient scheme")->capture_default_str();
  build->add_option("--class", b.class_ordinal, "Class ordinal from enumerate");
  build->add_option("--coloring", b.coloring_file, "Coloring file for the base scheme");
  build->add_option("--c", b.c, "auto, w1, or a facet bitstring")->capture_default_str();
  build->add_option("--facet-q", b.facet_q, "Ambient facet carrying the copy")->capture_default_str();
  build->add_option("--cert", b.cert_path, "Certificate path (default: build4d.cert in the output directory)");

  std::string cert_path;
  auto* rep = app.add_subcommand("replay", "Re-check a certificate");
  rep->add_option("certificate", cert_path, "Certificate file")->required();

  bool check = false;
  auto* gen = app.add_subcommand("gen120", "Generate the 120-cell scheme from coordinates");
  gen->add_flag("--check", check, "Compare with the bundled data instead of printing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  std::ofstream file;
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const std::string name = *gen && !check ? "c120.scheme" : app.get_subcommands().front()->get_name() + ".txt";
    const auto path = std::filesystem::path(out_dir) / name;
    file.open(path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << path.string() << "\n";
      return cli::kFailure;
    }
  }
  std::ostream& out = out_dir.empty() ? std::cout : file;
  if (b.cert_path.empty()) {
    b.cert_path = (std::filesystem::path(out_dir.empty() ? "." : out_dir) / "build4d.cert").string();
  }

  if (*validate) return cli::cmd_validate(scheme_ref, common, out, std::cerr);
  if (*enumerate) return cli::cmd_enumerate(scheme_ref, common, out, std::cerr);
  if (*sw) return cli::cmd_sw_report(scheme_ref, class_file, common, out, std::cerr);
  if (*build) return cli::cmd_build4d(b, common, out, std::cerr);
  if (*rep) return cli::cmd_replay(cert_path, common, out, std::cerr);
  if (*gen) return cli::cmd_gen120(check, common, out, std::cerr);
  return cli::kUsage;
}
