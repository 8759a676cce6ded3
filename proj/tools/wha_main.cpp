/**
 * @file wha_main.cpp
 * @brief CLI for constructing and verifying weak Hopf algebra data.
 *
 * Verbs:
 *   verify <file> --suite <name>   run a verification suite
 *   double <file> --out <file>    export the Drinfeld double
 *   dual <file> --out <file>      export the dual weak Hopf algebra
 *   example <name> [params...]    generate a ready-to-verify spec file
 *
 * The WHA_FIELD environment variable ("rational" or "prime p") overrides
 * the field of any file read or example generated. Exit status: 0 when
 * every check passes, 1 on verification failure, 2 on usage or input
 * errors.
 */

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "wha/suites.hpp"

namespace {

std::optional<wha::Field> field_override() {
  const char* env = std::getenv("WHA_FIELD");
  if (!env || !*env) return std::nullopt;
  std::string s(env);
  if (s == "rational") return wha::Field::rationals();
  if (s.rfind("prime ", 0) == 0) {
    return wha::Field::prime(std::stoull(s.substr(6)));
  }
  throw wha::Error(wha::Error::Kind::FieldError,
                   "WHA_FIELD must be 'rational' or 'prime p', got '" + s +
                       "'");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw wha::Error(wha::Error::Kind::BadParams, "cannot write " + path);
  }
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for weak Hopf algebra data"};
  app.require_subcommand(1);

  std::string in_path, out_path, suite = "all", report_path, name;
  std::string emit_double_path, emit_dual_path;
  bool quiet = false;
  std::vector<long> params;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("file", in_path, "spec file")->required();
  verify->add_option("--suite", suite,
                     "bialgebra|hopf|yd|entwining|double|duality|all");
  verify->add_option("--report", report_path, "write the full report here");
  verify->add_option("--emit-double", emit_double_path,
                     "also export the Drinfeld double spec");
  verify->add_option("--emit-dual", emit_dual_path,
                     "also export the dual spec");
  verify->add_flag("--quiet", quiet, "print only the summary line");

  CLI::App* dbl = app.add_subcommand("double", "export the Drinfeld double");
  dbl->add_option("file", in_path, "spec file")->required();
  dbl->add_option("--out", out_path, "output spec file")->required();

  CLI::App* dual = app.add_subcommand("dual", "export the dual");
  dual->add_option("file", in_path, "spec file")->required();
  dual->add_option("--out", out_path, "output spec file")->required();

  CLI::App* example = app.add_subcommand("example", "generate a spec file");
  example->add_option("name", name,
                      "group_algebra|discrete_groupoid|pair_groupoid|"
                      "groupoid|graded_yd|adjoint_yd|sweedler")
      ->required();
  example->add_option("params", params, "integer parameters");
  example->add_option("--out", out_path, "output spec file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    auto field = field_override();
    if (verify->parsed()) {
      wha::SpecFile spec = wha::parse_spec_path(in_path, field);
      wha::Report rep = wha::run_suite(spec, suite);
      if (!report_path.empty()) write_file(report_path, rep.to_text());
      if (quiet) {
        std::cout << rep.summary() << "\n";
      } else {
        std::cout << rep.to_text();
      }
      if (!emit_double_path.empty()) {
        wha::WeakHopfAlgebra h = wha::hopf_from_spec(spec);
        auto [drep, d] = wha::drinfeld_double(h);
        write_file(emit_double_path,
                   wha::emit_spec(wha::spec_from_hopf(
                       d.dbl, spec.name.empty() ? "double"
                                                : "double_of_" + spec.name)));
      }
      if (!emit_dual_path.empty()) {
        wha::WeakHopfAlgebra h = wha::hopf_from_spec(spec);
        write_file(emit_dual_path,
                   wha::emit_spec(wha::spec_from_hopf(
                       wha::dual_weak_hopf(h),
                       spec.name.empty() ? "dual" : "dual_of_" + spec.name)));
      }
      return rep.all_passed() ? 0 : 1;
    }
    if (dbl->parsed()) {
      wha::SpecFile spec = wha::parse_spec_path(in_path, field);
      wha::WeakHopfAlgebra h = wha::hopf_from_spec(spec);
      auto [drep, d] = wha::drinfeld_double(h);
      if (!drep.all_passed()) {
        std::cerr << "double construction checks failed: "
                  << drep.first_failure()->name << "\n";
        return 1;
      }
      write_file(out_path, wha::emit_spec(wha::spec_from_hopf(
                               d.dbl, spec.name.empty()
                                          ? "double"
                                          : "double_of_" + spec.name)));
      return 0;
    }
    if (dual->parsed()) {
      wha::SpecFile spec = wha::parse_spec_path(in_path, field);
      wha::WeakHopfAlgebra h = wha::hopf_from_spec(spec);
      write_file(out_path, wha::emit_spec(wha::spec_from_hopf(
                               wha::dual_weak_hopf(h),
                               spec.name.empty() ? "dual"
                                                 : "dual_of_" + spec.name)));
      return 0;
    }
    if (example->parsed()) {
      wha::Field f = field.value_or(wha::Field::rationals());
      wha::SpecFile spec = wha::generate_example(name, params, f);
      write_file(out_path, wha::emit_spec(spec));
      std::cout << "wrote " << out_path << " (" << wha::kind_name(spec.kind)
                << ", dim " << spec.dim << ")\n";
      return 0;
    }
  } catch (const wha::Error& e) {
    std::cerr << wha::kind_name(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
