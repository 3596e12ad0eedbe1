#include "linkbound/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "linkbound/acceptance.hpp"
#include "linkbound/catalog.hpp"

namespace linkbound {
namespace {

struct Options {
  int indent = 2;
  std::string input;
  std::vector<std::string> band_certs;
  int degree_cap = 12;
  int samples = 0;
  std::string base;
  std::string decl;
  std::string catalog;
  bool acceptance = false;
};

int cmd_invariants(const Options& o, std::ostream& out) {
  LinkInput in = link_from_json(read_json_file(o.input));
  out << dump(invariants_to_json(compute_invariants(in.seifert)), o.indent) << "\n";
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  LinkInput in = link_from_json(read_json_file(o.input));
  std::vector<BandCertificate> certs;
  for (const auto& c : o.band_certs) {
    try {
      certs.push_back(parse_band_certificate(c));
    } catch (const InvalidDeclaration&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0, 0);
    }
  }
  BoundReport r = assemble_report(in.seifert, certs, o.degree_cap);
  out << dump(report_to_json(r), o.indent) << "\n";
  return kExitOk;
}

int cmd_infect(const Options& o, std::ostream& out) {
  BoundReport base = report_from_json(read_json_file(o.base));
  base.check_consistent();
  json decl_doc = read_json_file(o.decl);
  InfectionDecl decl = infection_from_json(decl_doc);
  SeifertData v;
  if (!o.input.empty()) {
    v = link_from_json(read_json_file(o.input)).seifert;
  } else if (decl_doc.contains("base")) {
    v = link_from_json(decl_doc["base"]).seifert;
  } else {
    throw SchemaError("declaration: no base link; add a \"base\" field or pass --input");
  }
  out << dump(report_to_json(infection_transfer(base, v, decl)), o.indent) << "\n";
  return kExitOk;
}

int cmd_signature_csv(const Options& o, std::ostream& out) {
  if (o.samples < 0) throw ParseError("--samples must be >= 0", 0, 0);
  LinkInput in = link_from_json(read_json_file(o.input));
  write_signature_csv(out, in.seifert, signature_function(in.seifert), o.samples);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::string path = o.catalog;
  if (path.empty()) {
    if (const char* env = std::getenv("LINKBOUND_CATALOG")) path = env;
  }
  std::vector<CatalogEntry> entries = path.empty() ? builtin_catalog() : catalog_from_json(read_json_file(path));
  if (entries.empty()) err << "warning: catalog is empty; nothing to verify\n";
  int failed = 0;
  for (const auto& check : verify_catalog(entries, o.degree_cap)) {
    if (check.passed()) {
      out << "PASS " << check.name << "\n";
      continue;
    }
    ++failed;
    out << "FAIL " << check.name << "\n";
    for (const auto& f : check.failures) out << "  " << f << "\n";
  }
  out << "catalog: " << entries.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  if (o.acceptance) {
    auto results = run_acceptance();
    print_acceptance(out, results);
    for (const auto& r : results) failed += r.passed ? 0 : 1;
  }
  return failed == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Levine-Tristram signatures, Alexander polynomials and 4-genus bounds of knots and links"};
  app.name(args.empty() ? "linkbound" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--json-indent", o.indent, "spaces per JSON indentation level; negative for compact")
      ->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "Alexander polynomial, nullity and signature function as JSON");
  inv->add_option("input,--input", o.input, "link file (braid or Seifert matrix)")->required();

  auto* bound = app.add_subcommand("bound", "certified lower and upper bounds on the 4-genus");
  bound->add_option("input,--input", o.input, "link file")->required();
  bound->add_option("--band-cert", o.band_certs, "band-move certificate b,u (repeatable)");
  bound->add_option("--degree-cap", o.degree_cap, "largest degree factored by the Fox-Milnor test")
      ->capture_default_str();

  auto* infect = app.add_subcommand("infect", "carry a bound report through an infection");
  infect->add_option("base,--base", o.base, "bound report of the base link (JSON)")->required();
  infect->add_option("decl,--decl", o.decl, "infection declaration (JSON)")->required();
  infect->add_option("--input", o.input, "base link file, overriding the declaration's \"base\" field");

  auto* csv = app.add_subcommand("signature-csv", "signature function as CSV rows for plotting");
  csv->add_option("input,--input", o.input, "link file")->required();
  csv->add_option("--samples", o.samples, "number of float-oracle sample rows")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "regression-check the catalog");
  verify->add_option("--catalog", o.catalog, "catalog file; defaults to $LINKBOUND_CATALOG, then the built-in one");
  verify->add_flag("--acceptance", o.acceptance, "also run the acceptance criteria");
  verify->add_option("--degree-cap", o.degree_cap, "largest degree factored by the Fox-Milnor test")
      ->capture_default_str();

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();  // program name
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out;
    std::ostringstream o_err;
    int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*inv) return cmd_invariants(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*infect) return cmd_infect(o, out);
    if (*csv) return cmd_signature_csv(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InconsistentBounds& e) {
    err << "inconsistent bounds: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const InvalidSeifertData& e) {
    err << "invalid Seifert data: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InvalidDeclaration& e) {
    err << "invalid declaration: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::logic_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

}  // namespace linkbound
