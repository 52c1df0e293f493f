#include "lextri/cli.hpp"

#include "lextri/errors.hpp"
#include "lextri/io.hpp"
#include "lextri/lexenum.hpp"
#include "lextri/recover.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace lextri::cli {

namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

PointSet load_points(const std::string& path) {
  std::ifstream in = open_file(path);
  return parse_points(in);
}

int report_violations(const ValidationReport& report, std::ostream& out) {
  out << "invalid\n";
  for (const Violation& v : report.violations) out << v.message() << "\n";
  return kValidationFailure;
}

int cmd_hull(const std::string& points_path, std::ostream& out) {
  const PointSet ps = load_points(points_path);
  for (const Facet& f : hull_facets(ps, ps.all_labels())) {
    for (Label l : f.vertices) out << l << ' ';
    out << format_hyperplane(f.plane) << "\n";
  }
  return kOk;
}

int cmd_triangulate(const std::string& points_path, const std::string& script_path,
                    bool subdivision, std::ostream& out) {
  const PointSet ps = load_points(points_path);
  std::ifstream sin = open_file(script_path);
  const LexScript script = parse_script(sin, ps.size());
  if (subdivision) {
    write_cells(out, lex_subdivision(ps, script).cells);
    return kOk;
  }
  if (!is_full_script(ps, script))
    throw ParseError("script does not cover every point; pass --subdivision "
                     "to print the partial subdivision");
  write_cells(out, lex_triangulation(ps, script).cells);
  return kOk;
}

int cmd_gkz(const std::string& points_path, const std::string& tri_path,
            std::ostream& out) {
  const PointSet ps = load_points(points_path);
  std::ifstream tin = open_file(tri_path);
  Subdivision s;
  s.base = &ps;
  for (Cell& c : parse_cells(tin, ps.size())) s.cells.insert(std::move(c));
  const ValidationReport report = validate(s);
  if (!report.valid) return report_violations(report, out);
  Triangulation t;
  try {
    t = Triangulation(s);
  } catch (const NotSimplicialError& e) {
    out << "invalid\n" << e.what() << "\n";
    return kValidationFailure;
  }
  write_gkz(out, gkz_vector(t));
  return kOk;
}

int cmd_recover(const std::string& points_path, const std::string& gkz_path,
                std::ostream& out, std::ostream& err) {
  const PointSet ps = load_points(points_path);
  std::ifstream gin = open_file(gkz_path);
  const GKZVector z = parse_gkz(gin, ps.size());
  try {
    const RecoveryResult r = recover(ps, z);
    write_script(out, r.script);
    out << "\n";
    write_cells(out, r.triangulation.cells);
    return kOk;
  } catch (const RecoverError& e) {
    err << "error: " << to_string(e.reason) << "\n";
    return kRecoveryFailure;
  }
}

int cmd_enumerate(const std::string& points_path, std::optional<std::uint64_t> limit,
                  std::uint64_t seed, std::ostream& out) {
  const PointSet ps = load_points(points_path);
  EnumerateOptions opts;
  opts.limit = limit;
  opts.seed = seed;
  const RoundtripReport rt = roundtrip_all(ps, opts);
  const EnumerationReport& report = rt.enumeration;
  out << "scripts: " << report.scripts_run;
  if (report.sampled) out << " (sampled, seed " << report.seed << ")";
  out << "\n";
  out << "distinct: " << report.items.size() << "\n";
  for (std::size_t i = 0; i < report.items.size(); ++i) {
    const EnumeratedTriangulation& item = report.items[i];
    out << "triangulation " << i + 1 << "\n";
    out << "script:";
    for (const ScriptEntry& e : item.witness) out << ' ' << format_script_entry(e);
    out << "\n";
    out << "cells:";
    bool first = true;
    for (const Cell& c : item.triangulation.cells) {
      out << (first ? " " : " / ");
      first = false;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (j) out << ' ';
        out << c[j];
      }
    }
    out << "\n";
    out << "gkz:";
    for (const Rational& q : item.gkz) out << ' ' << format_rational(q);
    out << "\n";
  }
  out << "gkz-injective: " << (report.gkz_injective() ? "yes" : "NO") << "\n";
  out << "roundtrip: " << (rt.checked - rt.failures.size()) << "/" << rt.checked
      << (rt.all_ok() ? " ok" : " FAILED") << "\n";
  return rt.all_ok() ? kOk : kRecoveryFailure;
}

int cmd_lift(const std::string& points_path, const std::string& heights_path,
             bool upper, std::ostream& out) {
  const PointSet ps = load_points(points_path);
  std::ifstream hin = open_file(heights_path);
  const std::vector<Rational> heights = parse_gkz(hin, ps.size());
  const Subdivision s =
      regular_from_heights(ps, heights, upper ? LiftSide::Upper : LiftSide::Lower);
  write_cells(out, s.cells);
  return kOk;
}

int cmd_check(const std::string& points_path, const std::string& tri_path,
              std::ostream& out) {
  const PointSet ps = load_points(points_path);
  std::ifstream tin = open_file(tri_path);
  Subdivision s;
  s.base = &ps;
  for (Cell& c : parse_cells(tin, ps.size())) s.cells.insert(std::move(c));
  const ValidationReport report = validate(s);
  if (!report.valid) return report_violations(report, out);
  out << "valid\n";
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact lexicographic triangulations, GKZ-vectors and recovery"};
  app.require_subcommand(1);

  std::string points_path, script_path, tri_path, gkz_path, heights_path;
  bool subdivision = false, upper = false;
  std::uint64_t limit = 0, seed = 0;

  CLI::App* hull = app.add_subcommand("hull", "print the facets of the point set");
  hull->add_option("points", points_path, "points file")->required();

  CLI::App* triangulate =
      app.add_subcommand("triangulate", "run a script and print the triangulation");
  triangulate->add_option("points", points_path, "points file")->required();
  triangulate->add_option("script", script_path, "script file")->required();
  triangulate->add_flag("--subdivision", subdivision,
                        "accept a partial script and print its subdivision");

  CLI::App* gkz = app.add_subcommand("gkz", "print the GKZ-vector of a triangulation");
  gkz->add_option("points", points_path, "points file")->required();
  gkz->add_option("triangulation", tri_path, "triangulation file")->required();

  CLI::App* recover_cmd =
      app.add_subcommand("recover", "recover a lexicographic triangulation from its GKZ-vector");
  recover_cmd->add_option("points", points_path, "points file")->required();
  recover_cmd->add_option("gkz", gkz_path, "GKZ-vector file")->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate lexicographic triangulations");
  enumerate->add_option("points", points_path, "points file")->required();
  CLI::Option* limit_opt =
      enumerate->add_option("--limit", limit, "sample this many random scripts");
  enumerate->add_option("--seed", seed, "sampling seed");

  CLI::App* lift = app.add_subcommand("lift", "subdivision induced by lifting heights");
  lift->add_option("points", points_path, "points file")->required();
  lift->add_option("heights", heights_path, "heights file")->required();
  lift->add_flag("--upper", upper, "project the upper facets instead of the lower");

  CLI::App* check = app.add_subcommand("check", "validate a triangulation file");
  check->add_option("points", points_path, "points file")->required();
  check->add_option("triangulation", tri_path, "triangulation file")->required();

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (hull->parsed()) return cmd_hull(points_path, out);
    if (triangulate->parsed())
      return cmd_triangulate(points_path, script_path, subdivision, out);
    if (gkz->parsed()) return cmd_gkz(points_path, tri_path, out);
    if (recover_cmd->parsed()) return cmd_recover(points_path, gkz_path, out, err);
    if (enumerate->parsed()) {
      std::optional<std::uint64_t> limit_arg;
      if (limit_opt->count() > 0) limit_arg = limit;
      return cmd_enumerate(points_path, limit_arg, seed, out);
    }
    if (lift->parsed()) return cmd_lift(points_path, heights_path, upper, out);
    if (check->parsed()) return cmd_check(points_path, tri_path, out);
  } catch (const RecoverError& e) {
    err << "error: " << to_string(e.reason) << "\n";
    return kRecoveryFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace lextri::cli
