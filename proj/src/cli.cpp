#include "symsteer/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symsteer/errors.hpp"
#include "symsteer/report.hpp"
#include "symsteer/selftest.hpp"
#include "symsteer/states.hpp"

namespace symsteer {

namespace {

struct Options {
  bool json = false;
  std::string out;
  double tolerance = 1e-9;
  std::string spec;
  std::string spec_b;
  std::string family;
  int n_min = 0;
  int n_max = 0;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

std::string sidecar_path(const std::string& mesh_path) {
  const std::string ext = ".csv";
  if (mesh_path.size() > ext.size() &&
      mesh_path.compare(mesh_path.size() - ext.size(), ext.size(), ext) == 0) {
    return mesh_path.substr(0, mesh_path.size() - ext.size()) + ".json";
  }
  return mesh_path + ".json";
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const SymmetricState state = parse_state(o.spec);
  emit(o, out, analyze(state, o.spec).dump(2) + "\n");
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const SweepFamily family = parse_family(o.family);
  const std::vector<SweepRow> rows = sweep(family, o.n_min, o.n_max);
  for (const SweepRow& r : rows) {
    const double want = sweep_closed_form(family, r.n);
    if (std::isnan(want)) continue;
    if (std::abs(r.lhs - want) > o.tolerance) {
      err << "error: row N=" << r.n << " lhs " << r.lhs << " deviates from closed form " << want
          << "\n";
      return kExitNumeric;
    }
  }
  if (o.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const SweepRow& r : rows) {
      j.push_back({{"N", r.n}, {"det_lambda", r.det_lambda}, {"r", r.r}, {"v", r.v}, {"lhs", r.lhs}});
    }
    emit(o, out, j.dump(2) + "\n");
  } else {
    emit(o, out, sweep_csv(rows));
  }
  return kExitOk;
}

int cmd_ellipsoid(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out.empty()) throw ParseError("ellipsoid needs --out PATH for the mesh");
  const SymmetricState state = parse_state(o.spec);
  const EllipsoidExport ex = export_ellipsoid(state, o.spec);
  if (ex.max_radius > 1.0 + o.tolerance) {
    err << "error: mesh leaves the Bloch ball (|p| = " << ex.max_radius << ")\n";
    return kExitNumeric;
  }
  write_file(o.out, mesh_csv(ex.mesh));
  write_file(sidecar_path(o.out), ex.sidecar.dump(2) + "\n");
  if (o.json) {
    out << ex.sidecar.dump(2) << "\n";
  } else {
    out << "wrote " << ex.mesh.size() << " points to " << o.out << " and "
        << sidecar_path(o.out) << "\n";
  }
  return kExitOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
  const SymmetricState a = parse_state(o.spec);
  const SymmetricState b = parse_state(o.spec_b);
  const Conversion c = convert(a, b);
  const nlohmann::json j = conversion_json(c, o.spec, o.spec_b);
  if (o.json || !o.out.empty()) {
    emit(o, out, j.dump(2) + "\n");
  } else {
    const auto& m = c.op.matrix();
    char buf[256];
    out << "A (det 1):\n";
    for (int i = 0; i < 2; ++i) {
      std::snprintf(buf, sizeof buf, "  [%.17g%+.17gi, %.17g%+.17gi]\n", m(i, 0).real(),
                    m(i, 0).imag(), m(i, 1).real(), m(i, 1).imag());
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "fidelity %.17g\n", c.fidelity);
    out << buf;
  }
  if (c.fidelity < 1.0 - 1e-8) {
    err << "error: conversion fidelity " << c.fidelity << " below 1 - 1e-8\n";
    return kExitNumeric;
  }
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const std::vector<SelftestCheck> checks = run_selftest();
  bool ok = true;
  nlohmann::json j = nlohmann::json::array();
  for (const SelftestCheck& c : checks) {
    ok = ok && c.passed;
    if (o.json) {
      j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    } else {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.detail << "]\n";
    }
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << (ok ? "selftest passed" : "selftest FAILED") << " (" << checks.size() << " checks)\n";
  }
  return ok ? kExitOk : kExitNumeric;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majorana geometry, entanglement and steering ellipsoids of symmetric multiqubit states",
               "symsteer"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON where a command has a text form");
  app.add_option("--out", o.out, "Write the primary output to PATH");
  app.add_option("--tolerance", o.tolerance, "Validation tolerance")->check(CLI::PositiveNumber);

  const std::string grammar =
      "State: ghz:N w:N wbar:N wwbar:N ghz-gen:N:theta wwbar-gen:N:theta dicke:N:k roots:[z1,...]";
  auto* analyze_cmd = app.add_subcommand("analyze", "Full JSON report for one state");
  analyze_cmd->add_option("state", o.spec, grammar)->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "Volume-monogamy table over N (CSV)");
  sweep_cmd->add_option("family", o.family, "wwbar, w or ghz")->required();
  sweep_cmd->add_option("n_min", o.n_min, "Smallest N (>= 3)")->required();
  sweep_cmd->add_option("n_max", o.n_max, "Largest N (<= 200)")->required();
  auto* ell_cmd = app.add_subcommand("ellipsoid", "64x32 canonical ellipsoid mesh plus JSON sidecar");
  ell_cmd->add_option("state", o.spec, grammar)->required();
  auto* conv_cmd = app.add_subcommand("convert", "Identical local operation between 3-qubit states");
  conv_cmd->add_option("source", o.spec, grammar)->required();
  conv_cmd->add_option("target", o.spec_b, grammar)->required();
  auto* self_cmd = app.add_subcommand("selftest", "Run the golden-value suite");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out, err);
    if (*ell_cmd) return cmd_ellipsoid(o, out, err);
    if (*conv_cmd) return cmd_convert(o, out, err);
    if (*self_cmd) return cmd_selftest(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitParse;
}

}  // namespace symsteer
