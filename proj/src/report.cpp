#include "symsteer/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <numbers>

#include "symsteer/entanglement.hpp"
#include "symsteer/errors.hpp"
#include "symsteer/majorana.hpp"
#include "symsteer/reductions.hpp"

namespace symsteer {

using nlohmann::json;

namespace {

json matrix_json(const Eigen::Matrix4d& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

template <typename Vec>
json vector_json(const Vec& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

json vec3_json(const Eigen::Vector3d& v) { return json::array({v[0], v[1], v[2]}); }

const char* type_name(CanonicalType t) { return t == CanonicalType::TypeI ? "I" : "II"; }

json canonical_json(const CanonicalForm& cf, const EllipsoidGeometry& geom) {
  json c;
  c["type"] = type_name(cf.type);
  c["x0"] = vector_json(std::array<double, 4>{cf.x0[0], cf.x0[1], cf.x0[2], cf.x0[3]});
  c["x0_minkowski_norm"] = cf.x0_minkowski_norm;
  if (cf.type == CanonicalType::TypeI) {
    c["semiaxes_sorted"] = vector_json(cf.semiaxes);
    c["sign"] = cf.sign;
  } else {
    c["a0"] = cf.a0;
    c["a1"] = cf.a1;
    c["phi0"] = cf.phi0;
  }
  c["lambda_canonical"] = matrix_json(cf.lambda_canonical);
  c["residual"] = cf.residual;
  c["semiaxes"] = vector_json(geom.semiaxes);
  c["principal_semiaxes"] = vector_json(geom.principal_semiaxes);
  c["center"] = vec3_json(geom.center);
  c["volume_fraction"] = geom.volume_fraction;
  c["degenerate"] = geom.degenerate;
  return c;
}

// Polar angle first, then azimuth measured clockwise from the x axis.
std::array<ExtendedComplex, 3> ordered_triple(const MajoranaRootSet& roots) {
  std::vector<ExtendedComplex> pts = roots.points();
  auto key = [](const ExtendedComplex& z) {
    const Spinor s = spinor_from_root(z);
    double az = std::fmod(2.0 * std::numbers::pi - s.alpha(), 2.0 * std::numbers::pi);
    if (az > 2.0 * std::numbers::pi - 1e-9) az = 0.0;
    return std::pair<double, double>(s.beta(), az);
  };
  std::stable_sort(pts.begin(), pts.end(), [&](const ExtendedComplex& a, const ExtendedComplex& b) {
    const auto ka = key(a), kb = key(b);
    if (std::abs(ka.first - kb.first) > 1e-9) return ka.first < kb.first;
    return ka.second < kb.second - 1e-9;
  });
  return {pts[0], pts[1], pts[2]};
}

std::array<ExtendedComplex, 3> distinct_triple(const SymmetricState& s, const char* which) {
  if (s.n_qubits() != 3) {
    throw DomainError(std::string(which) + " state must have 3 qubits");
  }
  const MajoranaRootSet roots = roots_from_dicke(s);
  const std::vector<ExtendedComplex> pts = roots.points();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (chordal_distance(pts[i], pts[j]) <= 1e-6) {
        throw DomainError(std::string(which) +
                          " state has a repeated spinor; not in D_{1,1,1}");
      }
  return ordered_triple(roots);
}

json point_json(const ExtendedComplex& z) {
  if (z.is_infinite()) return "inf";
  return complex_json(z.value());
}

}  // namespace

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json analyze(const SymmetricState& state, const std::string& spec) {
  const int n = state.n_qubits();
  json j;
  j["spec"] = spec;
  j["n_qubits"] = n;
  json dicke = json::array();
  for (cplx d : state.dicke()) dicke.push_back(complex_json(d));
  j["dicke"] = dicke;

  const MajoranaRootSet roots = roots_from_dicke(state);
  json maj;
  json finite = json::array();
  for (cplx z : roots.finite_roots) finite.push_back(complex_json(z));
  maj["finite_roots"] = finite;
  maj["infinity_count"] = roots.infinity_count;
  json spinors = json::array();
  for (const Spinor& s : spinors_from_roots(roots)) {
    spinors.push_back({{"alpha", s.alpha()}, {"beta", s.beta()}});
  }
  maj["spinors"] = spinors;
  j["majorana"] = maj;

  const DensityMatrix2 rho2 = reduce_two(state);
  const ConcurrenceResult conc = concurrence(rho2);
  j["concurrence"] = conc.concurrence;
  j["r_eigs"] = vector_json(conc.r_eigs);
  j["sqrt_r_eigs"] = vector_json(conc.sqrt_r_eigs);
  if (n >= 3) {
    const TangleReport t = n_tangle(state);
    json tj;
    tj["tau"] = t.tau;
    tj["det_rho1"] = t.det_rho1;
    tj["ckw_residual"] = t.ckw_residual ? json(*t.ckw_residual) : json(nullptr);
    j["tangle"] = tj;
  } else {
    j["tangle"] = nullptr;
  }

  const RealRep rep = real_rep(rho2);
  j["lambda"] = matrix_json(rep.lambda);
  const OmegaPair op = omega(rep);
  const EigenSystem4 es = real_eig4(op.g_omega);
  j["g_omega_eigs"] = vector_json(es.eigenvalues);

  if (op.g_omega.cwiseAbs().maxCoeff() <= 1e-12) {
    j["canonical"] = {{"type", "undefined"},
                      {"reason", "G Omega vanishes: product marginal has no Lorentz canonical form"}};
  } else {
    const CanonicalForm cf = canonical_form(rep);
    j["canonical"] = canonical_json(cf, ellipsoid(cf));
  }

  const MonogamyReport m = volume_monogamy(rep, rep.bob_bloch());
  j["volume"] = {{"det_lambda", m.det_lambda}, {"r", m.r},     {"v", m.v},
                 {"lhs", m.lhs},               {"bound", m.bound}, {"satisfied", m.satisfied}};
  return j;
}

SweepFamily parse_family(const std::string& name) {
  if (name == "wwbar") return SweepFamily::WWBar;
  if (name == "w") return SweepFamily::W;
  if (name == "ghz") return SweepFamily::Ghz;
  throw ParseError("unknown sweep family '" + name + "' (expected wwbar, w or ghz)");
}

const char* family_name(SweepFamily f) {
  switch (f) {
    case SweepFamily::WWBar:
      return "wwbar";
    case SweepFamily::W:
      return "w";
    case SweepFamily::Ghz:
      return "ghz";
  }
  return "?";
}

double sweep_closed_form(SweepFamily family, int n) {
  switch (family) {
    case SweepFamily::WWBar: {
      if (n == 3) {
        const double c = std::cbrt(4.0 / 25.0);
        return c * c;
      }
      const double c = std::cbrt(4.0 * (n - 4));
      return c * c / (static_cast<double>(n) * n);
    }
    case SweepFamily::W:
      return std::pow(n - 1.0, -4.0 / 3.0);
    case SweepFamily::Ghz:
      return 0.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<SweepRow> sweep(SweepFamily family, int n_min, int n_max) {
  if (n_min < 3 || n_max > 200 || n_min > n_max) {
    throw InvalidInput("sweep range must satisfy 3 <= n_min <= n_max <= 200");
  }
  const StateKind kind = family == SweepFamily::WWBar ? StateKind::WWBar
                         : family == SweepFamily::W   ? StateKind::W
                                                      : StateKind::Ghz;
  std::vector<std::future<SweepRow>> jobs;
  for (int n = n_min; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [kind, n] {
      const RealRep rep = real_rep(reduce_two(make_state(kind, n)));
      const MonogamyReport m = volume_monogamy(rep, rep.bob_bloch());
      return SweepRow{n, m.det_lambda, m.r, m.v, m.lhs};
    }));
  }
  std::vector<SweepRow> rows;
  for (auto& f : jobs) rows.push_back(f.get());
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "N,det_lambda,r,v,lhs\n";
  char buf[160];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", r.n, r.det_lambda, r.r, r.v,
                  r.lhs);
    out += buf;
  }
  return out;
}

EllipsoidExport export_ellipsoid(const SymmetricState& state, const std::string& spec) {
  const CanonicalForm cf = canonical_form(real_rep(reduce_two(state)));
  const EllipsoidGeometry g = ellipsoid(cf);
  EllipsoidExport ex;
  ex.mesh = ellipsoid_mesh(cf);
  for (const MeshPoint& p : ex.mesh) ex.max_radius = std::max(ex.max_radius, p.p.norm());
  ex.sidecar = {{"state", spec},
                {"N", state.n_qubits()},
                {"type", type_name(cf.type)},
                {"semiaxes", vector_json(g.semiaxes)},
                {"principal_semiaxes", vector_json(g.principal_semiaxes)},
                {"center", vec3_json(g.center)},
                {"volume_fraction", g.volume_fraction},
                {"degenerate", g.degenerate}};
  return ex;
}

Conversion convert(const SymmetricState& source, const SymmetricState& target) {
  const auto src = distinct_triple(source, "source");
  const auto dst = distinct_triple(target, "target");
  Conversion c{moebius_from_triples(src, dst), 0.0, src, dst};
  c.fidelity = fidelity(apply_identical_local(c.op, source), target);
  return c;
}

json conversion_json(const Conversion& c, const std::string& src_spec,
                     const std::string& dst_spec) {
  const Eigen::Matrix2cd& a = c.op.matrix();
  json m = json::array();
  for (int i = 0; i < 2; ++i) m.push_back({complex_json(a(i, 0)), complex_json(a(i, 1))});
  json src = json::array(), dst = json::array();
  for (int i = 0; i < 3; ++i) {
    src.push_back(point_json(c.source_roots[i]));
    dst.push_back(point_json(c.target_roots[i]));
  }
  return {{"source", src_spec},
          {"target", dst_spec},
          {"matrix", m},
          {"det", complex_json(a.determinant())},
          {"source_roots", src},
          {"target_roots", dst},
          {"fidelity", c.fidelity}};
}

}  // namespace symsteer
