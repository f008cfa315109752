#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symsteer/locops.hpp"
#include "symsteer/states.hpp"
#include "symsteer/steering.hpp"

namespace symsteer {

// Full analysis of one state; `spec` is echoed into the report.
nlohmann::json analyze(const SymmetricState& state, const std::string& spec);

enum class SweepFamily { WWBar, W, Ghz };
SweepFamily parse_family(const std::string& name);  // ParseError if unknown
const char* family_name(SweepFamily f);

struct SweepRow {
  int n = 0;
  double det_lambda = 0.0;
  double r = 0.0;
  double v = 0.0;
  double lhs = 0.0;
};

// One row per N in [n_min, n_max], 3 <= n_min <= n_max <= 200. Rows are
// evaluated concurrently and returned in order of N.
std::vector<SweepRow> sweep(SweepFamily family, int n_min, int n_max);

// Closed-form lhs for the family, or NaN when none applies (WWbar below N = 4).
double sweep_closed_form(SweepFamily family, int n);

std::string sweep_csv(const std::vector<SweepRow>& rows);

struct EllipsoidExport {
  nlohmann::json sidecar;
  std::vector<MeshPoint> mesh;
  double max_radius = 0.0;  // largest |p| over the mesh
};
EllipsoidExport export_ellipsoid(const SymmetricState& state, const std::string& spec);

struct Conversion {
  LocalOp op;
  double fidelity = 0.0;
  std::array<ExtendedComplex, 3> source_roots;
  std::array<ExtendedComplex, 3> target_roots;
};

// Throws DomainError unless both states have exactly three distinct spinors.
// Roots are paired after ordering each triple by polar angle, then by
// azimuth measured clockwise.
Conversion convert(const SymmetricState& source, const SymmetricState& target);
nlohmann::json conversion_json(const Conversion& c, const std::string& src_spec,
                               const std::string& dst_spec);

nlohmann::json complex_json(cplx z);

}  // namespace symsteer
