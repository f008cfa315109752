#include <cmath>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symsteer/entanglement.hpp"
#include "symsteer/errors.hpp"
#include "symsteer/locops.hpp"
#include "symsteer/majorana.hpp"
#include "symsteer/reductions.hpp"
#include "symsteer/report.hpp"
#include "symsteer/selftest.hpp"
#include "symsteer/steering.hpp"

namespace py = pybind11;
using namespace symsteer;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

// Roots as Python values; the point at infinity becomes None.
py::list roots_list(const MajoranaRootSet& r) {
  py::list out;
  for (cplx z : r.finite_roots) out.append(z);
  for (int i = 0; i < r.infinity_count; ++i) out.append(py::none());
  return out;
}

ExtendedComplex point_from(const py::handle& h) {
  if (h.is_none()) return ExtendedComplex::infinity();
  if (py::isinstance<py::str>(h)) return parse_extended_complex(h.cast<std::string>());
  const cplx z = h.cast<cplx>();
  if (std::isinf(z.real()) || std::isinf(z.imag())) return ExtendedComplex::infinity();
  return ExtendedComplex(z);
}

SymmetricState state_from(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_state(h.cast<std::string>());
  return SymmetricState::from_dicke(h.cast<std::vector<cplx>>());
}

RealRep rep_from(const py::handle& h) { return real_rep(reduce_two(state_from(h))); }

}  // namespace

PYBIND11_MODULE(symsteer, m) {
  m.doc() = "Majorana geometry, entanglement and steering ellipsoids of symmetric multiqubit states";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  // A state argument is either a spec string ("wwbar:3", "roots:[0,1,inf]")
  // or a list of Dicke coefficients d_0..d_N.
  m.def("dicke", [](const py::object& s) { return state_from(s).dicke(); },
        py::arg("state"), "Normalised Dicke coefficients d_0..d_N (d_k: k qubits in |0>)");

  m.def("majorana_roots", [](const py::object& s) { return roots_list(roots_from_dicke(state_from(s))); },
        py::arg("state"), "Majorana roots; None stands for the point at infinity");

  m.def("from_roots",
        [](const py::iterable& pts) {
          std::vector<ExtendedComplex> p;
          for (const auto& h : pts) p.push_back(point_from(h));
          return dicke_from_roots(MajoranaRootSet::from_points(p)).dicke();
        },
        py::arg("roots"), "Dicke coefficients of the state with the given Majorana roots");

  m.def("register_state", [](const py::object& s) { return to_register(state_from(s)).amplitudes; },
        py::arg("state"), "2^N amplitudes, qubit 0 most significant");

  m.def("rho2", [](const py::object& s) { return Eigen::Matrix4cd(reduce_two(state_from(s)).m); },
        py::arg("state"));
  m.def("rho1", [](const py::object& s) { return Eigen::Matrix2cd(reduce_one(state_from(s)).m); },
        py::arg("state"));

  m.def("concurrence",
        [](const py::object& s) {
          const ConcurrenceResult c = concurrence(reduce_two(state_from(s)));
          return py::make_tuple(c.concurrence, c.r_eigs);
        },
        py::arg("state"), "(C, R eigenvalues) of the two-qubit marginal");

  m.def("n_tangle", [](const py::object& s) { return n_tangle(state_from(s)).tau; }, py::arg("state"));

  m.def("real_rep", [](const py::object& s) { return Eigen::Matrix4d(rep_from(s).lambda); }, py::arg("state"));

  m.def("volume_monogamy",
        [](const py::object& s) {
          const RealRep r = rep_from(s);
          const MonogamyReport v = volume_monogamy(r, r.bob_bloch());
          py::dict d;
          d["det_lambda"] = v.det_lambda;
          d["r"] = v.r;
          d["v"] = v.v;
          d["lhs"] = v.lhs;
          d["satisfied"] = v.satisfied;
          return d;
        },
        py::arg("state"));

  m.def("steer",
        [](const py::object& s, const Eigen::Vector3d& q) { return Eigen::Vector3d(steer(rep_from(s), q)); },
        py::arg("state"), py::arg("q"), "Alice's Bloch vector after Bob projects onto unit q");

  m.def("analyze",
        [](const py::object& s) {
          const std::string spec = py::isinstance<py::str>(s) ? s.cast<std::string>() : std::string("dicke");
          return to_python(analyze(state_from(s), spec));
        },
        py::arg("state"), "Full report, same layout as the CLI's analyze output");

  m.def("sweep",
        [](const std::string& family, int n_min, int n_max) {
          py::list rows;
          for (const SweepRow& r : sweep(parse_family(family), n_min, n_max)) {
            py::dict d;
            d["N"] = r.n;
            d["det_lambda"] = r.det_lambda;
            d["r"] = r.r;
            d["v"] = r.v;
            d["lhs"] = r.lhs;
            rows.append(d);
          }
          return rows;
        },
        py::arg("family"), py::arg("n_min"), py::arg("n_max"));

  m.def("ellipsoid_mesh",
        [](const py::object& s) {
          const auto mesh = ellipsoid_mesh(canonical_form(rep_from(s)));
          Eigen::MatrixXd pts(mesh.size(), 3);
          for (std::size_t i = 0; i < mesh.size(); ++i) pts.row(i) = mesh[i].p.transpose();
          return pts;
        },
        py::arg("state"), "64 x 32 canonical-ellipsoid points as a (2048, 3) array");

  m.def("convert",
        [](const py::object& a, const py::object& b) {
          const Conversion c = convert(state_from(a), state_from(b));
          return py::make_tuple(Eigen::Matrix2cd(c.op.matrix()), c.fidelity);
        },
        py::arg("source"), py::arg("target"), "(A with det 1, fidelity) for 3-qubit states");

  m.def("apply_local",
        [](const Eigen::Matrix2cd& a, const py::object& s) {
          return apply_identical_local(LocalOp(a), state_from(s)).dicke();
        },
        py::arg("a"), py::arg("state"), "Dicke coefficients of (A x ... x A)|psi>, renormalised");

  m.def("projective_distance",
        [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) { return projective_distance(a, b); },
        py::arg("a"), py::arg("b"), "Distance between the projective classes of two 2x2 matrices");

  m.def("selftest", [] {
    py::list out;
    for (const SelftestCheck& c : run_selftest()) out.append(py::make_tuple(c.name, c.passed, c.detail));
    return out;
  });
}
