#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "boxball/bbs.hpp"
#include "boxball/greene.hpp"
#include "boxball/knuth.hpp"
#include "boxball/rs.hpp"
#include "boxball/serialize.hpp"
#include "boxball/verify.hpp"

namespace py = pybind11;
using namespace boxball;

namespace {

// Permutations arrive either as a string ("452361", "10,1,2,...") or a sequence of ints.
Permutation to_perm(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_permutation(obj.cast<std::string>());
  return Permutation(obj.cast<std::vector<int>>());
}

BbsState to_state(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_state(obj.cast<std::string>());
  return state_from_permutation(to_perm(obj));
}

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_boxball, m) {
  m.doc() = "Box-ball system, RS insertion and Knuth-class tools";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  // DomainError derives from std::invalid_argument and surfaces as ValueError.

  m.def("parse_permutation", [](const std::string& s) { return parse_permutation(s).values(); });

  m.def(
      "simulate",
      [](const py::object& start, int steps, const std::string& stepper) {
        if (stepper != "direct" && stepper != "carrier") throw DomainError("stepper must be direct or carrier");
        BbsState s = to_state(start);
        std::vector<std::string> out{s.to_ascii()};
        for (int t = 0; t < steps; ++t) {
          s = stepper == "direct" ? step_direct(s) : step_carrier(s);
          out.push_back(s.to_ascii());
        }
        return out;
      },
      py::arg("start"), py::arg("steps"), py::arg("stepper") = "direct",
      "ASCII states at t = 0..steps, '.' marking empty boxes.");

  m.def("carrier_eject", &carrier_eject, py::arg("boxes"), py::arg("n"),
        "Run the carrier over boxes (0 = empty) and return the ejected stream.");
  m.def("carrier_trace", [](const py::object& s) { return carrier_trace(to_state(s)); });
  m.def("is_steady", [](const py::object& s) { return is_steady(to_state(s)); });
  m.def("steady_state_time", [](const py::object& w) { return steady_state_time(to_perm(w)); });
  m.def("soliton_decomposition", [](const py::object& w) { return soliton_decomposition(to_perm(w)).rows(); });

  m.def("rs", [](const py::object& w) {
    const RsPair pq = rs_insert(to_perm(w));
    return py::make_tuple(pq.p.rows(), pq.q.rows());
  });
  m.def("inverse_rs", [](const std::vector<std::vector<int>>& p, const std::vector<std::vector<int>>& q) {
    return inverse_rs(RsPair{Tableau(p), Tableau(q)}).values();
  });
  m.def("qhat_class", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& w : enumerate_qhat_class(n)) out.push_back(w.values());
    return out;
  });

  m.def(
      "greene_profile",
      [](const py::object& w, bool oracle) {
        const Permutation p = to_perm(w);
        return to_py(to_json(oracle ? greene_profile_oracle(p) : greene_profile(p)));
      },
      py::arg("w"), py::arg("oracle") = false);

  m.def(
      "knuth_class",
      [](const py::object& w, std::size_t max_vertices) {
        return to_py(to_json(knuth_class_graph(to_perm(w), max_vertices)));
      },
      py::arg("w"), py::arg("max_vertices") = kDefaultClassCap);
  m.def("knuth_dot", [](const py::object& w) { return to_dot(knuth_class_graph(to_perm(w))); });

  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, int n, int jobs, std::optional<int> max_n) {
        VerifyOptions opts;
        opts.jobs = jobs;
        opts.max_n = max_n;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, n, opts);
        }
        return to_py(to_json(r));
      },
      py::arg("suite"), py::arg("n"), py::arg("jobs") = 1, py::arg("max_n") = py::none());
}
