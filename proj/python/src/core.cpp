#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sublink/cli.hpp"
#include "sublink/oracle.hpp"
#include "sublink/session.hpp"

namespace py = pybind11;
using namespace sublink;
using nlohmann::json;

namespace {

std::string canonical(const std::string& text, bool peano) {
  SyntaxOptions o;
  o.peano_numerals = peano;
  return print_formula(parse_formula(text, o), o);
}

std::string snapshot(const Session& s) {
  json j = {{"state", state_to_json(s.state())},
            {"can_undo", s.can_undo()},
            {"can_redo", s.can_redo()}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<std::runtime_error> error(m, "SublinkError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::exception& e) {
      auto j = error_to_json(e);
      if (!j) throw;
      py::object err = py::reinterpret_borrow<py::object>(error)(j->at("message").get<std::string>());
      err.attr("reason") = j->at("reason").get<std::string>();
      err.attr("details") = j->dump();
      PyErr_SetObject(error.ptr(), err.ptr());
    }
  });

  m.def("canonical", &canonical, py::arg("text"), py::arg("peano_numerals") = false,
        "Parse a formula and print it back in canonical form.");

  m.def(
      "entails",
      [](const std::vector<std::string>& hyps, const std::string& concl, int max_domain) {
        std::vector<Formula> hs;
        for (const auto& h : hyps) hs.push_back(parse_formula(h));
        return entails(hs, parse_formula(concl), max_domain);
      },
      py::arg("hypotheses"), py::arg("conclusion"), py::arg("max_domain") = 2);

  m.def(
      "check",
      [](const std::string& trace) {
        std::ostringstream out;
        int code = cli::check(json::parse(trace), out);
        return py::make_tuple(code, out.str());
      },
      py::arg("trace"), "Replay a JSON trace; returns (exit code, report).");

  py::class_<Session>(m, "Session")
      .def(py::init<std::string>(), py::arg("problem"))
      .def_static("replay", [](const std::string& trace) { return Session::replay(json::parse(trace)); })
      .def("snapshot", &snapshot)
      .def("render", [](const Session& s) { return s.state().render(); })
      .def_property_readonly("complete", [](const Session& s) { return s.state().complete(); })
      .def(
          "apply",
          [](Session& s, const std::string& action) {
            s.apply(action_from_json(json::parse(action)));
            return trace_to_json(s.last_trace()).dump();
          },
          py::arg("action"))
      .def(
          "candidates",
          [](const Session& s, int goal, int src_item, const Path& src_path, int dst_item) {
            json list = json::array();
            for (const auto& c : s.state().candidates(goal, src_item, src_path, dst_item))
              list.push_back({{"path", path_to_json(c.path)}, {"kind", kind_to_json(c.kind)}});
            return list.dump();
          },
          py::arg("goal"), py::arg("src_item"), py::arg("src_path"), py::arg("dst_item"))
      .def("trace", [](const Session& s) { return s.trace().dump(); });
}
