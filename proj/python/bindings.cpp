#include "gable/commands.hpp"
#include "gable/error.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

PYBIND11_MODULE(_gable, m) {
  m.doc() = "Exact simplicial homology, cross products, roofs and Cech towers";

  static py::exception<gable::Error> error(m, "GableError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gable::Error& e) {
      py::tuple args = py::make_tuple(e.kind(), std::string(e.what()), e.witness());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("commands", &gable::command_names, "Names accepted by run().");
  m.def(
      "run",
      [](const std::string& command, const std::string& request) {
        nlohmann::json result;
        {
          py::gil_scoped_release release;
          result = gable::execute(command, nlohmann::json::parse(request));
        }
        return result.dump();
      },
      py::arg("command"), py::arg("request"),
      "Runs a command on a JSON request string and returns the JSON result string.");
}
