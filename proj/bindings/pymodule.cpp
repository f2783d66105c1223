#include "tmcat/commands.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(tmcat_py, m) {
    m.doc() = "checks and constructions for generalized multicategories over "
              "cartesian monads on finite sets";

    // same contract as the command line: returns (status, report_json);
    // status 0 pass, 1 failed check, 2 bad input, 3 guard trip
    m.def(
        "run",
        [](const std::string& command, const std::string& options, const std::string& input) {
            tmcat::CommandResult r = tmcat::run_command_strings(command, options, input);
            return py::make_tuple(r.status, r.report.dump());
        },
        py::arg("command"), py::arg("options") = "{}", py::arg("input") = "null");

    m.def(
        "run_dot",
        [](const std::string& input) {
            tmcat::CommandResult r =
                tmcat::run_command_strings("export", "{\"format\": \"dot\"}", input);
            if (r.status != 0 || !r.raw) throw py::value_error(r.report.dump());
            return *r.raw;
        },
        py::arg("input"));
}
