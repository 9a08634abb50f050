#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbbox/errors.hpp"
#include "mbbox/pipeline.hpp"
#include "mbbox/verify.hpp"

namespace py = pybind11;

namespace {

mbbox::Cut cut_of(const std::string& c) {
    if (c == "pv") return mbbox::Cut::PrincipalValue;
    if (c == "above") return mbbox::Cut::AboveCut;
    if (c == "below") return mbbox::Cut::BelowCut;
    throw mbbox::InputError("unknown cut '" + c + "'");
}

mbbox::Kinematics kin(double s, double t, double eps, std::optional<double> msq) {
    mbbox::Kinematics k{s, t, msq, eps};
    mbbox::validate(k);
    return k;
}

py::dict evaluate(double s, double t, double eps, std::optional<double> msq,
                  const std::string& method, const std::string& cut, std::optional<int> nodes,
                  std::optional<double> height) {
    const auto k = kin(s, t, eps, msq);
    const auto v = mbbox::evaluate(k, mbbox::method_from_string(method), cut_of(cut),
                                   {nodes, height});
    py::dict d;
    d["value"] = v.value;
    d["method"] = mbbox::to_string(v.method);
    d["pieces"] = v.pieces;
    d["diagnostics"] = v.diagnostics;
    return d;
}

std::map<int, std::complex<double>> laurent(double s, double t, double eps,
                                            std::optional<double> msq) {
    const auto l = mbbox::laurent(kin(s, t, eps, msq));
    std::map<int, std::complex<double>> out;
    for (int p = -2; p <= 0; ++p) out[p] = l.coefficient(p);
    return out;
}

py::dict run_suite(const std::string& name) {
    mbbox::verify::SuiteReport r;
    if (name == "identities") {
        r = mbbox::verify::identities();
    } else if (name == "massless") {
        r = mbbox::verify::massless();
    } else if (name == "onemass") {
        r = mbbox::verify::onemass();
    } else {
        throw mbbox::InputError("unknown suite '" + name + "'");
    }
    py::list failed;
    for (const auto& c : r.checks) {
        if (!c.pass) failed.append(py::make_tuple(c.name, c.point, c.deviation, c.tolerance));
    }
    py::dict d;
    d["suite"] = r.name;
    d["checks"] = r.checks.size();
    d["failures"] = failed;
    d["seconds"] = r.seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Scalar one-loop box integrals in dimensional regularization";

    static py::exception<mbbox::InputError> input_error(m, "InputError", PyExc_ValueError);
    static py::exception<mbbox::NumericalError> numerical_error(m, "NumericalError",
                                                                PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const mbbox::InputError& e) {
            py::set_error(input_error, e.what());
        } catch (const mbbox::NumericalError& e) {
            py::set_error(numerical_error, e.what());
        }
    });

    m.def("evaluate", &evaluate, py::arg("s"), py::arg("t"), py::arg("eps"),
          py::arg("msq") = py::none(), py::arg("method") = "closed", py::arg("cut") = "pv",
          py::arg("nodes") = py::none(), py::arg("height") = py::none(),
          "Box value with its pieces and diagnostics. msq=None selects the massless box.");
    m.def("laurent", &laurent, py::arg("s"), py::arg("t"), py::arg("eps") = 0.3,
          py::arg("msq") = py::none(), "Coefficients of eps^-2, eps^-1, eps^0.");
    m.def("verify", &run_suite, py::arg("suite"));
}
