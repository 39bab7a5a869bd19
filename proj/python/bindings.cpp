#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "transmute/amplitude.hpp"
#include "transmute/cli.hpp"
#include "transmute/errors.hpp"
#include "transmute/observables.hpp"
#include "transmute/oracle/bessel.hpp"
#include "transmute/oracle/quadrature.hpp"
#include "transmute/oracle/well.hpp"
#include "transmute/regulators.hpp"

namespace py = pybind11;
using namespace transmute;

namespace {

ComplexEnergy to_energy(const py::object& z) {
    if (py::isinstance<ComplexEnergy>(z)) {
        return z.cast<ComplexEnergy>();
    }
    return ComplexEnergy::from_complex(z.cast<complex>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Contact-interaction scattering in two dimensions";

    auto base = py::register_exception<Error>(m, "TransmuteError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DivergenceError>(m, "DivergenceError", base.ptr());
    py::register_exception<SingularInputError>(m, "SingularInputError", base.ptr());
    py::register_exception<UnsupportedRegulatorError>(m, "UnsupportedRegulatorError", base.ptr());
    py::register_exception<NoBoundStateError>(m, "NoBoundStateError", base.ptr());
    py::register_exception<UnitarityViolation>(m, "UnitarityViolation", base.ptr());
    auto numerical = py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
    py::register_exception<PrecisionFailure>(m, "PrecisionFailure", numerical.ptr());
    py::register_exception<PoleSingularity>(m, "PoleSingularity", base.ptr());

    m.attr("FOUR_PI") = kFourPi;

    py::class_<PhysicalScales>(m, "PhysicalScales")
        .def(py::init<>())
        .def(py::init<double>(), py::arg("kinetic_constant"))
        .def_property_readonly("kinetic_constant", &PhysicalScales::kinetic_constant)
        .def_property_readonly("free_density", &PhysicalScales::free_density);

    py::class_<ComplexEnergy>(m, "ComplexEnergy")
        .def_static("interior", &ComplexEnergy::interior, py::arg("re"), py::arg("im"))
        .def_static("above", &ComplexEnergy::above, py::arg("re"))
        .def_property_readonly("re", &ComplexEnergy::re)
        .def_property_readonly("im", &ComplexEnergy::im)
        .def_property_readonly("boundary", &ComplexEnergy::boundary)
        .def_property_readonly("value", &ComplexEnergy::value)
        .def("__repr__", [](const ComplexEnergy& z) {
            std::ostringstream s;
            s << "ComplexEnergy(" << z.re() << (z.boundary() ? " + i0" : " + " + std::to_string(z.im()) + "i") << ")";
            return s.str();
        });

    py::class_<PureDelta>(m, "PureDelta").def(py::init<>());
    py::class_<SharpCutoff>(m, "SharpCutoff")
        .def(py::init([](double lambda) { return std::get<SharpCutoff>(make_sharp_cutoff(lambda)); }), py::arg("cutoff"))
        .def_readonly("cutoff", &SharpCutoff::lambda);
    py::class_<GaussianFormFactor>(m, "GaussianFormFactor")
        .def(py::init([](double a) { return std::get<GaussianFormFactor>(make_gaussian(a)); }), py::arg("width"))
        .def_readonly("width", &GaussianFormFactor::width);
    py::class_<CircularWell>(m, "CircularWell")
        .def(py::init([](double a) { return std::get<CircularWell>(make_circular_well(a)); }), py::arg("radius"))
        .def_readonly("radius", &CircularWell::radius);

    m.def("regulator_name", [](const Regulator& r) { return std::string(regulator_name(r)); });
    m.def("spectral_weight", &spectral_weight, py::arg("reg"), py::arg("energy"), py::arg("scales") = PhysicalScales{});
    m.def("g_function", [](const Regulator& r, const py::object& z, const PhysicalScales& s) {
        return g_function(r, to_energy(z), s);
    }, py::arg("reg"), py::arg("z"), py::arg("scales") = PhysicalScales{});
    m.def("slide_kernel", [](const Regulator& r, const py::object& z, const py::object& z0, const PhysicalScales& s) {
        return slide_kernel(r, to_energy(z), to_energy(z0), s);
    }, py::arg("reg"), py::arg("z"), py::arg("z0"), py::arg("scales") = PhysicalScales{});

    m.def("tau_regulated", [](double eps, const Regulator& r, const py::object& z, const PhysicalScales& s) {
        return tau_regulated(Coupling(eps), r, to_energy(z), s).tau;
    }, py::arg("epsilon"), py::arg("reg"), py::arg("z"), py::arg("scales") = PhysicalScales{});
    m.def("slide", [](const py::object& z0, complex tau0, const Regulator& r, const py::object& z, const PhysicalScales& s) {
        return slide(FlowPoint{to_energy(z0), Amplitude{tau0}}, r, to_energy(z), s).tau;
    }, py::arg("z0"), py::arg("tau0"), py::arg("reg"), py::arg("z"), py::arg("scales") = PhysicalScales{});
    m.def("tau_renormalized", [](double eb, const py::object& z) { return tau_renormalized(eb, to_energy(z)).tau; },
          py::arg("binding_energy"), py::arg("z"));
    m.def("bound_state_pole", [](double eps, const Regulator& r, const PhysicalScales& s) -> py::object {
        const auto out = bound_state_pole(Coupling(eps), r, s);
        if (!out.state) {
            return py::none();
        }
        return py::make_tuple(out.state->binding_energy, out.state->residue);
    }, py::arg("epsilon"), py::arg("reg"), py::arg("scales") = PhysicalScales{},
       "(E_B, residue) or None when the model has no bound state");

    m.def("f_from_tau", [](complex tau, double k) { return f_from_tau(Amplitude{tau}, Wavenumber{k}); });
    m.def("total_target_length", [](complex tau, double k) { return total_target_length(Amplitude{tau}, Wavenumber{k}); });
    m.def("phase_shift_from_tau", [](complex tau) { return phase_shift_from_tau(Amplitude{tau}); });
    m.def("tau_from_phase_shift", &tau_from_phase_shift);
    m.def("optical_theorem_defect", [](complex tau, double k) { return optical_theorem_defect(Amplitude{tau}, Wavenumber{k}); });

    m.def("bessel_j0", &oracle::bessel_j0);
    m.def("bessel_j1", &oracle::bessel_j1);
    m.def("bessel_y0", &oracle::bessel_y0);
    m.def("bessel_y1", &oracle::bessel_y1);
    m.def("bessel_k0", &oracle::bessel_k0);
    m.def("bessel_k1", &oracle::bessel_k1);
    m.def("quadrature_g", [](const Regulator& r, const py::object& z) { return oracle::quadrature_g(r, to_energy(z)).value; });
    m.def("well_bound_state", [](double eps, double radius) {
        return oracle::well_bound_state(oracle::WellParameters::from_coupling(eps, radius));
    }, py::arg("epsilon"), py::arg("radius"));
    m.def("well_phase_shift", [](double eps, double radius, double k) {
        return oracle::well_phase_shift(oracle::WellParameters::from_coupling(eps, radius), Wavenumber{k});
    }, py::arg("epsilon"), py::arg("radius"), py::arg("k"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run transmute-lab in-process; returns (exit_code, stdout, stderr).");
}
