#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sppspec/bloch.hpp"
#include "sppspec/io.hpp"
#include "sppspec/oracle.hpp"
#include "sppspec/pipeline.hpp"
#include "sppspec/quadrature.hpp"

namespace py = pybind11;
using namespace sppspec;

namespace {

std::vector<double> coeffs_as_double(const DiscriminantPolynomial& p) {
    return std::vector<double>(p.coeffs.begin(), p.coeffs.end());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Band spectra of one-dimensional periodic Dirac/Hill operators "
              "via spectral parameter power series";

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init<double, std::vector<double>>(), py::arg("period"), py::arg("samples"))
        .def_static("sample", &GridFunction::sample, py::arg("f"), py::arg("period"), py::arg("intervals"))
        .def_property_readonly("period", &GridFunction::period)
        .def_property_readonly("samples",
                               [](const GridFunction& g) {
                                   return std::vector<double>(g.samples().begin(), g.samples().end());
                               })
        .def("node", &GridFunction::node)
        .def("__len__", &GridFunction::size)
        .def("__getitem__", [](const GridFunction& g, std::size_t j) {
            if (j >= g.size()) throw py::index_error();
            return g[j];
        });

    m.def("integrate", &integrate, "Definite integral over one period (composite Simpson)");

    py::class_<PeriodicScalarPotential>(m, "PeriodicScalarPotential")
        .def_readonly("phi", &PeriodicScalarPotential::phi)
        .def_readonly("hill_offset", &PeriodicScalarPotential::hill_offset)
        .def("phi_at", [](const PeriodicScalarPotential& p, double x) {
            if (!p.phi_at) throw std::runtime_error("no closed-form evaluator attached");
            return p.phi_at(x);
        });

    m.def("make_potential", &make_potential, py::arg("phi"),
          py::arg("phi_at") = std::function<double(double)>(), py::arg("hill_offset") = 0.0);

    py::class_<RazavyParams>(m, "RazavyParams")
        .def(py::init([](double xi, int mm) { return RazavyParams{xi, mm}; }), py::arg("xi"),
             py::arg("m") = 2)
        .def_readwrite("xi", &RazavyParams::xi)
        .def_readwrite("m", &RazavyParams::m);

    m.def("razavy_A", &razavy_A);
    m.def("razavy_phi", &razavy_phi, py::arg("params"), py::arg("grid") = kDefaultGrid);
    m.def("razavy_v1", &razavy_v1, py::arg("params"), py::arg("grid") = kDefaultGrid);
    m.def("razavy_v2", &razavy_v2, py::arg("params"), py::arg("grid") = kDefaultGrid);
    m.def("build_u", &build_u);

    py::class_<SppsTable>(m, "SppsTable")
        .def_readonly("u", &SppsTable::u)
        .def_readonly("phi", &SppsTable::phi)
        .def_readonly("order", &SppsTable::order)
        .def_property_readonly("period", &SppsTable::period);

    m.def("build_table", &build_table, py::arg("u"), py::arg("phi"), py::arg("order"));
    m.def("estimate_radius", &estimate_radius);
    m.def("noise_radius", &noise_radius, py::arg("table"), py::arg("cap") = 0.1);
    m.def("save_table", py::overload_cast<const SppsTable&, const std::string&>(&save_table));
    m.def("load_table", py::overload_cast<const std::string&>(&load_table));

    py::class_<PairValues>(m, "PairValues")
        .def_readonly("v1", &PairValues::v1)
        .def_readonly("d1", &PairValues::d1)
        .def_readonly("v2", &PairValues::v2)
        .def_readonly("d2", &PairValues::d2)
        .def_readonly("trusted", &PairValues::trusted)
        .def("__iter__", [](const PairValues& p) {
            return py::iter(py::make_tuple(p.v1, p.d1, p.v2, p.d2));
        });

    m.def("f_pair", &f_pair, py::arg("table"), py::arg("x"), py::arg("lam"));
    m.def("g_pair", &g_pair, py::arg("table"), py::arg("phi0"), py::arg("x"), py::arg("lam"));
    m.def("intertwine", &intertwine, py::arg("f"), py::arg("fp"), py::arg("phi_x"), py::arg("omega"));

    py::class_<DiscriminantPolynomial>(m, "DiscriminantPolynomial")
        .def_property_readonly("coeffs", &coeffs_as_double)
        .def_readonly("order", &DiscriminantPolynomial::order)
        .def_readonly("period", &DiscriminantPolynomial::period)
        .def_readonly("trusted_radius", &DiscriminantPolynomial::trusted_radius)
        .def_readonly("noise_cap_radius", &DiscriminantPolynomial::noise_cap_radius)
        .def_readonly("lambda_shift", &DiscriminantPolynomial::lambda_shift)
        .def("__call__", &eval_discriminant_at_lambda);

    m.def("build_discriminant", &build_discriminant, py::arg("table"), py::arg("lambda_shift") = 0.0);
    m.def("eval_discriminant", &eval_discriminant);
    m.def("eval_discriminant_at_lambda", &eval_discriminant_at_lambda);

    py::enum_<BoundaryCondition>(m, "BoundaryCondition")
        .value("periodic", BoundaryCondition::periodic)
        .value("antiperiodic", BoundaryCondition::antiperiodic);
    py::enum_<EdgeMultiplicity>(m, "EdgeMultiplicity")
        .value("simple", EdgeMultiplicity::simple)
        .value("double_or_close", EdgeMultiplicity::double_or_close);
    py::enum_<SpectralClass>(m, "SpectralClass")
        .value("band", SpectralClass::band)
        .value("gap", SpectralClass::gap)
        .value("edge", SpectralClass::edge);

    py::class_<BandEdge>(m, "BandEdge")
        .def_readonly("lam", &BandEdge::lambda)
        .def_readonly("bc", &BandEdge::bc)
        .def_readonly("multiplicity", &BandEdge::multiplicity)
        .def("__repr__", [](const BandEdge& e) {
            std::ostringstream os;
            os << "BandEdge(" << e.lambda << ", " << to_string(e.bc) << ", " << to_string(e.multiplicity)
               << ")";
            return os.str();
        });

    py::class_<SpectrumReport>(m, "SpectrumReport")
        .def_readonly("edges", &SpectrumReport::edges)
        .def_readonly("bands", &SpectrumReport::bands)
        .def_readonly("gaps", &SpectrumReport::gaps)
        .def_readonly("dirac_edges", &SpectrumReport::dirac_edges)
        .def_readonly("no_real_omega", &SpectrumReport::no_real_omega)
        .def_readonly("lambda_shift", &SpectrumReport::lambda_shift);

    py::class_<ScanOptions>(m, "ScanOptions").def(py::init<>());
    m.def("find_band_edges", &find_band_edges, py::arg("poly"), py::arg("lambda_lo"),
          py::arg("lambda_hi"), py::arg("opts") = ScanOptions{});
    m.def("classify", &classify, py::arg("poly"), py::arg("lam"), py::arg("tol_edge") = 1e-9);
    m.def("dirac_eigenvalues", &dirac_eigenvalues);

    py::class_<RazavyReference>(m, "RazavyReference")
        .def_readonly("lambda0", &RazavyReference::lambda0)
        .def_readonly("lambda3", &RazavyReference::lambda3)
        .def_readonly("lambda4", &RazavyReference::lambda4);
    m.def("razavy_reference", &razavy_reference);

    m.def("matching_constants", &matching_constants, py::arg("f1T"), py::arg("f2T"), py::arg("f2pT"),
          py::arg("D"));
    m.def("bloch_factors", &bloch_factors);
    m.def("quasimomentum", &quasimomentum, py::arg("D"), py::arg("period"));

    py::enum_<Branch>(m, "Branch").value("plus", Branch::plus).value("minus", Branch::minus);

    py::class_<BlochSolution>(m, "BlochSolution")
        .def_readonly("lambda_mu", &BlochSolution::lambda_mu)
        .def_readonly("D", &BlochSolution::D)
        .def_readonly("alpha_plus", &BlochSolution::alpha_plus)
        .def_readonly("alpha_minus", &BlochSolution::alpha_minus)
        .def_readonly("beta_plus", &BlochSolution::beta_plus)
        .def_readonly("beta_minus", &BlochSolution::beta_minus)
        .def_readonly("k", &BlochSolution::k)
        .def_readonly("cell_plus", &BlochSolution::cell_plus)
        .def_readonly("cell_minus", &BlochSolution::cell_minus)
        .def_readonly("used_fallback", &BlochSolution::used_fallback);
    m.def("build_bloch", &build_bloch, py::arg("table"), py::arg("lambda_mu"));
    m.def("extend", &extend, py::arg("solution"), py::arg("branch"), py::arg("x"));

    py::class_<SpinorSolution>(m, "SpinorSolution")
        .def_readonly("lambda_mu", &SpinorSolution::lambda_mu)
        .def_readonly("omega", &SpinorSolution::omega)
        .def_readonly("a_plus", &SpinorSolution::a_plus)
        .def_readonly("a_minus", &SpinorSolution::a_minus)
        .def_readonly("b_plus", &SpinorSolution::b_plus)
        .def_readonly("b_minus", &SpinorSolution::b_minus)
        .def_readonly("beta_plus", &SpinorSolution::beta_plus)
        .def_readonly("beta_minus", &SpinorSolution::beta_minus)
        .def_readonly("upper_plus", &SpinorSolution::upper_plus)
        .def_readonly("upper_minus", &SpinorSolution::upper_minus)
        .def_readonly("lower_plus", &SpinorSolution::lower_plus)
        .def_readonly("lower_minus", &SpinorSolution::lower_minus);
    m.def("assemble_spinor", &assemble_spinor, py::arg("table"), py::arg("lambda_mu"), py::arg("sign"));

    py::class_<MonodromyResult>(m, "MonodromyResult")
        .def_readonly("lam", &MonodromyResult::lambda)
        .def_readonly("f1T", &MonodromyResult::f1T)
        .def_readonly("f1pT", &MonodromyResult::f1pT)
        .def_readonly("f2T", &MonodromyResult::f2T)
        .def_readonly("f2pT", &MonodromyResult::f2pT)
        .def_readonly("discriminant", &MonodromyResult::discriminant)
        .def_readonly("det", &MonodromyResult::det);
    m.def("integrate_monodromy", &integrate_monodromy, py::arg("q"), py::arg("lam"),
          py::arg("steps") = kOracleDefaultSteps);

    py::class_<OracleEdge>(m, "OracleEdge")
        .def_readonly("lam", &OracleEdge::lambda)
        .def_readonly("bc", &OracleEdge::bc)
        .def_readonly("multiplicity", &OracleEdge::multiplicity);
    py::class_<OracleScanOptions>(m, "OracleScanOptions").def(py::init<>());
    m.def("oracle_band_edges", &oracle_band_edges, py::arg("q"), py::arg("lambda_lo"),
          py::arg("lambda_hi"), py::arg("opts") = OracleScanOptions{});

    py::class_<Problem>(m, "Problem")
        .def_readonly("potential", &Problem::potential)
        .def_readonly("u", &Problem::u)
        .def_readonly("table", &Problem::table)
        .def_readonly("poly", &Problem::poly);
    m.def("build_problem", &build_problem, py::arg("potential"), py::arg("order") = kDefaultOrder);
    m.def("razavy_problem", &razavy_problem, py::arg("params"), py::arg("grid") = kDefaultGrid,
          py::arg("order") = kDefaultOrder);

    py::register_exception<DegenerateMatching>(m, "DegenerateMatchingError");
}
