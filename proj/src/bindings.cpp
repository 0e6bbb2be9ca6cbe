#include "ionsaddles/finder.hpp"
#include "ionsaddles/model.hpp"
#include "ionsaddles/ring.hpp"
#include "ionsaddles/stability.hpp"
#include "ionsaddles/symmetry.hpp"
#include "ionsaddles/version.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ionsaddles;

namespace {

using Positions = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;

Configuration to_config(const Positions& m) {
    Configuration c(static_cast<int>(m.rows()));
    for (int i = 0; i < c.size(); ++i)
        c.positions[static_cast<std::size_t>(i)] = m.row(i).transpose();
    return c;
}

Positions to_matrix(const Configuration& c) {
    Positions m(c.size(), 3);
    for (int i = 0; i < c.size(); ++i)
        m.row(i) = c.positions[static_cast<std::size_t>(i)].transpose();
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Saddle configurations of N classical electrons in the potential of a nucleus "
              "plus a static electric field";
    m.attr("__version__") = kVersion;

    py::register_exception<SingularConfigurationError>(m, "SingularConfigurationError");
    py::register_exception<stability::NotStationaryError>(m, "NotStationaryError");

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<int>(), py::arg("n_electrons"))
        .def(py::init<int, double, double>(), py::arg("n_electrons"), py::arg("nuclear_charge"),
             py::arg("field"))
        .def_readwrite("n_electrons", &ModelParams::n_electrons)
        .def_readwrite("nuclear_charge", &ModelParams::nuclear_charge)
        .def_readwrite("field", &ModelParams::field);

    m.def(
        "potential_energy",
        [](const Positions& pos, const ModelParams& params) {
            return potential_energy(to_config(pos), params);
        },
        py::arg("positions"), py::arg("params"));
    m.def(
        "gradient",
        [](const Positions& pos, const ModelParams& params) -> Positions {
            const Eigen::VectorXd g = gradient(to_config(pos), params);
            return Eigen::Map<const Positions>(g.data(), pos.rows(), 3);
        },
        py::arg("positions"), py::arg("params"), "Per-electron gradient, shape (N, 3)");
    m.def(
        "hessian",
        [](const Positions& pos, const ModelParams& params) {
            return hessian(to_config(pos), params);
        },
        py::arg("positions"), py::arg("params"), "Second derivatives, shape (3N, 3N)");
    m.def(
        "rescale",
        [](const Positions& pos, double from_field, double to_field) {
            return to_matrix(rescale(to_config(pos), from_field, to_field));
        },
        py::arg("positions"), py::arg("from_field"), py::arg("to_field"));
    m.def("rescale_energy", &rescale_energy, py::arg("energy"), py::arg("from_field"),
          py::arg("to_field"));
    m.def("rescale_lyapunov", &rescale_lyapunov, py::arg("lam"), py::arg("from_field"),
          py::arg("to_field"));

    py::class_<ring::RingSaddle>(m, "RingSaddle")
        .def_readonly("n", &ring::RingSaddle::n)
        .def_readonly("w", &ring::RingSaddle::w)
        .def_readonly("rho", &ring::RingSaddle::rho)
        .def_readonly("z", &ring::RingSaddle::z)
        .def_readonly("energy", &ring::RingSaddle::energy)
        .def("embed", [](const ring::RingSaddle& s) { return to_matrix(ring::embed(s)); });

    py::class_<ring::RingPlusCenterSaddle>(m, "RingPlusCenterSaddle")
        .def_readonly("n", &ring::RingPlusCenterSaddle::n)
        .def_readonly("z_c", &ring::RingPlusCenterSaddle::z_c)
        .def_readonly("rho", &ring::RingPlusCenterSaddle::rho)
        .def_readonly("z", &ring::RingPlusCenterSaddle::z)
        .def_readonly("energy", &ring::RingPlusCenterSaddle::energy)
        .def("embed",
             [](const ring::RingPlusCenterSaddle& s) { return to_matrix(ring::embed(s)); });

    py::class_<ring::RingPlusCenterResult>(m, "RingPlusCenterResult")
        .def_readonly("converged", &ring::RingPlusCenterResult::converged)
        .def_readonly("saddle", &ring::RingPlusCenterResult::saddle)
        .def_readonly("residual", &ring::RingPlusCenterResult::residual)
        .def_readonly("iterations", &ring::RingPlusCenterResult::iterations);

    m.def("repulsion_sum", &ring::repulsion_sum, py::arg("n"));
    m.def("ring_exists", &ring::exists, py::arg("n"));
    m.def("max_ring_n", &ring::max_ring_n);
    m.def("w_fit", &ring::w_fit, py::arg("n"));
    m.def(
        "ring_saddle",
        [](int n) -> py::object {
            const auto s = ring::ring_saddle(n);
            return s ? py::cast(*s) : py::none();
        },
        py::arg("n"), "Closed-form ring saddle, or None past the existence cutoff");
    m.def("ring_plus_center_saddle", &ring::ring_plus_center_saddle, py::arg("n"),
          py::arg("tol") = 1e-12, py::arg("max_iters") = 100);

    py::class_<stability::StabilitySpectrum>(m, "StabilitySpectrum")
        .def_readonly("eigenvalues", &stability::StabilitySpectrum::eigenvalues)
        .def_readonly("zero_tol", &stability::StabilitySpectrum::zero_tol)
        .def_readonly("lyapunov", &stability::StabilitySpectrum::lyapunov)
        .def_readonly("reaction_index", &stability::StabilitySpectrum::reaction_index)
        .def_readonly("reaction_ambiguous", &stability::StabilitySpectrum::reaction_ambiguous)
        .def_property_readonly("n_unstable", &stability::StabilitySpectrum::n_unstable)
        .def_property_readonly("n_zero", &stability::StabilitySpectrum::n_zero)
        .def_property_readonly("n_stable", &stability::StabilitySpectrum::n_stable);

    py::class_<stability::ExponentReport>(m, "ExponentReport")
        .def_readonly("lambda_r", &stability::ExponentReport::lambda_r)
        .def_readonly("n_u", &stability::ExponentReport::n_u)
        .def_readonly("mu", &stability::ExponentReport::mu);

    m.def(
        "analyze",
        [](const Positions& pos, const ModelParams& params, double zero_tol, double grad_tol) {
            return stability::analyze(to_config(pos), params, zero_tol, grad_tol);
        },
        py::arg("positions"), py::arg("params"), py::arg("zero_tol") = 1e-6,
        py::arg("grad_tol") = 1e-8);
    m.def("exponents", &stability::exponents, py::arg("spectrum"));

    py::class_<symmetry::SymmetryLabel>(m, "SymmetryLabel")
        .def_readonly("rotation_order", &symmetry::SymmetryLabel::rotation_order)
        .def_readonly("has_mirror", &symmetry::SymmetryLabel::has_mirror)
        .def("__str__", &symmetry::SymmetryLabel::str)
        .def("__repr__", [](const symmetry::SymmetryLabel& l) {
            return "SymmetryLabel('" + l.str() + "')";
        });

    m.def(
        "equivalent",
        [](const Positions& a, const Positions& b, double tol) {
            return symmetry::equivalent(to_config(a), to_config(b), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-5);
    m.def(
        "classify",
        [](const Positions& pos, double tol) { return symmetry::classify(to_config(pos), tol); },
        py::arg("positions"), py::arg("tol") = 1e-5);
    m.def(
        "canonical_invariants",
        [](const Positions& pos, double tol) {
            return symmetry::canonicalize(to_config(pos), tol).invariants;
        },
        py::arg("positions"), py::arg("tol") = 1e-5,
        "Sorted (z, rho) pairs plus the sorted pairwise distances");
    m.def(
        "canonical_orientation",
        [](const Positions& pos, double tol) {
            return to_matrix(symmetry::canonicalize(to_config(pos), tol).oriented);
        },
        py::arg("positions"), py::arg("tol") = 1e-5);

    py::class_<finder::SearchParams>(m, "SearchParams")
        .def(py::init<>())
        .def_readwrite("n_starts", &finder::SearchParams::n_starts)
        .def_readwrite("rng_seed", &finder::SearchParams::rng_seed)
        .def_readwrite("sample_rho_max", &finder::SearchParams::sample_rho_max)
        .def_readwrite("sample_z_min", &finder::SearchParams::sample_z_min)
        .def_readwrite("sample_z_max", &finder::SearchParams::sample_z_max)
        .def_readwrite("newton_tol", &finder::SearchParams::newton_tol)
        .def_readwrite("max_iters", &finder::SearchParams::max_iters)
        .def_readwrite("step_clamp", &finder::SearchParams::step_clamp)
        .def_readwrite("dedup_tol", &finder::SearchParams::dedup_tol)
        .def_readwrite("workers", &finder::SearchParams::workers)
        .def_readwrite("halfspace_filter", &finder::SearchParams::halfspace_filter);

    py::class_<finder::NewtonResult>(m, "NewtonResult")
        .def_property_readonly("status",
                               [](const finder::NewtonResult& r) { return to_string(r.status); })
        .def_property_readonly(
            "positions", [](const finder::NewtonResult& r) { return to_matrix(r.config); })
        .def_readonly("iterations", &finder::NewtonResult::iterations)
        .def_readonly("residual", &finder::NewtonResult::residual);

    m.def(
        "newton_refine",
        [](const Positions& start, const ModelParams& model, const finder::SearchParams& params) {
            return finder::newton_refine(to_config(start), model, params);
        },
        py::arg("start"), py::arg("model"), py::arg("params") = finder::SearchParams());

    py::class_<SaddleRecord>(m, "SaddleRecord")
        .def_readonly("n", &SaddleRecord::n)
        .def_readonly("nu", &SaddleRecord::nu)
        .def_readonly("energy", &SaddleRecord::energy)
        .def_readonly("n_u", &SaddleRecord::n_u)
        .def_readonly("lambda_r", &SaddleRecord::lambda_r)
        .def_readonly("mu", &SaddleRecord::mu)
        .def_property_readonly("symmetry",
                               [](const SaddleRecord& r) { return r.label.str(); })
        .def_property_readonly("positions",
                               [](const SaddleRecord& r) { return to_matrix(r.positions); })
        .def_readonly("hits", &SaddleRecord::hits)
        .def_readonly("seed", &SaddleRecord::seed)
        .def("__repr__", [](const SaddleRecord& r) {
            return "SaddleRecord(n=" + std::to_string(r.n) + ", nu=" + std::to_string(r.nu) +
                   ", energy=" + std::to_string(r.energy) + ", symmetry='" + r.label.str() + "')";
        });

    m.def(
        "search",
        [](int n, const finder::SearchParams& params) {
            py::gil_scoped_release release;
            return finder::search(n, params);
        },
        py::arg("n"), py::arg("params") = finder::SearchParams(),
        "Multistart enumeration; returns records sorted by increasing energy");
}
