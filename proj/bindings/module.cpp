#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "dilogeq/dilog.hpp"
#include "dilogeq/json_io.hpp"
#include "dilogeq/reduction.hpp"
#include "dilogeq/relations.hpp"

namespace py = pybind11;

namespace {

using IndexPair = std::pair<int, int>;

dilogeq::Chord to_chord(const IndexPair& p, int n) { return dilogeq::Chord(p.first, p.second, n); }

IndexPair from_chord(const dilogeq::Chord& c) { return {c.i, c.j}; }

std::vector<IndexPair> from_chords(const std::vector<dilogeq::Chord>& cs) {
    std::vector<IndexPair> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(from_chord(c));
    return out;
}

// Configurations cross the boundary as plain floats, inf marking the point
// at infinity.
dilogeq::PointConfig to_config(const std::vector<double>& z) {
    std::vector<dilogeq::ProjPoint> pts;
    pts.reserve(z.size());
    for (double v : z)
        pts.push_back(std::isinf(v) ? dilogeq::ProjPoint::at_infinity()
                                    : dilogeq::ProjPoint::finite(v));
    return dilogeq::PointConfig(std::move(pts));
}

std::vector<double> from_config(const dilogeq::PointConfig& cfg) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(cfg.size()));
    for (const auto& p : cfg.points())
        out.push_back(p.infinite ? std::numeric_limits<double>::infinity() : p.value);
    return out;
}

dilogeq::ProjPoint to_point(double v) {
    return std::isinf(v) ? dilogeq::ProjPoint::at_infinity() : dilogeq::ProjPoint::finite(v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "polygon functional equations of the Rogers dilogarithm";

    m.attr("L1") = dilogeq::L1;
    m.def("li2", &dilogeq::li2, py::arg("x"));
    m.def("rogers_l", &dilogeq::rogers_l, py::arg("x"));

    m.def(
        "enumerate_chords",
        [](int n) { return from_chords(dilogeq::enumerate_chords(n)); },
        py::arg("n"));
    m.def(
        "crosses",
        [](const IndexPair& c1, const IndexPair& c2, int n) {
            return dilogeq::crosses(to_chord(c1, n), to_chord(c2, n));
        },
        py::arg("c1"), py::arg("c2"), py::arg("n"));
    m.def(
        "crossing_set",
        [](const IndexPair& c, int n) {
            return from_chords(dilogeq::crossing_set(to_chord(c, n)));
        },
        py::arg("c"), py::arg("n"));
    m.def(
        "forget",
        [](int n, const std::vector<int>& J) {
            std::vector<std::vector<int>> blocks;
            for (const auto& b : dilogeq::forget(n, J).blocks) blocks.push_back(b.vertices());
            return blocks;
        },
        py::arg("n"), py::arg("J"), "blocks of the decorated polygon after forgetting J");
    m.def(
        "pullback",
        [](const std::vector<int>& block_a, const std::vector<int>& block_b, int n) {
            return from_chords(dilogeq::make_term(block_a, block_b, n).chords);
        },
        py::arg("block_a"), py::arg("block_b"), py::arg("n"));

    m.def(
        "cross_ratio",
        [](double a, double b, double c, double d) {
            return dilogeq::cross_ratio(to_point(a), to_point(b), to_point(c), to_point(d));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def(
        "dihedral_coords",
        [](const std::vector<double>& z) {
            auto coords = dilogeq::dihedral_coords(to_config(z));
            py::dict out;
            for (const auto& [c, v] : coords.values()) out[py::make_tuple(c.i, c.j)] = v;
            return out;
        },
        py::arg("z"));
    m.def(
        "config_from_star",
        [](const std::vector<double>& x) {
            int n = static_cast<int>(x.size()) + 3;
            return from_config(dilogeq::config_from_star(dilogeq::StarCoords(n, x)));
        },
        py::arg("x"));
    m.def(
        "sample_cell",
        [](int n, std::uint64_t seed, double margin) {
            return from_config(dilogeq::sample_cell(n, seed, margin));
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("margin") = 1e-3);

    m.def(
        "chord_relation_residual",
        [](const std::vector<double>& z, const IndexPair& c) {
            auto cfg = to_config(z);
            return dilogeq::check_chord_relation(to_chord(c, cfg.size()),
                                                 dilogeq::dihedral_coords(cfg));
        },
        py::arg("z"), py::arg("c"));
    m.def(
        "wedge_sum_is_zero", [](int n) { return dilogeq::wedge_sum(n).is_zero(); }, py::arg("n"));
    m.def(
        "degenerate",
        [](const IndexPair& c, int n) {
            auto d = dilogeq::degenerate(to_chord(c, n));
            py::dict out;
            out["forced_one"] = from_chords(d.forced_one);
            out["split_sizes"] = py::make_tuple(d.n1, d.n2);
            out["side1"] = d.side1;
            out["side2"] = d.side2;
            out["side1_chords"] = from_chords(d.side1_chords);
            out["side2_chords"] = from_chords(d.side2_chords);
            return out;
        },
        py::arg("c"), py::arg("n"));

    m.def(
        "verify_eqn",
        [](int n, int samples, std::uint64_t seed, double margin) {
            return dilogeq::verify_eqn(n, samples, seed, margin).max_residual;
        },
        py::arg("n"), py::arg("samples") = 100, py::arg("seed") = 0, py::arg("margin") = 1e-3,
        "max residual of the n-gon equation over sampled cell points");
    m.def(
        "certificate_json",
        [](int n) {
            return dilogeq::certificate_to_json(dilogeq::build_certificate(n)).dump(2);
        },
        py::arg("n"));
    m.def(
        "verify_certificate",
        [](int n, int samples, double tol, std::uint64_t seed, double margin) {
            auto rep = dilogeq::verify_certificate(dilogeq::build_certificate(n), samples, tol,
                                                   seed, margin);
            py::dict out;
            out["structural_ok"] = rep.structural_ok;
            out["constants_ok"] = rep.constants_ok;
            out["recursion_ok"] = rep.recursion_ok;
            out["numeric_ok"] = rep.numeric_ok;
            out["max_instance_residual"] = rep.max_instance_residual;
            out["max_combination_residual"] = rep.max_combination_residual;
            out["ok"] = rep.ok();
            return out;
        },
        py::arg("n"), py::arg("samples") = 50, py::arg("tol") = 1e-10, py::arg("seed") = 0,
        py::arg("margin") = 1e-3);
}
