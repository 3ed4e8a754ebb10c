#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skolem/oracle.hpp"
#include "skolem/quintic.hpp"

namespace py = pybind11;
using namespace skolem;

namespace {

// BigInt round-trips through decimal strings; Python turns them back into
// ints on its side.
std::string verify_json(long long b, std::optional<int> prec) {
    return verify_theorem(BigInt(b), prec).to_json().dump();
}

std::vector<std::pair<std::string, std::string>> search(long long b,
                                                        long long bound) {
    SearchResult res = brute_force(BigInt(b), bound);
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(res.solutions.size());
    for (const auto& [m, n] : res.solutions)
        out.emplace_back(to_decimal(m), to_decimal(n));
    return out;
}

std::vector<std::vector<std::string>> unit_logs(long long b,
                                                std::optional<int> prec) {
    const QuinticInstance inst = build_instance(BigInt(b), prec);
    UnitSystem sys = build_unit_system({inst.xi1, inst.xi2});
    std::vector<std::vector<std::string>> out;
    for (const auto& L : sys.logs) {
        std::vector<std::string> coords;
        for (const auto& c : L.coeffs()) coords.push_back(to_decimal(c.residue()));
        out.push_back(std::move(coords));
    }
    return out;
}

std::string thue_value(long long b, const std::string& m,
                       const std::string& n) {
    return to_decimal(thue_form(BigInt(b), BigInt(m), BigInt(n)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "5-adic verification of m^5 + 4b^4 m n^4 - n^5 = 1";
    m.def("verify_json", &verify_json, py::arg("b"),
          py::arg("prec") = std::nullopt,
          "Full verification certificate as a JSON string.",
          py::call_guard<py::gil_scoped_release>());
    m.def("brute_force", &search, py::arg("b"), py::arg("bound"),
          "Exact solutions with |m|,|n| <= bound, as decimal-string pairs.",
          py::call_guard<py::gil_scoped_release>());
    m.def("unit_logs", &unit_logs, py::arg("b"),
          py::arg("prec") = std::nullopt,
          "Coordinates of L1, L2 as decimal residue strings.",
          py::call_guard<py::gil_scoped_release>());
    m.def("thue_form", &thue_value, py::arg("b"), py::arg("m"), py::arg("n"),
          "Exact value of m^5 + 4b^4 m n^4 - n^5 (decimal strings).");
}
