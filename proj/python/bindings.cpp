#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "selfmaps/descriptor.hpp"
#include "selfmaps/report.hpp"
#include "selfmaps/verify.hpp"

namespace py = pybind11;
using namespace selfmaps;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

CurveModel curve_of(const std::optional<std::pair<int, Int>>& order)
{
    if (!order) return CurveModel::no_cm();
    return CurveModel::with_cm(OrderParams::make(order->first, order->second));
}

py::object report_for(const SurfaceDescriptor& d)
{
    Report r;
    r.tool_version = tool_version();
    r.command = "classify";
    r.subject = describe(d);
    r.verdict = classify(d);
    return to_py(r);
}

}  // namespace

PYBIND11_MODULE(_selfmaps, m)
{
    m.doc() = "Degrees of self-maps of smooth projective surfaces";
    m.attr("__version__") = tool_version();
    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    py::register_exception<DescriptorError>(m, "DescriptorError", PyExc_ValueError);

    m.def("norm", [](int t, Int n, Int x, Int y) { return norm({OrderParams::make(t, n), x, y}); },
          py::arg("t"), py::arg("n"), py::arg("x"), py::arg("y"));
    m.def("conjugate", [](int t, Int n, Int x, Int y) {
        const auto c = conjugate({OrderParams::make(t, n), x, y});
        return std::make_pair(c.x, c.y);
    });
    m.def("elements_of_norm", [](int t, Int n, Int norm_value) {
        std::vector<std::pair<Int, Int>> out;
        for (const auto& e : elements_of_norm(OrderParams::make(t, n), norm_value)) out.emplace_back(e.x, e.y);
        return out;
    });
    m.def("degree_two_table", [](Int n_max) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : degree_two_table(n_max))
            rows.push_back({{"order", r.order}, {"discriminant", r.order.discriminant()}, {"elements", r.elements}});
        return to_py(rows);
    }, py::arg("n_max") = 10);
    m.def("legendre", &legendre, py::arg("a"), py::arg("p"));
    m.def("split_type", [](int t, Int n, Int p) { return to_string(split_type(OrderParams::make(t, n), p)); });

    m.def("classify_file", [](const std::string& path) { return report_for(load_descriptor(path)); },
          py::arg("path"));
    m.def("classify_text", [](const std::string& text, const std::string& base_dir) {
        std::istringstream in(text);
        return report_for(parse_descriptor(in, base_dir));
    }, py::arg("text"), py::arg("base_dir") = ".");

    m.def("scan", [](std::optional<std::pair<int, Int>> order, Int k, Int v1, Int v2, Int bound) {
        const auto desc = EllipticBundleDescriptor::split_torsion(curve_of(order), TorsionPoint::make(k, v1, v2));
        const auto s = scan_primes(desc, bound);
        nlohmann::json table = s.decisions;
        return py::make_tuple(to_py(table), s.missing());
    }, py::arg("order"), py::arg("k"), py::arg("v1"), py::arg("v2"), py::arg("bound") = 10000);

    m.def("admits_all_degrees", [](std::optional<std::pair<int, Int>> order, Int k, Int v1, Int v2) {
        return to_py(admits_all_degrees(
            EllipticBundleDescriptor::split_torsion(curve_of(order), TorsionPoint::make(k, v1, v2))));
    }, py::arg("order"), py::arg("k"), py::arg("v1"), py::arg("v2"));

    m.def("toric_verdict", [](const std::vector<std::pair<Int, Int>>& rays) {
        std::vector<Ray> rs;
        for (const auto& [x, y] : rays) rs.push_back({x, y});
        const auto fan = validate_fan(rs);
        return py::make_tuple(self_intersections(fan), to_py(toric_verdict(fan)));
    }, py::arg("rays"));

    m.def("build_semidirect", [](Int p) { return build_semidirect(p).table(); }, py::arg("p"));
    m.def("rho_bar_surjective", [](std::vector<std::vector<int>> table, Int p) {
        return rho_bar_surjective(CayleyGroup(std::move(table)), p).holds;
    }, py::arg("table"), py::arg("p"));

    m.def("run_claims", [](bool inject_fault) {
        py::list out;
        for (const auto& c : run_claims({inject_fault})) {
            py::dict d;
            d["id"] = c.id;
            d["name"] = c.name;
            d["statement"] = c.statement;
            d["passed"] = c.passed;
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    }, py::arg("inject_fault") = false);
}
