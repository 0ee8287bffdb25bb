#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opspec/cline.hpp"
#include "opspec/drazin.hpp"
#include "opspec/dsl.hpp"
#include "opspec/error.hpp"
#include "opspec/json_io.hpp"
#include "opspec/spectra.hpp"
#include "opspec/svg.hpp"
#include "opspec/theorem.hpp"
#include "opspec/transfer.hpp"

namespace py = pybind11;
using namespace opspec;

namespace {

// JSON crosses the boundary as text; the Python package decodes it.
std::string dump(const Json& j) { return j.dump(); }

ExprPtr as_expr(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_expr(o.cast<std::string>());
    return o.cast<std::shared_ptr<Expr>>();
}

}  // namespace

PYBIND11_MODULE(_opspec, m) {
    m.doc() = "Exact spectral pictures, B-type spectra and Cline's formula";

    static py::exception<Error> error(m, "OpspecError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(e.code(), std::string(e.what()));
            PyErr_SetObject(error.ptr(), args.ptr());
        }
    });

    py::class_<Expr, std::shared_ptr<Expr>>(m, "Expr")
        .def("__str__", [](const Expr& e) { return print_expr(e); })
        .def("__repr__", [](const Expr& e) { return "Expr(" + print_expr(e) + ")"; })
        .def("__eq__", [](const Expr& a, const Expr& b) { return expr_equal(a, b); })
        .def("to_json", [](const Expr& e) { return dump(expr_to_json(e)); });

    py::class_<Region>(m, "Region")
        .def("__str__", &Region::str)
        .def("__repr__", [](const Region& r) { return "Region(" + r.str() + ")"; })
        .def("__eq__", [](const Region& a, const Region& b) { return equal(a, b); })
        .def("empty", &Region::empty)
        .def("subset", [](const Region& a, const Region& b) { return subset(a, b); })
        .def("to_json", [](const Region& r) { return dump(region_to_json(r)); })
        .def_static("from_json", [](const std::string& s) { return region_from_json(Json::parse(s)); });

    m.def("parse", [](const std::string& text) { return std::const_pointer_cast<Expr>(parse_expr(text)); });
    m.def("expr_from_json", [](const std::string& s) { return std::const_pointer_cast<Expr>(expr_from_json(Json::parse(s))); });
    m.def("spectrum_names", &spectrum_names);
    m.def("theorem_ids", &theorem_ids);
    m.def("instances", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& inst : instance_library()) out.emplace_back(inst.name, inst.text);
        return out;
    });

    m.def("spectrum", [](const py::object& e, const std::string& name) { return SpectraEngine(as_expr(e)).spectrum(name); });
    m.def("spectra", [](const py::object& e, const std::vector<std::string>& names) {
        SpectraEngine engine(as_expr(e));
        std::vector<std::pair<std::string, Region>> out;
        for (const auto& n : names) out.emplace_back(n, engine.spectrum(n));
        return out;
    });
    m.def("picture_json", [](const py::object& e) { return dump(picture_to_json(picture(*as_expr(e)))); });
    m.def("audit_json", [](const py::object& e) {
        Json out = Json::array();
        for (const auto& c : inclusion_audit(as_expr(e)))
            out.push_back({{"chain", c.chain}, {"holds", c.holds}, {"failed_link", c.failed_link}});
        return dump(out);
    });
    m.def("check_json", [](const std::string& id, const py::object& e) { return dump(report_to_json(check(id, as_expr(e)))); });
    m.def("sweep_json", [](const std::vector<std::string>& ids) {
        Json out = Json::array();
        for (const auto& r : sweep(ids)) out.push_back(report_to_json(r));
        return dump(out);
    });
    m.def("transfer_json", [](const py::object& a, const py::object& b, std::size_t k) {
        TransferReport r = verify_meromorphic_transfer(as_expr(a), as_expr(b), k);
        return dump({{"k", r.k}, {"product", print_expr(*r.product)}, {"a_meromorphic", r.a_meromorphic},
                     {"product_meromorphic", r.product_meromorphic}, {"holds", r.holds()}});
    });

    m.def("drazin_json", [](const std::string& matrix) { return dump(drazin_to_json(drazin(matrix_from_json(Json::parse(matrix))))); });
    m.def("cline_json", [](std::size_t k, const std::string& family, std::uint64_t seed) {
        ConstraintPair p = generate_pair(k, family, seed);
        GenClineResult g = gen_cline(p);
        IdentityReport fwd = gdm_forward(p, GDInverseData::from(p.a, drazin(p.a).inverse));
        IdentityReport conv = gdm_converse(p, GDInverseData::from(p.bk_ak(), drazin(p.bk_ak()).inverse));
        return dump({{"a", matrix_to_json(p.a)}, {"b", matrix_to_json(p.b)}, {"index_a", g.index_a},
                     {"index_bkak", g.index_bkak}, {"forward", identity_report_to_json(fwd)},
                     {"converse", identity_report_to_json(conv)}});
    });

    m.def("render_svg", [](const std::vector<std::pair<std::string, Region>>& layers) { return render_svg(layers); });
}
