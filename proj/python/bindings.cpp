#include "gcoh/bundles.hpp"
#include "gcoh/cli.hpp"
#include "gcoh/error.hpp"
#include "gcoh/gerbes.hpp"
#include "gcoh/morita.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gcoh;

namespace {

Json parse(const std::string& text) {
    auto j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("not valid JSON");
    return j;
}

std::string dump(const Json& j) { return j.dump(); }

TotalComplex total(const CarriedGroupoid& base, int degree, std::size_t cap) {
    return TotalComplex(base, TotalOptions::for_degree(degree, base.complex.dimension(), cap));
}

std::string py_cohomology(const std::string& base, int max_degree, const std::string& coeff, const std::string& dir,
                          std::size_t cap) {
    auto b = base_from_json(parse(base), dir);
    auto c = Coeff::parse(coeff);
    auto t = total(b, max_degree, cap);
    Json out = Json::array();
    for (int n = 0; n <= max_degree; ++n) out.push_back(presentation_to_json(cohomology(t, n, c), c));
    return dump(out);
}

std::string py_homology(const std::string& base, int max_degree, const std::string& dir, std::size_t cap) {
    auto b = base_from_json(parse(base), dir);
    auto t = total(b, max_degree, cap);
    Json out = Json::array();
    for (int n = 0; n <= max_degree; ++n) out.push_back(presentation_to_json(homology(t, n), Coeff::Z()));
    return dump(out);
}

std::string py_dd_class(const std::string& base, const std::string& sigma, const std::string& dir, std::size_t cap) {
    auto t = total(base_from_json(parse(base), dir), 3, cap);
    return dump(class_to_json(t, dd_class(t, cochain_from_json(parse(sigma), t))));
}

std::string py_chern_class(const std::string& base, const std::string& datum, const std::string& dir, std::size_t cap) {
    auto t = total(base_from_json(parse(base), dir), 2, cap);
    auto x = cochain_from_json(parse(datum), t);
    return dump(class_to_json(t, chern_class(t, t.component(1, 1, x))));
}

std::string py_realize_bundle(const std::string& base, const std::string& psi, const std::string& dir, std::size_t cap) {
    auto t = total(base_from_json(parse(base), dir), 2, cap);
    auto d = realize_bundle(t, cochain_from_json(parse(psi), t));
    RationalVector x = d.c;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += d.A[i];
    return dump(cochain_to_json(t, 1, x));
}

std::string py_enumerate(const std::string& base, int order, const std::string& dir, std::size_t cap) {
    auto t = total(base_from_json(parse(base), dir), 3, cap);
    Json out = Json::array();
    for (const auto& s : enumerate_extension_classes(t, order)) out.push_back(cochain_to_json(t, 2, s, true));
    return dump(out);
}

std::string py_morita_verify(const std::string& morphism, const std::string& coeff, int max_degree,
                             const std::string& dir, std::size_t cap) {
    auto m = morphism_from_json(parse(morphism), dir);
    auto c = Coeff::parse(coeff);
    auto tt = total(m.target, max_degree, cap), ts = total(m.source, max_degree, cap);
    Json out = Json::array();
    for (const auto& v : verify_invariance(tt, ts, m.map, c, max_degree))
        out.push_back({{"degree", v.degree}, {"isomorphism", v.isomorphism}, {"reason", v.reason}});
    return dump(out);
}

std::string py_holonomy(const std::string& complex, const std::string& cochain, const std::string& loop,
                        const std::string& dir) {
    auto k = complex_from_json(parse(complex), dir);
    auto a = simplicial_cochain_from_json(parse(cochain), k);
    auto l = parse(loop);
    l["kind"] = "cochain";
    return circle_to_string(holonomy(k, a, simplicial_cochain_from_json(l, k)));
}

py::tuple py_run(const std::string& command, const std::vector<std::string>& inputs, const std::string& coeff,
                 int max_degree, int fiber_order, std::size_t cap) {
    JobSpec job;
    job.command = command;
    for (const auto& p : inputs) job.inputs.emplace_back(p);
    job.coeff = coeff;
    job.max_degree = max_degree;
    job.fiber_order = fiber_order;
    job.cell_cap = cap;
    auto r = run(job);
    return py::make_tuple(r.exit_code, dump(r.report));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact groupoid cohomology core";
    static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
    static py::exception<MathError> math_error(m, "MathError", PyExc_ArithmeticError);
    static py::exception<SizeGuardExceeded> size_error(m, "SizeGuardExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InputError& e) {
            PyErr_SetString(input_error.ptr(), e.what());
        } catch (const MathError& e) {
            py::object err = py::reinterpret_borrow<py::object>(math_error.ptr())(py::str(e.what()));
            err.attr("kind") = to_string(e.kind());
            err.attr("detail") = e.detail();
            PyErr_SetObject(math_error.ptr(), err.ptr());
        } catch (const SizeGuardExceeded& e) {
            PyErr_SetString(size_error.ptr(), e.what());
        } catch (const Json::exception& e) {
            PyErr_SetString(input_error.ptr(), e.what());
        }
    });

    const std::size_t cap = 200000;
    m.def("cohomology", &py_cohomology, py::arg("base"), py::arg("max_degree"), py::arg("coeff") = "Z",
          py::arg("dir") = "", py::arg("cell_cap") = cap);
    m.def("homology", &py_homology, py::arg("base"), py::arg("max_degree"), py::arg("dir") = "",
          py::arg("cell_cap") = cap);
    m.def("dd_class", &py_dd_class, py::arg("base"), py::arg("sigma"), py::arg("dir") = "", py::arg("cell_cap") = cap);
    m.def("chern_class", &py_chern_class, py::arg("base"), py::arg("datum"), py::arg("dir") = "",
          py::arg("cell_cap") = cap);
    m.def("realize_bundle", &py_realize_bundle, py::arg("base"), py::arg("psi"), py::arg("dir") = "",
          py::arg("cell_cap") = cap);
    m.def("enumerate_extension_classes", &py_enumerate, py::arg("base"), py::arg("order"), py::arg("dir") = "",
          py::arg("cell_cap") = cap);
    m.def("morita_verify", &py_morita_verify, py::arg("morphism"), py::arg("coeff") = "Z", py::arg("max_degree") = 3,
          py::arg("dir") = "", py::arg("cell_cap") = cap);
    m.def("holonomy", &py_holonomy, py::arg("complex"), py::arg("cochain"), py::arg("loop"), py::arg("dir") = "");
    m.def("run", &py_run, py::arg("command"), py::arg("inputs"), py::arg("coeff") = "Z", py::arg("max_degree") = -1,
          py::arg("fiber_order") = 0, py::arg("cell_cap") = cap);
    m.def("commands", &command_names);
}
