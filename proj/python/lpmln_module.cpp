#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpmln/aspgen.hpp"
#include "lpmln/equiv.hpp"
#include "lpmln/parser.hpp"
#include "lpmln/verdict_json.hpp"

namespace py = pybind11;
using namespace lpmln;

namespace {

std::vector<std::string> model_names(Interpretation x, const Signature& sig) {
    std::vector<std::string> out;
    for (int i = 0; i < sig.size(); ++i)
        if (x.has(i)) out.push_back(sig.name(i));
    return out;
}

py::dict verdict_dict(const Verdict& v) {
    // reuse the JSON schema so CLI --json and the bindings agree
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(to_json(v).dump());
}

}  // namespace

PYBIND11_MODULE(_lpmln, m) {
    m.doc() = "LP^MLN semantics and strong-equivalence toolkit";

    py::class_<WeightedProgram>(m, "Program")
        .def_static(
            "parse", [](const std::string& text) { return parse_program(text); },
            py::arg("text"))
        .def_property_readonly("atoms",
                               [](const WeightedProgram& p) {
                                   return p.signature().names();
                               })
        .def("__len__", &WeightedProgram::size)
        .def("rules",
             [](const WeightedProgram& p) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& r : p.rules())
                     out.emplace_back(r.weight.str(), render(r.formula));
                 return out;
             })
        .def("soft_stable_models",
             [](const WeightedProgram& p) {
                 std::vector<std::vector<std::string>> out;
                 for (auto x : soft_stable_models(p))
                     out.push_back(model_names(x, p.signature()));
                 return out;
             })
        .def("distribution",
             [](const WeightedProgram& p) {
                 SoftDistribution d = distribution(p);
                 py::list out;
                 for (const auto& e : d.support()) {
                     py::dict row;
                     row["model"] = model_names(e.model, p.signature());
                     row["weight"] = e.weight.str();
                     row["probability_exact"] = d.probability_exact(e.model);
                     row["probability"] = d.probability(e.model);
                     out.append(row);
                 }
                 return out;
             })
        .def("soft_ht_models", [](const WeightedProgram& p) {
            std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
                out;
            for (auto i : soft_ht_models(p))
                out.emplace_back(model_names(i.here, p.signature()),
                                 model_names(i.there, p.signature()));
            return out;
        });

    m.def(
        "parse_formula",
        [](const std::string& text) { return render(parse_formula(text)); },
        py::arg("text"), "parse and re-render a formula (normalized form)");

    m.def("check_weak", [](const WeightedProgram& f, const WeightedProgram& g) {
        return verdict_dict(check_weak(f, g));
    });
    m.def(
        "check_structural",
        [](const WeightedProgram& f, const WeightedProgram& g,
           const std::string& method) {
            StructuralMethod sm = StructuralMethod::Reduct;
            if (method == "choice") sm = StructuralMethod::ChoiceReduct;
            else if (method == "ht") sm = StructuralMethod::SoftHT;
            else if (method == "delta-x") sm = StructuralMethod::DeltaPerX;
            else if (method == "delta-choice") sm = StructuralMethod::DeltaChoice;
            else if (method != "reduct")
                throw std::invalid_argument("unknown method: " + method);
            return verdict_dict(check_structural(f, g, sm));
        },
        py::arg("f"), py::arg("g"), py::arg("method") = "reduct");
    m.def("check_strong", [](const WeightedProgram& f, const WeightedProgram& g) {
        return verdict_dict(check_strong(f, g));
    });

    m.def("emit_asp", [](const WeightedProgram& f, const WeightedProgram& g) {
        auto [c1, c2] = find_w_expression(f, g);
        if (!c1.is_integer()) throw NonIntegerWeightError(c1.str());
        py::dict out;
        out["P"] = emit_weight_program(f, g, true).text();
        auto [ps, ph] = emit_weight_check(f, g, c1.num(), c2);
        out["Pstar_soft"] = ps.text();
        out["Pstar_hard"] = ph.text();
        auto [p1, p2] = emit_delta_programs(f, g);
        out["P1ss"] = p1.text();
        out["P2ss"] = p2.text();
        return out;
    });

    py::register_exception<ParseError>(m, "LpmlnParseError", PyExc_ValueError);
    py::register_exception<EmptyModelSetError>(m, "EmptyModelSetError",
                                               PyExc_ValueError);
}
