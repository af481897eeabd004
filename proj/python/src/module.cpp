#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistlab/commands.hpp"
#include "twistlab/io.hpp"

namespace py = pybind11;
using namespace twistlab;

namespace {

AlgebraPtr instance_algebra(const std::string& name, char field) {
    return find_instance(name).algebra(field == 'q' ? Field::rationals() : Field::prime());
}

TwistedComplex projective_by_label(const AlgebraPtr& a, const std::string& label) {
    if (label.size() < 2 || label[0] != 'P') throw py::value_error("projective labels look like 'P1'");
    return TwistedComplex::projective(a, a->vertex_index(label.substr(1)));
}

py::dict summary_dict(const EntropySummary& s) {
    py::dict d;
    d["t"] = s.t;
    d["verdict"] = to_string(s.verdict);
    if (s.estimate) {
        d["h_tailfit"] = s.estimate->tail_fit;
        d["h_fekete"] = s.estimate->fekete;
        d["flagged"] = s.estimate->flagged;
    }
    if (s.envelope) {
        d["lower"] = s.envelope->lower;
        d["upper"] = s.envelope->upper;
    }
    if (s.cert_upper) d["cert_upper"] = *s.cert_upper;
    if (!s.note.empty()) d["note"] = s.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact twisted-complex computations and categorical entropy estimates";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("zoo_names", [] {
        std::vector<std::string> out;
        for (const auto& i : catalog()) out.push_back(i.name);
        return out;
    });
    m.def("zoo_emit", [](const std::string& name) { return dump_algebra(*find_instance(name).algebra()); }, py::arg("name"));

    m.def(
        "validate",
        [](const std::string& text) {
            const ValidationReport r = validate(parse_algebra(text));
            std::vector<py::tuple> out;
            for (const auto& v : r.violations) out.push_back(py::make_tuple(v.kind, v.elements, v.detail));
            return out;
        },
        py::arg("algebra_json"), "Axiom violations of an algebra document; empty when valid.");

    m.def(
        "hom_dims",
        [](const std::string& instance, const std::string& source, const std::string& target, char field) {
            const AlgebraPtr a = instance_algebra(instance, field);
            return hom_dims(projective_by_label(a, source), projective_by_label(a, target));
        },
        py::arg("instance"), py::arg("source"), py::arg("target"), py::arg("field") = 'p',
        "Cohomology dims of Hom(P_source, P_target) on a zoo instance.");

    m.def(
        "twist_dims",
        [](const std::string& instance, const std::string& word, const std::string& object, int times) {
            const AlgebraPtr a = instance_algebra(instance, 'p');
            const EndofunctorSpec phi = EndofunctorSpec::parse(word, a, find_instance(instance).object(a));
            TwistedComplex x = projective_by_label(a, object);
            for (int k = 0; k < times; ++k) x = phi.apply(x);
            return hom_profile(x);
        },
        py::arg("instance"), py::arg("functor"), py::arg("object"), py::arg("times") = 1,
        "Per-projective Hom dims of phi^times applied to a projective.");

    m.def(
        "entropy",
        [](const std::string& instance, const std::string& functor, double tmin, double tmax, double tstep, int n_max,
           int tail_k) {
            RunConfig c;
            c.instance = instance;
            c.functor = functor;
            c.tmin = tmin;
            c.tmax = tmax;
            c.tstep = tstep;
            c.n_max = n_max;
            c.tail_k = tail_k;
            EntropyReport r;
            {
                py::gil_scoped_release release;
                r = run_entropy(c);
            }
            py::list rows;
            for (const auto& s : r.summaries) rows.append(summary_dict(s));
            py::dict out;
            out["functor"] = r.setup.word;
            out["model"] = r.setup.model_note;
            out["kernel_witness"] = r.setup.kernel_witness ? py::cast(*r.setup.kernel_witness) : py::none();
            out["incomplete"] = r.incomplete;
            out["summaries"] = rows;
            out["csv"] = entropy_csv(r);
            return out;
        },
        py::arg("instance"), py::arg("functor") = "", py::arg("tmin") = -1.0, py::arg("tmax") = 1.0,
        py::arg("tstep") = 0.5, py::arg("n_max") = 10, py::arg("tail_k") = 4);

    m.def(
        "verify",
        [](const std::string& instance, int n_max) {
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = run_verify(instance, n_max);
            }
            std::vector<py::tuple> out;
            for (const auto& l : r.lines) out.push_back(py::make_tuple(to_string(l.status), l.name, l.detail));
            return out;
        },
        py::arg("instance"), py::arg("n_max") = 20);

    m.def("ktheory", &ktheory_report, py::arg("instance"), py::arg("functor") = "", py::arg("n_max") = 10,
          "K-theory report as JSON text.");

    m.def(
        "charpoly",
        [](const std::vector<std::vector<long long>>& rows) {
            IntMatrix mat(rows.size(), rows.empty() ? 0 : rows.front().size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rows[i].size(); ++j) mat(i, j) = rows[i][j];
            std::vector<py::int_> out;
            for (const auto& c : characteristic_polynomial(mat)) out.emplace_back(py::int_(py::str(c.get_str())));
            return out;
        },
        py::arg("matrix"), "Coefficients of det(x I - M), constant term first.");

    m.def(
        "fekete_limit",
        [](const std::vector<double>& a) {
            const FeketeLimit f = fekete_limit(a);
            return py::make_tuple(f.first, f.second);
        },
        py::arg("sequence"));
}
