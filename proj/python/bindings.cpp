#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kakeya/cli.hpp"
#include "kakeya/error.hpp"
#include "kakeya/report.hpp"

namespace py = pybind11;
using namespace kakeya;

using PyField = std::shared_ptr<FieldTable>;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

LineConfig make_config(const Field& field, const std::vector<long long>& intercepts) {
  return LineConfig::from_indices(field, intercepts);
}

SearchOptions make_options(const Field& field, bool normalize, std::optional<std::int64_t> initial_bound,
                           unsigned workers, std::optional<std::uint64_t> node_budget) {
  SearchOptions opts;
  opts.field = field;
  opts.use_translation_normalization = normalize;
  opts.initial_bound = initial_bound;
  opts.worker_count = workers;
  opts.node_budget = node_budget;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Besicovitch sets over finite planes";

  py::register_exception<Error>(m, "KakeyaError", PyExc_ValueError);

  py::class_<FieldTable, std::shared_ptr<FieldTable>>(m, "Field")
      .def(py::init([](unsigned p, unsigned k) { return std::make_shared<FieldTable>(p, k); }), py::arg("p"),
           py::arg("k") = 1)
      .def_property_readonly("p", &FieldTable::p)
      .def_property_readonly("k", &FieldTable::k)
      .def_property_readonly("q", &FieldTable::q)
      .def_property_readonly("modulus", [](const FieldTable& f) { return f.modulus(); })
      .def("add", [](const FieldTable& f, long long a, long long b) { return f.add(f.element(a), f.element(b)).idx; })
      .def("sub", [](const FieldTable& f, long long a, long long b) { return f.sub(f.element(a), f.element(b)).idx; })
      .def("mul", [](const FieldTable& f, long long a, long long b) { return f.mul(f.element(a), f.element(b)).idx; })
      .def("div", [](const FieldTable& f, long long a, long long b) { return f.div(f.element(a), f.element(b)).idx; })
      .def("neg", [](const FieldTable& f, long long a) { return f.neg(f.element(a)).idx; })
      .def("inv", [](const FieldTable& f, long long a) { return f.inv(f.element(a)).idx; })
      .def("nonzero_product", [](const FieldTable& f) { return nonzero_product(f).idx; })
      .def("__repr__", [](const FieldTable& f) { return "Field(p=" + std::to_string(f.p()) + ", k=" + std::to_string(f.k()) + ")"; });

  m.def("b0_config", [](const PyField& f) { return b0_config(f).indices(); }, py::arg("field"));

  m.def(
      "incidence_report",
      [](const PyField& f, const std::vector<long long>& b) {
        const auto c = make_config(f, b);
        return to_python(incidence_json(c, incidence_report(c)));
      },
      py::arg("field"), py::arg("intercepts"));

  m.def(
      "triple_point_exceptions",
      [](const PyField& f, const std::vector<long long>& b) {
        py::list out;
        for (const Slope& s : triple_point_exceptions(make_config(f, b))) out.append(to_python(slope_json(s)));
        return out;
      },
      py::arg("field"), py::arg("intercepts"));

  m.def(
      "conditional_check",
      [](const PyField& f, const std::vector<long long>& b) {
        return to_python(conditional_json(conditional_check(make_config(f, b)), f->q()));
      },
      py::arg("field"), py::arg("intercepts"));

  m.def(
      "normalize", [](const PyField& f, const std::vector<long long>& b) { return normalize(make_config(f, b)).indices(); },
      py::arg("field"), py::arg("intercepts"));

  m.def(
      "min_excess_search",
      [](const PyField& f, bool normalize, std::optional<std::int64_t> initial_bound, unsigned workers,
         std::optional<std::uint64_t> node_budget) {
        SearchOutcome o;
        {
          py::gil_scoped_release release;
          o = min_excess_search(make_options(f, normalize, initial_bound, workers, node_budget));
        }
        return to_python(search_json(o));
      },
      py::arg("field"), py::arg("normalize") = true, py::arg("initial_bound") = py::none(), py::arg("workers") = 1,
      py::arg("node_budget") = py::none());

  m.def(
      "verify_conjectures",
      [](const PyField& f, unsigned workers) {
        SearchOutcome o;
        {
          py::gil_scoped_release release;
          o = min_excess_search(make_options(f, true, std::nullopt, workers, std::nullopt));
        }
        Json j = search_json(o);
        j.update(conjecture_json(verify_conjectures(f, o)));
        return to_python(j);
      },
      py::arg("field"), py::arg("workers") = 1);

  m.def("expected_cardinality", [](unsigned long q) { return to_fraction_string(expected_cardinality(q)); });
  m.def("variance_cardinality", [](unsigned long q) { return to_fraction_string(variance_cardinality(q)); });
  m.def(
      "joint_point_probability",
      [](unsigned long q, bool distinct) { return to_fraction_string(joint_point_probability(q, distinct)); },
      py::arg("q"), py::arg("distinct"));
  m.def("exact_moments", [](const PyField& f) {
    const ExactMoments em = exact_moments_by_enumeration(*f);
    return std::make_pair(to_fraction_string(em.mean), to_fraction_string(em.variance));
  });
  m.def("chebyshev_bound", &chebyshev_bound, py::arg("q"));

  m.def(
      "monte_carlo",
      [](const PyField& f, std::uint64_t n, std::uint64_t seed, unsigned workers) {
        SampleReport r;
        {
          py::gil_scoped_release release;
          r = monte_carlo(*f, n, seed, workers);
        }
        py::dict out = to_python(sample_json(r));
        out["cardinalities"] = r.cardinalities;
        return out;
      },
      py::arg("field"), py::arg("n"), py::arg("seed"), py::arg("workers") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
