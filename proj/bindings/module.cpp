#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bdc/bernstein.hpp"
#include "bdc/capacity.hpp"
#include "bdc/common.hpp"
#include "bdc/capacity_family.hpp"
#include "bdc/choquet.hpp"
#include "bdc/error_analysis.hpp"
#include "bdc/interval_set.hpp"
#include "bdc/operators.hpp"
#include "bdc/random_sets.hpp"
#include "bdc/version.hpp"

namespace py = pybind11;
using namespace bdc;

namespace {

IntervalSet set_from_pairs(const std::vector<std::pair<double, double>>& raw) {
  std::vector<Interval> ivs;
  ivs.reserve(raw.size());
  for (const auto& [lo, hi] : raw) ivs.push_back({lo, hi});
  return IntervalSet::canonicalize(std::move(ivs));
}

std::vector<std::pair<double, double>> set_to_pairs(const IntervalSet& s) {
  std::vector<std::pair<double, double>> out;
  for (const Interval& iv : s.intervals()) out.emplace_back(iv.lo, iv.hi);
  return out;
}

IntegralMethod method_from_name(const std::string& name) {
  if (name == "sorted-levels") return IntegralMethod::SortedLevels;
  if (name == "beta-quadrature") return IntegralMethod::BetaQuadrature;
  throw std::invalid_argument("unknown integral method: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Choquet-integral Bernstein-Durrmeyer approximation operators";
  m.attr("__version__") = kVersion;

  py::class_<IntervalSet>(m, "IntervalSet")
      .def(py::init(&set_from_pairs), py::arg("intervals"))
      .def_static("full", &IntervalSet::full)
      .def("intervals", &set_to_pairs)
      .def("total_length", &IntervalSet::total_length)
      .def("contains", &IntervalSet::contains)
      .def("__len__", &IntervalSet::size);
  m.def("set_union",
        [](const IntervalSet& a, const IntervalSet& b) { return set_union(a, b); });
  m.def("set_intersection", [](const IntervalSet& a, const IntervalSet& b) {
    return set_intersection(a, b);
  });

  py::class_<Capacity>(m, "Capacity")
      .def("measure",
           [](const Capacity& c, const IntervalSet& a) { return c.measure(a); })
      .def("describe", &Capacity::describe)
      .def_property_readonly("monotone",
                             [](const Capacity& c) { return c.flags().monotone; })
      .def_property_readonly(
          "submodular", [](const Capacity& c) { return c.flags().submodular; })
      .def_property_readonly(
          "additive", [](const Capacity& c) { return c.flags().additive; })
      .def_property_readonly("normalized", [](const Capacity& c) {
        return c.flags().normalized;
      })
      .def_property_readonly("strictly_positive", [](const Capacity& c) {
        return c.flags().strictly_positive;
      });
  m.def("sqrt_lebesgue",
        [] { return Capacity::distorted_lebesgue(Distortion::sqrt()); });
  m.def("sin_lebesgue",
        [] { return Capacity::distorted_lebesgue(Distortion::sine()); });
  m.def("power_lebesgue", [](double p) {
    return Capacity::distorted_lebesgue(Distortion::power(p));
  });
  m.def("lebesgue", [] { return Capacity::lebesgue(); });
  m.def("dirac", [](double x) { return Capacity::dirac(x); });
  m.def("possibility_bump", [](int n, int k) {
    return Capacity::possibility(UnimodalDistribution::bernstein_bump(n, k));
  });
  m.def("scaled", [](const Capacity& base, double factor) {
    return Capacity::scaled(base, factor);
  });
  m.def("bump_peak_value", &bump_peak_value);

  py::class_<SampledFunction1D>(m, "SampledFunction")
      .def_static(
          "from_callable",
          [](const std::function<double(double)>& f, int cells) {
            return SampledFunction1D::from_function(f, cells);
          },
          py::arg("f"), py::arg("cells") = 2048)
      .def_static("from_nodes",
                  [](std::vector<double> nodes) {
                    return SampledFunction1D::from_nodes(std::move(nodes));
                  })
      .def("cells", &SampledFunction1D::cells)
      .def("cell_values", &SampledFunction1D::cell_values);

  m.def(
      "choquet_integral",
      [](const SampledFunction1D& f, const IntervalSet& a, const Capacity& c,
         const std::string& method) {
        return choquet_integral(f, a, c, method_from_name(method));
      },
      py::arg("f"), py::arg("set"), py::arg("capacity"),
      py::arg("method") = "sorted-levels");
  m.def("lp_choquet_functional",
        [](const SampledFunction1D& f, const Capacity& c, double p) {
          return lp_choquet_functional(f, c, p);
        });

  m.def("bernstein_basis", &bernstein_basis_1d);
  m.def("classical_bernstein",
        [](const std::function<double(double)>& f, int n, double x) {
          return classical_bernstein(f, n, x);
        });
  m.def(
      "classical_genuine",
      [](const std::function<double(double)>& f, int n, double x, int cells) {
        return classical_genuine(f, n, x, cells);
      },
      py::arg("f"), py::arg("n"), py::arg("x"), py::arg("cells") = 2048);

  py::class_<OperatorOutput>(m, "OperatorOutput")
      .def_readonly("value", &OperatorOutput::value)
      .def_readonly("coefficients", &OperatorOutput::coefficients)
      .def_readonly("denominators", &OperatorOutput::denominators);

  m.def("durrmeyer_possibility",
        [](const SampledFunction1D& f, int n, double x) {
          return durrmeyer_possibility(f, n, x);
        });
  m.def("durrmeyer_single_capacity",
        [](const SampledFunction1D& f, int n, double x, const Capacity& mu) {
          return durrmeyer_single_capacity(f, n, x, mu);
        });
  m.def("durrmeyer_tail_choquet",
        [](const SampledFunction1D& f, int n, double x, const Capacity& delta,
           const Capacity& mu) {
          return durrmeyer_tail_choquet(f, n, x, delta, mu);
        });
  m.def("durrmeyer_head_choquet",
        [](const SampledFunction1D& f, int n, double x, const Capacity& delta,
           const Capacity& mu) {
          return durrmeyer_head_choquet(f, n, x, delta, mu);
        });
  m.def("durrmeyer_ends_choquet",
        [](const SampledFunction1D& f, int n, double x, const Capacity& delta,
           const Capacity& mu) {
          return durrmeyer_ends_choquet(f, n, x, delta, mu);
        });
  m.def("genuine_durrmeyer_choquet",
        [](const SampledFunction1D& f, int n, double x, const Capacity& nu0,
           const Capacity& nun, const Capacity& middle) {
          return genuine_durrmeyer_choquet(
              f, n, x,
              CapacityFamily::genuine_constant_middle(n, nu0, nun, middle));
        });

  m.def("max_weighted_deviation", [](int n, int k, double x) {
    const WeightedDeviationSup s = max_weighted_deviation(n, k, x);
    return py::make_tuple(s.t1, s.t2, s.sup);
  });
  m.def(
      "modulus_of_continuity",
      [](const std::function<double(double)>& f, double delta, int cells) {
        return modulus_of_continuity(f, delta, cells);
      },
      py::arg("f"), py::arg("delta"), py::arg("cells") = 4096);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("theorem", &BoundReport::theorem)
      .def_readonly("n", &BoundReport::n)
      .def_readonly("x", &BoundReport::x)
      .def_readonly("lhs", &BoundReport::lhs)
      .def_readonly("rhs", &BoundReport::rhs)
      .def_readonly("margin", &BoundReport::margin)
      .def_readonly("passed", &BoundReport::passed);
  m.def(
      "possibility_pointwise_bound_check",
      [](const std::function<double(double)>& f, const std::string& name,
         int n, double x, int cells) {
        return possibility_pointwise_bound_check(f, name, n, x, cells);
      },
      py::arg("f"), py::arg("name"), py::arg("n"), py::arg("x"),
      py::arg("cells") = 4096);

  py::class_<StructureReport>(m, "StructureReport")
      .def_readonly("monotone_ok", &StructureReport::monotone_ok)
      .def_readonly("submodular_ok", &StructureReport::submodular_ok)
      .def_readonly("trials", &StructureReport::trials);
  m.def("check_structure",
        [](const Capacity& c, int trials, std::uint64_t seed) {
          return check_structure(c, trials, seed);
        });

  py::register_exception<strict_positivity_error>(m, "StrictPositivityError");
  py::register_exception<config_error>(m, "ConfigError");
}
