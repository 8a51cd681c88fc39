#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grex/ext.hpp"
#include "grex/ideals.hpp"
#include "grex/mf_oracle.hpp"
#include "grex/plucker.hpp"
#include "grex/staircase.hpp"
#include "grex/subsets.hpp"
#include "grex/verify.hpp"

namespace py = pybind11;

namespace {

grex::KSubset to_subset(const std::vector<grex::Int>& values) {
    return grex::KSubset(std::vector<grex::Int>(values));
}

py::dict report_dict(const grex::ExtReport& report) {
    py::dict out;
    out["k"] = report.k;
    out["l"] = report.l.elements();
    out["m"] = report.m.elements();
    out["alpha"] = report.alpha;
    out["beta"] = report.beta;
    out["intersection"] = report.intersection;
    out["ext_dim"] = report.ext_dim;
    out["compatible"] = report.compatible;
    if (report.oracle_dim) out["oracle_dim"] = *report.oracle_dim;
    return out;
}

} // namespace

PYBIND11_MODULE(_grex, m) {
    m.doc() = "Exact Ext^1 dimensions between rank-1 graded MCM modules over "
              "C[x,y]/(x^k), via the staircase-grid formula and a "
              "matrix-factorization oracle.";

    py::register_exception<grex::error>(m, "GrexError", PyExc_ValueError);

    py::class_<grex::GradedIdeal>(m, "GradedIdeal")
        .def(py::init<int, std::vector<grex::Int>, grex::Int>(), py::arg("k"),
             py::arg("exponents"), py::arg("shift"))
        .def_property_readonly("k", &grex::GradedIdeal::k)
        .def_property_readonly("exponents",
                               [](const grex::GradedIdeal& i) { return i.exponents(); })
        .def_property_readonly("shift", &grex::GradedIdeal::shift)
        .def("contains_monomial",
             [](const grex::GradedIdeal& i, grex::Int a, grex::Int b) {
                 return grex::contains_monomial(i, a, b);
             },
             py::arg("x_exp"), py::arg("y_exp"))
        .def("__str__", &grex::GradedIdeal::to_string)
        .def("__eq__", [](const grex::GradedIdeal& a, const grex::GradedIdeal& b) {
            return a == b;
        });

    m.def("canonicalize", [](const std::vector<grex::Int>& values) {
        return to_subset(values).elements();
    }, py::arg("values"), "Sorted strictly-increasing form of a k-subset.");

    m.def("crosses", [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m) {
        return grex::crosses(to_subset(l), to_subset(m));
    }, py::arg("l"), py::arg("m"));

    m.def("intersection_size",
          [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m) {
              return grex::intersection_size(to_subset(l), to_subset(m));
          },
          py::arg("l"), py::arg("m"));

    m.def("shift", [](const std::vector<grex::Int>& l, grex::Int t) {
        return grex::shift(to_subset(l), t).elements();
    }, py::arg("l"), py::arg("t"));

    m.def("enumerate_window", [](int k, grex::Int lo, grex::Int hi) {
        std::vector<std::vector<grex::Int>> out;
        for (const grex::KSubset& s : grex::enumerate_window(k, lo, hi))
            out.push_back(s.elements());
        return out;
    }, py::arg("k"), py::arg("lo"), py::arg("hi"));

    m.def("ideal_from_subset", [](const std::vector<grex::Int>& l) {
        return grex::ideal_from_subset(to_subset(l));
    }, py::arg("l"));

    m.def("subset_from_ideal", [](const grex::GradedIdeal& ideal) {
        return grex::subset_from_ideal(ideal).elements();
    }, py::arg("ideal"));

    m.def("normalize_generators",
          [](int k, const std::vector<std::pair<grex::Int, grex::Int>>& monomials,
             grex::Int shift) { return grex::normalize_generators(k, monomials, shift); },
          py::arg("k"), py::arg("monomials"), py::arg("shift"));

    m.def("grid_rows",
          [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m,
             const std::string& flavor) {
              const grex::KSubset sl = to_subset(l), sm = to_subset(m);
              if (flavor == "A") return grex::grid_A(sl, sm).rows();
              if (flavor == "B") return grex::grid_B(sl, sm).rows();
              grex::fail(grex::errc::parse_error, "flavor must be 'A' or 'B'");
          },
          py::arg("l"), py::arg("m"), py::arg("flavor") = "A");

    m.def("alpha", [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m) {
        return grex::alpha(to_subset(l), to_subset(m));
    }, py::arg("l"), py::arg("m"));

    m.def("beta", [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m) {
        return grex::beta(to_subset(l), to_subset(m));
    }, py::arg("l"), py::arg("m"));

    m.def("ext_dimension", [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m) {
        return grex::ext_dimension(to_subset(l), to_subset(m));
    }, py::arg("l"), py::arg("m"));

    m.def("compatible", [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m) {
        return grex::compatible(to_subset(l), to_subset(m));
    }, py::arg("l"), py::arg("m"));

    m.def("reduce_common",
          [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m, grex::Int v) {
              auto [rl, rm] = grex::reduce_common(to_subset(l), to_subset(m), v);
              return std::make_pair(rl.elements(), rm.elements());
          },
          py::arg("l"), py::arg("m"), py::arg("v"));

    m.def("ext_dimension_oracle",
          [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m) {
              return grex::ext_dimension_oracle(to_subset(l), to_subset(m));
          },
          py::arg("l"), py::arg("m"),
          "Independent Ext^1 dimension from exact ranks of the degree-zero "
          "matrix-factorization complex.");

    m.def("ext_report",
          [](const std::vector<grex::Int>& l, const std::vector<grex::Int>& m, bool with_oracle) {
              return report_dict(grex::make_report(to_subset(l), to_subset(m), with_oracle));
          },
          py::arg("l"), py::arg("m"), py::arg("with_oracle") = false);

    m.def("maximal_noncrossing",
          [](int k, grex::Int lo, grex::Int hi, std::uint64_t cap) {
              std::vector<std::vector<std::vector<grex::Int>>> out;
              for (const auto& collection : grex::maximal_noncrossing(k, lo, hi, cap)) {
                  std::vector<std::vector<grex::Int>> one;
                  for (const grex::KSubset& s : collection) one.push_back(s.elements());
                  out.push_back(std::move(one));
              }
              return out;
          },
          py::arg("k"), py::arg("lo"), py::arg("hi"), py::arg("cap") = 64);

    m.def("verify_window",
          [](int k, grex::Int lo, grex::Int hi) {
              const grex::VerificationSummary summary = grex::verify_window(k, lo, hi);
              py::dict out;
              out["k"] = summary.k;
              out["window"] = std::make_pair(summary.lo, summary.hi);
              out["pairs_checked"] = summary.pairs_checked;
              py::list mismatches;
              for (const grex::Mismatch& mm : summary.mismatches) {
                  py::dict entry;
                  entry["l"] = mm.l.elements();
                  entry["m"] = mm.m.elements();
                  entry["formula_dim"] = mm.formula_dim;
                  entry["oracle_dim"] = mm.oracle_dim;
                  mismatches.append(entry);
              }
              out["mismatches"] = mismatches;
              out["elapsed_ms"] = summary.elapsed_ms;
              return out;
          },
          py::arg("k"), py::arg("lo"), py::arg("hi"),
          "Formula-versus-oracle sweep over all ordered pairs in a window.");
}
