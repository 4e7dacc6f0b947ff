#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "hopoly/affine_reduction.hpp"
#include "hopoly/cherednik.hpp"
#include "hopoly/cli.hpp"
#include "hopoly/error.hpp"
#include "hopoly/oracles.hpp"
#include "hopoly/verification.hpp"

namespace py = pybind11;
using namespace hopoly;

namespace {

RootSystem system_of(const std::string& type) { return RootSystem(CartanType::parse(type)); }

Weight weight_of(const RootSystem& rs, const std::vector<long>& coords) {
  if (static_cast<int>(coords.size()) != rs.rank()) {
    throw ParseError("expected " + std::to_string(rs.rank()) + " coordinates");
  }
  return Weight(coords);
}

py::tuple key(const Weight& w) { return py::tuple(py::cast(w.coords)); }

py::int_ to_py(const BigInt& n) { return py::int_(py::str(n.get_str())); }

KValues k_of(const std::string& k_short, const std::string& k_long) {
  return {parse_rational(k_short), parse_rational(k_long.empty() ? k_short : k_long)};
}

template <class S, class F>
py::dict table(const ExpSum<S>& f, F convert) {
  py::dict out;
  for (const auto& [w, c] : f) out[key(w)] = convert(c);
  return out;
}

std::string rat(const BigRational& q) { return to_string(q); }
std::string poly(const KPoly& p) { return p.to_string(); }

py::dict py_root_system_info(const std::string& type) {
  RootSystem rs = system_of(type);
  py::list roots;
  for (const auto& r : rs.positive_roots()) {
    roots.append(py::make_tuple(py::cast(r.simple_coords), r.length_class == LengthClass::Short ? "short" : "long"));
  }
  py::dict d;
  d["type"] = rs.cartan_type().name();
  d["rank"] = rs.rank();
  d["cartan_matrix"] = rs.cartan_matrix();
  d["positive_roots"] = roots;
  d["beta"] = rs.beta().simple_coords;
  d["w0_order"] = rs.w0_order();
  return d;
}

py::int_ py_multiplicity(const std::string& type, const std::vector<long>& highest, const std::vector<long>& weight) {
  RootSystem rs = system_of(type);
  Weight lam = weight_of(rs, highest), mu = weight_of(rs, weight);
  CherednikContext ctx(std::move(rs), KValues{});
  return to_py(hopoly::multiplicity(ctx, lam, mu));
}

py::dict py_character(const std::string& type, const std::vector<long>& highest, unsigned threads) {
  RootSystem rs = system_of(type);
  Weight lam = weight_of(rs, highest);
  CherednikContext ctx(std::move(rs), KValues{});
  return table(hopoly::character(ctx, lam, threads), [](const BigRational& c) { return to_py(c.get_num()); });
}

py::dict py_freudenthal_table(const std::string& type, const std::vector<long>& highest) {
  RootSystem rs = system_of(type);
  py::dict out;
  for (const auto& [w, m] : freudenthal(rs, weight_of(rs, highest))) out[key(w)] = to_py(m);
  return out;
}

py::int_ py_dimension(const std::string& type, const std::vector<long>& highest) {
  RootSystem rs = system_of(type);
  return to_py(weyl_dimension(rs, weight_of(rs, highest)));
}

py::dict py_epoly(const std::string& type, const std::vector<long>& highest, const std::string& k_short,
               const std::string& k_long) {
  RootSystem rs = system_of(type);
  Weight lam = weight_of(rs, highest);
  CherednikContext ctx(std::move(rs), k_of(k_short, k_long));
  return table(build_E(ctx, lam), rat);
}

py::dict py_heckman_opdam(const std::string& type, const std::vector<long>& highest, const std::string& k_short,
                       const std::string& k_long, unsigned threads) {
  RootSystem rs = system_of(type);
  Weight lam = weight_of(rs, highest);
  CherednikContext ctx(std::move(rs), k_of(k_short, k_long));
  return table(hopoly::heckman_opdam(ctx, lam, threads), rat);
}

py::dict py_reduce(const std::string& type, const std::vector<long>& weight) {
  RootSystem rs = system_of(type);
  ReductionChain c = reduce_to_minuscule(rs, weight_of(rs, weight));
  py::list chain, d, numerators;
  for (const auto& w : c.chain) chain.append(key(w));
  for (std::size_t j = 0; j < c.length(); ++j) {
    d.append(c.denominators[j].to_string());
    numerators.append(c.numerators[j] == ParamClass::Short ? "k_s" : "k_l");
  }
  py::dict out;
  out["word"] = c.word;
  out["lambda_bar"] = key(c.lambda_bar);
  out["chain"] = chain;
  out["d"] = d;
  out["numerators"] = numerators;
  return out;
}

py::dict py_subset_sum(const std::string& type, const std::vector<long>& highest, const std::vector<long>& weight) {
  RootSystem rs = system_of(type);
  Weight lam = weight_of(rs, highest), mu = weight_of(rs, weight);
  CherednikContext ctx(std::move(rs), KValues{});
  SubsetSumResult r = multiplicity_subset_sum(ctx, lam, mu, true);
  py::list terms;
  for (const auto& t : r.terms) terms.append(py::make_tuple(py::cast(t.subset), rat(t.c_J)));
  py::dict out;
  out["value"] = rat(r.value);
  out["orbit_ratio"] = rat(r.orbit_ratio);
  out["subset_total"] = rat(r.subset_total);
  out["terms"] = terms;
  return out;
}

py::dict py_positivity(const std::string& type, const std::vector<long>& highest, unsigned threads) {
  RootSystem rs = system_of(type);
  Weight lam = weight_of(rs, highest);
  CherednikContext ctx{std::move(rs)};
  PositivityReport r = verify_positivity(ctx, lam, threads);
  py::list d;
  for (const auto& p : r.denominators) d.append(p.to_string());
  py::dict out;
  out["c_lambda"] = r.c_lambda.to_string();
  out["c_lambda_in_Zplus"] = r.c_lambda_in_Zplus;
  out["denominators"] = d;
  out["denominators_in_P1"] = r.denominators_in_P1;
  out["c_lambda_P"] = table(r.c_lambda_P, poly);
  out["leading_matches"] = r.leading_matches;
  out["passed"] = r.passed;
  return out;
}

py::list py_verify(const std::string& type, std::uint64_t seed, std::size_t cases) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.cases = cases;
  py::list out;
  for (const auto& s : run_verification(system_of(type), opt)) {
    py::dict d;
    d["name"] = s.name;
    d["cases"] = s.cases;
    d["failures"] = s.failures;
    d["first_failure"] = s.first_failure;
    out.append(d);
  }
  return out;
}

py::tuple py_run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_hopoly, m) {
  m.doc() = "Exact Heckman-Opdam polynomials and weight multiplicities";

  auto base = py::register_exception<Error>(m, "HopolyError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ConstructionError>(m, "ConstructionError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<ResourceError>(m, "ResourceError", base);
  py::register_exception<SingularParameterError>(m, "SingularParameterError", base);

  m.def("root_system_info", &py_root_system_info, py::arg("type"));
  m.def("multiplicity", &py_multiplicity, py::arg("type"), py::arg("highest"), py::arg("weight"));
  m.def("character", &py_character, py::arg("type"), py::arg("highest"), py::arg("threads") = 1);
  m.def("freudenthal", &py_freudenthal_table, py::arg("type"), py::arg("highest"));
  m.def("weyl_dimension", &py_dimension, py::arg("type"), py::arg("highest"));
  m.def("epoly", &py_epoly, py::arg("type"), py::arg("highest"), py::arg("k_short") = "1", py::arg("k_long") = "");
  m.def("heckman_opdam", &py_heckman_opdam, py::arg("type"), py::arg("highest"), py::arg("k_short") = "1",
        py::arg("k_long") = "", py::arg("threads") = 1);
  m.def("reduce", &py_reduce, py::arg("type"), py::arg("weight"));
  m.def("subset_sum", &py_subset_sum, py::arg("type"), py::arg("highest"), py::arg("weight"));
  m.def("positivity", &py_positivity, py::arg("type"), py::arg("highest"), py::arg("threads") = 1);
  m.def("verify", &py_verify, py::arg("type"), py::arg("seed") = 1, py::arg("cases") = 25);
  m.def("run_cli", &py_run_cli, py::arg("args"));
}
