// Python bindings. Exact values cross the boundary as strings in the same
// text format the CLI uses; the package wrapper turns them into Fractions.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hybrid/cli/commands.hpp"
#include "hybrid/combin/bracelets.hpp"
#include "hybrid/congr/congruence.hpp"
#include "hybrid/hypgeom/geometry.hpp"
#include "hybrid/lorentz/block.hpp"
#include "hybrid/polyalg/algnum.hpp"
#include "hybrid/polyalg/mahler.hpp"

namespace py = pybind11;
using namespace hybrid;

namespace {

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

ZPoly to_zpoly(const std::vector<py::int_>& coeffs) {
  std::vector<Integer> out;
  for (const auto& c : coeffs) out.emplace_back(py::str(py::handle(c)).cast<std::string>());
  return ZPoly(std::move(out));
}

std::vector<std::string> coefficient_strings(const QPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

std::vector<py::int_> coefficient_ints(const ZPoly& p) {
  std::vector<py::int_> out;
  for (const auto& c : p.coefficients()) out.push_back(to_py(c));
  return out;
}

py::tuple bounds(const RealInterval& x) { return py::make_tuple(x.lower(), x.upper()); }

py::dict describe(const ABlockElement& g) {
  py::dict d;
  d["alpha"] = g.alpha().to_string();
  d["gamma"] = g.gamma().to_string();
  d["top_right"] = g.top_right().to_string();
  d["matrix"] = to_text(lift(g.matrix()), g.form());
  d["eigenvalue"] = bounds(leading_eigenvalue(g).numeric());
  d["length"] = bounds(translation_length(g));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic over Q(sqrt 2) for two-block hyperbolic constructions";

  m.def("normalize", [](const std::string& x) { return parse_kelem(x).to_string(); },
        "Canonical text of an element of Q(sqrt 2), e.g. '3/2*rt2'.");
  m.def("block", [](const std::string& c, const std::string& t, std::size_t n) {
        return describe(param_block(parse_kelem(c), parse_kelem(t), n));
      }, py::arg("c"), py::arg("t"), py::arg("n") = 2);
  m.def("find_small_element",
        [](const std::string& c, double epsilon, unsigned long height_bound, std::size_t n) {
          const SearchResult r = find_small_element(parse_kelem(c), epsilon, height_bound, n);
          py::dict d = describe(r.element);
          d["t"] = r.t.to_string();
          return d;
        },
        py::arg("c"), py::arg("epsilon"), py::arg("height_bound") = 1000000, py::arg("n") = 2);
  m.def("hyperplane_distance", [](const std::string& c, const std::string& t, std::size_t n) {
        const ABlockElement g = param_block(parse_kelem(c), parse_kelem(t), n);
        const GeodesicHyperplane h = GeodesicHyperplane::coordinate(g.form());
        const HyperplaneRelation r = dist_hyperplanes(h, h.image(g.isometry()));
        return py::make_tuple(to_string(r.kind), bounds(r.value), r.cosh_squared.to_string());
      }, py::arg("c"), py::arg("t"), py::arg("n") = 2);

  m.def("minpoly", [](const std::string& trace, const std::string& norm, bool plus) {
        const QuadAlgNum x(parse_kelem(trace), parse_kelem(norm), plus ? Branch::plus : Branch::minus);
        return coefficient_strings(minpoly_over_Q(x).minpoly);
      }, py::arg("trace"), py::arg("norm"), py::arg("plus") = true,
      "Minimal polynomial over Q, low degree first, of the chosen root of x^2 - trace x + norm.");
  m.def("product_minpoly", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        const QuadAlgNum x(parse_kelem(a.at(0)), parse_kelem(a.at(1)), Branch::plus);
        const QuadAlgNum y(parse_kelem(b.at(0)), parse_kelem(b.at(1)), Branch::plus);
        return coefficient_strings(product(x, y).minpoly);
      }, py::arg("a"), py::arg("b"), "Minimal polynomial of the product of two larger roots given as (trace, norm).");

  m.def("mahler_measure", [](const std::vector<py::int_>& coeffs) { return mahler_measure(to_zpoly(coeffs)); },
        py::arg("coeffs"));
  m.def("is_kronecker", [](const std::vector<py::int_>& coeffs) { return is_kronecker(to_zpoly(coeffs)); },
        py::arg("coeffs"));
  m.def("min_mahler_above_one", [](int degree) {
        const MahlerMinimum r = min_mahler_above_one(degree);
        return py::make_tuple(r.value, coefficient_ints(r.witness), r.epsilon);
      }, py::arg("degree"));
  m.def("enumerate_bounded", [](int degree, double bound) {
        std::vector<std::vector<py::int_>> out;
        for (const auto& p : enumerate_bounded(degree, bound)) out.push_back(coefficient_ints(p));
        return out;
      }, py::arg("degree"), py::arg("bound"));

  m.def("balanced_bracelets", [](std::size_t length) {
        std::vector<std::string> out;
        for (const auto& s : enumerate_balanced_bracelets(length)) out.push_back(s.word());
        return out;
      }, py::arg("length"));
  m.def("burnside_count", [](std::size_t length) { return to_py(burnside_count(length)); }, py::arg("length"));
  m.def("select_inequivalent", [](unsigned count) {
        std::vector<std::string> out;
        for (const auto& s : select_inequivalent(count)) out.push_back(s.word());
        return out;
      }, py::arg("m"));
  m.def("canonical_form", [](const std::string& w) { return canonical_form(CyclicBinarySeq(w)).word(); });
  m.def("epsilon_budget", &epsilon_budget, py::arg("m"), py::arg("eps"));

  m.def("in_principal_congruence", [](const std::string& matrix_text, const std::string& level) {
        const MatrixFile f = parse_matrix_text(matrix_text);
        return in_principal_congruence(Isometry(f.matrix, f.form), ZsqrtIdeal::parse(level));
      }, py::arg("matrix_text"), py::arg("level"));

  m.def("verify_paper_json", [](const std::string& a, std::size_t n, unsigned word_length) {
        cli::VerifyOptions o;
        o.a = parse_rational(a);
        o.n = n;
        o.word_length = word_length;
        return cli::cmd_verify_paper(o).to_json();
      }, py::arg("a") = "3", py::arg("n") = 2, py::arg("word_length") = 4);
  m.def("budget_json", [](unsigned count, int degree, const std::string& a) {
        return cli::cmd_budget(count, degree, parse_rational(a), 128).to_json();
      }, py::arg("m"), py::arg("degree") = 4, py::arg("a") = "3");

  py::register_exception<cli::InputError>(m, "InputError", PyExc_ValueError);
}
