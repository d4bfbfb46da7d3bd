// Command-line front end: each subcommand prints a table and optionally
// writes a JSON certificate. Exit status 0 on PASS, 1 on FAIL, 2 on bad input.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hybrid/cli/commands.hpp"

using namespace hybrid;
using namespace hybrid::cli;

namespace {

KElem parse_k(const std::string& text, const char* what) {
  try {
    return parse_kelem(text);
  } catch (const std::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Rational parse_q(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for a small-systole hybrid construction"};
  app.require_subcommand(1);
  app.fallthrough();
  long precision = 128;
  std::string json_path;
  bool quiet = false;
  app.add_option("--precision", precision, "working precision in bits")->check(CLI::Range(32, 8192));
  app.add_option("--json", json_path, "write the certificate as JSON ('-' for stdout)");
  app.add_flag("--quiet", quiet, "suppress the table");

  std::string a_text = "3", t2_text;
  std::size_t n = 2;
  unsigned word_length = 4;
  auto* verify = app.add_subcommand("verify-paper", "check the two-block construction end to end");
  verify->add_option("--a", a_text, "rational a, not a square in Q(rt2)");
  verify->add_option("--n", n, "hyperbolic dimension");
  verify->add_option("--t2", t2_text, "conic parameter of g2");
  verify->add_option("--word-length", word_length, "maximum word length for trace sampling");

  std::string c_text = "1";
  double epsilon = 0.25;
  unsigned long height = 10000;
  auto* search = app.add_subcommand("search", "find a block element with short translation length");
  search->add_option("--c", c_text, "first coefficient of the form");
  search->add_option("--epsilon", epsilon, "target length")->required();
  search->add_option("--height", height, "height bound for the parameter");
  search->add_option("--n", n, "hyperbolic dimension");

  int degree = 4;
  double bound = 0;
  auto* mahler = app.add_subcommand("mahler", "smallest Mahler measure above 1");
  mahler->add_option("--degree,-D", degree, "degree bound")->required();
  auto* bound_opt = mahler->add_option("--bound", bound, "also enumerate polynomials of measure <= bound");

  std::size_t length = 0;
  unsigned m = 0;
  auto* bracelets = app.add_subcommand("bracelets", "balanced cyclic sequences up to dihedral symmetry");
  auto* length_opt = bracelets->add_option("--length,-L", length, "enumerate all of this length");
  auto* m_opt = bracelets->add_option("--m", m, "choose m of length 2^m");

  std::string matrix_path, level = "rt2";
  auto* congruence = app.add_subcommand("congruence", "principal congruence membership");
  congruence->add_option("matrix", matrix_path, "matrix file")->required();
  congruence->add_option("--level", level, "generator u+v*rt2 of the level ideal");

  std::string trace_text, norm_text = "1";
  bool minus = false;
  auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of a root of x^2 - T x + N over Q(rt2)");
  minpoly->add_option("--trace", trace_text, "T")->required();
  minpoly->add_option("--norm", norm_text, "N");
  minpoly->add_flag("--minus", minus, "take the smaller root");

  unsigned budget_m = 3;
  auto* budget = app.add_subcommand("budget", "epsilon budget and glued geodesic length");
  budget->add_option("--m", budget_m, "number of manifolds");
  budget->add_option("--degree,-D", degree, "degree bound for the Mahler gap");
  budget->add_option("--a", a_text, "first coefficient of the second form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto bits = static_cast<mpfr_prec_t>(precision);
    Certificate cert;
    if (verify->parsed()) {
      VerifyOptions o;
      o.a = parse_q(a_text, "--a");
      o.n = n;
      if (!t2_text.empty()) o.t2 = parse_k(t2_text, "--t2");
      o.word_length = word_length;
      o.precision = bits;
      cert = cmd_verify_paper(o);
    } else if (search->parsed()) {
      cert = cmd_search(parse_k(c_text, "--c"), epsilon, height, n, bits);
    } else if (mahler->parsed()) {
      cert = cmd_mahler(degree, bound_opt->count() ? std::optional<double>(bound) : std::nullopt);
    } else if (bracelets->parsed()) {
      cert = cmd_bracelets(length_opt->count() ? std::optional<std::size_t>(length) : std::nullopt,
                           m_opt->count() ? std::optional<unsigned>(m) : std::nullopt);
    } else if (congruence->parsed()) {
      cert = cmd_congruence(read_file(matrix_path), level);
    } else if (minpoly->parsed()) {
      cert = cmd_minpoly(parse_k(trace_text, "--trace"), parse_k(norm_text, "--norm"), !minus, bits);
    } else if (budget->parsed()) {
      cert = cmd_budget(budget_m, degree, parse_q(a_text, "--a"), bits);
    }
    if (!quiet) std::cout << cert.to_table();
    if (json_path == "-") {
      std::cout << cert.to_json();
    } else if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw InputError("cannot write " + json_path);
      out << cert.to_json();
    }
    return cert.pass() ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
