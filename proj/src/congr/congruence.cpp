#include "hybrid/congr/congruence.hpp"

#include <stdexcept>

namespace hybrid {

ZsqrtIdeal::ZsqrtIdeal(KElem generator) : generator_(std::move(generator)) {
  if (generator_.is_zero()) throw std::invalid_argument("the zero ideal is not a congruence level");
  if (!generator_.has_integer_coordinates()) {
    throw std::invalid_argument("level generator " + generator_.to_string() + " is not in Z[rt2]");
  }
}

Integer ZsqrtIdeal::index() const { return abs(norm_k(generator_).get_num()); }

bool divides(const ZsqrtIdeal& pi, const KElem& x) {
  if (!x.has_integer_coordinates()) throw std::invalid_argument(x.to_string() + " is not in Z[rt2]");
  return (x * galois_conjugate(pi.generator()) / KElem(norm_k(pi.generator()))).has_integer_coordinates();
}

bool is_integral_matrix(const Isometry& m) {
  bool integral = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const TowerElem& e = m.matrix()(i, j);
      if (!e.in_k()) throw std::invalid_argument("entry " + e.to_string() + " does not lie in k");
      integral = integral && e.k_part().has_integer_coordinates();
    }
  }
  return integral;
}

bool in_principal_congruence(const Isometry& m, const ZsqrtIdeal& pi) {
  if (!is_integral_matrix(m)) throw std::invalid_argument("matrix is not integral over Z[rt2]");
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      KElem e = m.matrix()(i, j).k_part();
      if (i == j) e -= KElem(1);
      if (!e.is_zero() && !divides(pi, e)) return false;
    }
  }
  return true;
}

}  // namespace hybrid
