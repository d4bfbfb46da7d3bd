#pragma once

#include <string>
#include <string_view>

#include "hybrid/exactfield/kelem.hpp"
#include "hybrid/lorentz/form.hpp"

namespace hybrid {

/// Principal ideal (pi) of Z[sqrt 2]; one generator suffices since Z[sqrt 2]
/// has class number 1.
class ZsqrtIdeal {
 public:
  /// Throws std::invalid_argument if pi is zero or not in Z[sqrt 2].
  explicit ZsqrtIdeal(KElem generator);
  static ZsqrtIdeal parse(std::string_view text) { return ZsqrtIdeal(parse_kelem(text)); }

  const KElem& generator() const { return generator_; }
  /// |N(pi)|, the index of the ideal.
  Integer index() const;
  std::string to_string() const { return "(" + generator_.to_string() + ")"; }

 private:
  KElem generator_;
};

/// x in (pi), decided by x conj(pi) / N(pi) in Z[sqrt 2]. Throws
/// std::invalid_argument if x is not in Z[sqrt 2].
bool divides(const ZsqrtIdeal& pi, const KElem& x);

/// All entries in Z[sqrt 2]. Throws std::invalid_argument if an entry has a
/// nonzero sqrt(a) part.
bool is_integral_matrix(const Isometry& m);

/// M = I mod pi entrywise. Throws std::invalid_argument if M is not integral.
bool in_principal_congruence(const Isometry& m, const ZsqrtIdeal& pi);

}  // namespace hybrid
