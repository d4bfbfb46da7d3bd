#include "hybrid/arith/traces.hpp"

#include <map>
#include <stdexcept>

namespace hybrid {

TowerElem adjoint_trace(const Isometry& m) {
  const TowerElem t = m.matrix().trace();
  return (t * t - (m.matrix() * m.matrix()).trace()) / TowerElem(2);
}

Isometry conjugate_between_forms(const Isometry& m, const Rational& a) {
  const FieldPtr field = TowerField::create(a);
  const std::size_t n = m.form().n();
  if (m.form() != QuadForm::with_first(KElem(a), n)) {
    throw std::invalid_argument("expected an isometry of diag(" + to_string(a) + ", 1, ..., 1, -rt2), got " +
                                m.form().to_string());
  }
  const TowerElem root = TowerElem::sqrt_a(field);
  TMatrix c = m.matrix();
  for (std::size_t j = 1; j < c.cols(); ++j) c(0, j) = root * c(0, j);
  for (std::size_t i = 1; i < c.rows(); ++i) c(i, 0) = c(i, 0) / root;
  return Isometry(std::move(c), QuadForm::unit(n));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

GroupSample::GroupSample(std::vector<Isometry> gens, unsigned length)
    : generators(std::move(gens)), word_length(length) {
  if (generators.empty()) throw std::invalid_argument("group sample needs at least one generator");
  for (const auto& g : generators) {
    if (g.form() != generators.front().form()) throw std::invalid_argument("generators use different forms");
  }
}

std::vector<Word> reduced_words(std::size_t generators, unsigned max_length) {
  std::vector<int> letters;
  for (std::size_t i = 1; i <= generators; ++i) {
    letters.push_back(static_cast<int>(i));
    letters.push_back(-static_cast<int>(i));
  }
  std::vector<Word> out;
  std::vector<Word> level{Word{}};
  for (unsigned len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int x : letters) {
        if (!w.empty() && w.back() == -x) continue;
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<TraceRecord> sample_traces(const GroupSample& g) {
  std::vector<Isometry> letters;
  for (const auto& x : g.generators) {
    letters.push_back(x);
    letters.push_back(x.inverse());
  }
  auto letter = [&](int x) -> const Isometry& {
    const auto i = static_cast<std::size_t>(x > 0 ? x : -x) - 1;
    return letters[2 * i + (x < 0 ? 1 : 0)];
  };
  // Words come ordered by length, so every prefix is already evaluated.
  std::map<Word, Isometry> value;
  std::vector<TraceRecord> out;
  for (Word w : reduced_words(g.generators.size(), g.word_length)) {
    Word prefix(w.begin(), w.end() - 1);
    Isometry m = prefix.empty() ? letter(w.back()) : value.at(prefix) * letter(w.back());
    out.push_back({w, adjoint_trace(m)});
    if (w.size() < g.word_length) value.emplace(std::move(w), std::move(m));
  }
  return out;
}

const char* to_string(FieldLevel level) {
  switch (level) {
    case FieldLevel::Q: return "Q";
    case FieldLevel::k: return "k";
    case FieldLevel::K: return "K";
  }
  return "?";
}

FieldDescriptor trace_field_sample(const GroupSample& g) {
  if (g.word_length < 1) throw std::invalid_argument("word length must be at least 1");
  FieldDescriptor d;
  bool have_rt2 = false, have_rta = false;
  for (const auto& [word, trace] : sample_traces(g)) {
    const bool rt2 = !trace.k_part().is_rational();
    const bool rta = !trace.sqrt_a_part().is_zero();
    if (rt2 && !have_rt2) {
      d.witnesses.push_back({word, trace, "rt2"});
      have_rt2 = true;
    }
    if (rta && !have_rta) {
      d.witnesses.push_back({word, trace, "rtA"});
      have_rta = true;
    }
  }
  d.level = have_rta ? FieldLevel::K : have_rt2 ? FieldLevel::k : FieldLevel::Q;
  return d;
}

std::vector<NonIntegralTrace> integrality_scan(const GroupSample& g) {
  std::map<std::string, QPoly> minpolys;
  std::vector<NonIntegralTrace> out;
  for (auto& [word, trace] : sample_traces(g)) {
    auto it = minpolys.find(trace.to_string());
    if (it == minpolys.end()) it = minpolys.emplace(trace.to_string(), minpoly_over_Q(trace)).first;
    if (!is_algebraic_integer(it->second)) out.push_back({word, trace, it->second});
  }
  return out;
}

NonQaReport non_qa_certificate(const Rational& a, const FieldDescriptor& subgroup, const FieldDescriptor& ambient) {
  NonQaReport r;
  const bool positive = sgn(a) > 0;
  const bool non_square = positive && !is_square_in_k(KElem(a)).is_square;
  r.links.push_back({"a admissible", non_square,
                     !positive ? to_string(a) + " is not positive"
                     : non_square ? to_string(a) + " is not a square in k"
                                  : to_string(a) + " is a square in k"});
  r.links.push_back({"subgroup trace field is k", subgroup.level == FieldLevel::k,
                     std::string("sampled level ") + to_string(subgroup.level)});
  r.links.push_back({"ambient trace field is K", ambient.level == FieldLevel::K,
                     std::string("sampled level ") + to_string(ambient.level)});
  r.pass = true;
  for (const auto& link : r.links) {
    if (!link.holds && r.pass) {
      r.pass = false;
      r.broken = link.name;
    }
  }
  r.caveat =
      "samples stand in for the lattice and its subgroup; their Zariski density is assumed, not verified";
  return r;
}

TransferCheck palindromic_transfer_check(const QuadAlgNum& mu, std::size_t n) {
  if (!(mu.numeric().lower() > 1)) throw std::domain_error("palindromic transfer needs mu > 1");
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  const KElem& t = mu.trace();
  const KElem& nm = mu.norm();
  // mu + 1/mu and its conjugate over k: sum t + t/N, product N + (t^2 - 2N)/N + 1/N.
  const KElem s = t + t / nm;
  const KElem p = nm + (t * t - KElem(2) * nm) / nm + KElem(1) / nm;
  const KElem shift(static_cast<long>(n) - 1);
  TransferCheck r;
  r.nu_trace = s + KElem(2) * shift;
  r.nu_norm = p + shift * s + shift * shift;
  const mpfr_prec_t precision = mu.numeric().precision();
  const RealInterval one = RealInterval::point(Rational(1), precision);
  const RealInterval nu_numeric = mu.numeric() + one / mu.numeric() + embed(shift, precision);
  const QuadAlgNum nu = quadratic_root_near(r.nu_trace, r.nu_norm, nu_numeric);
  r.mu_minpoly = minpoly_over_Q(mu).minpoly;
  r.nu_minpoly = minpoly_over_Q(nu).minpoly;
  r.mu_integral = is_algebraic_integer(r.mu_minpoly);
  r.nu_integral = is_algebraic_integer(r.nu_minpoly);
  r.holds = r.mu_integral == r.nu_integral;
  return r;
}

}  // namespace hybrid
