#include "hybrid/lorentz/form.hpp"

#include <sstream>
#include <stdexcept>

namespace hybrid {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::stringstream in{std::string(s)};
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

template <class T>
bool preserves(const Matrix<T>& m, const QuadForm& form) {
  const std::size_t n = form.size();
  if (!m.square() || m.rows() != n) {
    throw std::invalid_argument("matrix size " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                " does not match a form in " + std::to_string(n) + " variables");
  }
  // (M^T F M)_ij = sum_k F_k M_ki M_kj
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      T acc(0);
      for (std::size_t k = 0; k < n; ++k) {
        if (m(k, i) == T(0) || m(k, j) == T(0)) continue;
        acc += T(form.coefficient(k)) * m(k, i) * m(k, j);
      }
      const T expected = i == j ? T(form.coefficient(i)) : T(0);
      if (acc != expected) return false;
    }
  }
  return true;
}

}  // namespace

QuadForm::QuadForm(std::vector<KElem> spatial) : spatial_(std::move(spatial)) {
  if (spatial_.empty()) throw std::invalid_argument("a form needs at least one spatial variable");
  for (const auto& c : spatial_) {
    if (sign(c) <= 0) throw std::invalid_argument("spatial coefficient " + c.to_string() + " is not positive");
  }
}

QuadForm QuadForm::with_first(const KElem& c, std::size_t n) {
  std::vector<KElem> spatial(n, KElem(1));
  if (n == 0) throw std::invalid_argument("a form needs at least one spatial variable");
  spatial[0] = c;
  return QuadForm(std::move(spatial));
}

std::string QuadForm::to_string() const {
  std::string out = "diag(";
  for (const auto& c : spatial_) out += c.to_string() + ", ";
  return out + "-rt2)";
}

QuadForm QuadForm::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.rfind("diag(", 0) != 0 || s.back() != ')') {
    throw std::invalid_argument("form must look like diag(c1, ..., cn, -rt2): '" + s + "'");
  }
  auto items = split_commas(std::string_view(s).substr(5, s.size() - 6));
  if (items.size() < 2) throw std::invalid_argument("form needs at least two diagonal entries");
  if (parse_kelem(items.back()) != temporal()) {
    throw std::invalid_argument("the last diagonal entry must be -rt2, got '" + items.back() + "'");
  }
  items.pop_back();
  std::vector<KElem> spatial;
  for (const auto& item : items) spatial.push_back(parse_kelem(item));
  return QuadForm(std::move(spatial));
}

TMatrix lift(const KMatrix& m) {
  TMatrix t(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = TowerElem(m(i, j));
  }
  return t;
}

bool is_isometry(const TMatrix& m, const QuadForm& form) { return preserves(m, form); }
bool is_isometry(const KMatrix& m, const QuadForm& form) { return preserves(m, form); }

bool in_O_prime(const TMatrix& m, const QuadForm& form) {
  if (!is_isometry(m, form)) throw std::domain_error("matrix does not preserve " + form.to_string());
  const std::size_t last = form.size() - 1;
  return sign(m(last, last)) > 0;
}

Isometry::Isometry(TMatrix m, QuadForm form) : m_(std::move(m)), form_(std::move(form)) {
  if (!is_isometry(m_, form_)) throw std::domain_error("matrix does not preserve " + form_.to_string());
}

bool Isometry::sheet_preserving() const {
  const std::size_t last = form_.size() - 1;
  return sign(m_(last, last)) > 0;
}

Isometry Isometry::inverse() const {
  // M^-1 = F^-1 M^T F for diagonal F: entry (i, j) = M_ji F_j / F_i.
  const std::size_t n = size();
  TMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m_(j, i).is_zero()) continue;
      inv(i, j) = m_(j, i) * TowerElem(form_.coefficient(j) / form_.coefficient(i));
    }
  }
  return Isometry(std::move(inv), form_);
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  if (a.form_ != b.form_) throw std::invalid_argument("composing isometries of different forms");
  return Isometry(a.m_ * b.m_, a.form_);
}

Isometry Isometry::identity(const QuadForm& form) { return Isometry(TMatrix::identity(form.size()), form); }

MatrixFile parse_matrix_text(std::string_view text) {
  std::stringstream in{std::string(text)};
  std::string line;
  std::optional<QuadForm> form;
  FieldPtr field;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    if (body.rfind("form:", 0) == 0) {
      form = QuadForm::parse(body.substr(5));
    } else if (body.rfind("field:", 0) == 0) {
      std::string spec = trim(std::string_view(body).substr(6));
      if (spec.rfind("a=", 0) != 0) throw std::invalid_argument("field header must read 'field: a=<rational>'");
      field = TowerField::create(parse_rational(trim(std::string_view(spec).substr(2))));
    } else {
      rows.push_back(split_commas(body));
    }
  }
  if (!form) throw std::invalid_argument("matrix file lacks a 'form:' header");
  const std::size_t n = form->size();
  if (rows.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  }
  TMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_tower(rows[i][j], field);
  }
  return {*form, field, m};
}

std::string to_text(const TMatrix& m, const QuadForm& form, const FieldPtr& field) {
  std::string out = "form: " + form.to_string() + "\n";
  if (field) out += "field: a=" + to_string(field->a()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).to_string();
    }
    out += "\n";
  }
  return out;
}

}  // namespace hybrid
