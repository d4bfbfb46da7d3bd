// Recursive-descent parser for field-element text:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := integer | "rt2" | "rtA" | '(' expr ')' | '-' factor
//
// Evaluation happens in the tower so that "(u)+(v)*rtA" and plain k-text share
// one grammar.

#include <cctype>
#include <stdexcept>
#include <string>

#include "hybrid/exactfield/kelem.hpp"
#include "hybrid/exactfield/tower.hpp"

namespace hybrid {
namespace {

class Parser {
 public:
  Parser(std::string_view text, FieldPtr field) : text_(text), field_(std::move(field)) {}

  TowerElem parse() {
    TowerElem value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse field element '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  TowerElem expr() {
    TowerElem value;
    if (accept('-')) {
      value = -term();
    } else {
      accept('+');
      value = term();
    }
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  TowerElem term() {
    TowerElem value = factor();
    while (true) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        TowerElem d = factor();
        if (d.is_zero()) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  TowerElem factor() {
    skip_space();
    if (accept('(')) {
      TowerElem inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (accept('-')) return -factor();
    if (accept_word("rt2")) return TowerElem(KElem::sqrt2());
    if (accept_word("rtA")) {
      if (!field_) fail("rtA used without a declared tower parameter");
      return TowerElem::sqrt_a(field_);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number, rt2, rtA or '('");
    Integer z(std::string(text_.substr(start, pos_ - start)), 10);
    return TowerElem(KElem(Rational(z)));
  }

  std::string_view text_;
  FieldPtr field_;
  std::size_t pos_ = 0;
};

}  // namespace

TowerElem parse_tower(std::string_view text, const FieldPtr& field) { return Parser(text, field).parse(); }

KElem parse_kelem(std::string_view text) { return Parser(text, nullptr).parse().k_part(); }

}  // namespace hybrid
