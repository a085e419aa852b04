#include "gsn/words.hpp"

#include <cctype>
#include <stdexcept>

#include "gsn/catalog.hpp"

namespace gsn {

namespace {

class Parser {
public:
  Parser(const std::string& text, const TreeParams& params) : text_(text), params_(params) {}

  ElemPtr parse() {
    ElemPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

private:
  const std::string& text_;
  TreeParams params_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("word parse error at position " + std::to_string(pos_) + ": " +
                                what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      neg = (text_[pos_++] == '-');
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000) fail("exponent too large");
    }
    return neg ? -v : v;
  }

  ElemPtr parse_expr() {
    std::vector<ElemPtr> factors;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')' || text_[pos_] == ',') break;
      factors.push_back(parse_term());
    }
    if (factors.empty()) fail("empty word");
    return TreeElement::product(std::move(factors));
  }

  ElemPtr parse_term() {
    ElemPtr atom = parse_atom();
    skip_ws();
    if (eat('^')) {
      long k = parse_int();
      return power(atom, k, params_.p);
    }
    return atom;
  }

  ElemPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    switch (c) {
      case 'x': ++pos_; return TreeElement::word({Gen::x});
      case 'X': ++pos_; return TreeElement::word({Gen::x_inv});
      case 'Y': ++pos_; return TreeElement::word({Gen::y_inv});
      case '(': {
        ++pos_;
        ElemPtr e = parse_expr();
        if (!eat(')')) fail("expected ')'");
        return e;
      }
      case 'y':
        ++pos_;
        return TreeElement::word({Gen::y});
      case 'c': {
        if (text_.compare(pos_, 4, "comm") != 0) fail("unknown token");
        pos_ += 4;
        if (!eat('(')) fail("expected '(' after comm");
        ElemPtr a = parse_expr();
        if (!eat(',')) fail("expected ',' in comm");
        ElemPtr b = parse_expr();
        if (!eat(')')) fail("expected ')' after comm");
        return commutator(a, b, params_.p);
      }
      case 'z': {
        ++pos_;
        if (!eat('(')) fail("expected '(' after z");
        long n = parse_int();
        if (n < 1) fail("z(n) needs n >= 1");
        if (!eat(')')) fail("expected ')' after z");
        return z_element(static_cast<int>(n), params_);
      }
      case '1': ++pos_; return TreeElement::identity();
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }
};

}  // namespace

ElemPtr parse_word(const std::string& text, const TreeParams& params) {
  return Parser(text, params).parse();
}

}  // namespace gsn
