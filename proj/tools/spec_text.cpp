#include "spec_text.hpp"

#include <cctype>

namespace toricfill::cli {

namespace {

class Scanner {
public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    ++col_;
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SpecParseError(line_, col_, message);
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      advance();
    if (start == pos_) fail("expected a shape keyword ('linear' or 'cyclic')");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c) fail("expected " + what);
    advance();
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-') advance();
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      advance();
    if (pos_ == digits) fail("expected an integer");
    return Int(text_.substr(start, pos_ - start));
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

PlumbingGraph parse_spec(const std::string& text) {
  Scanner s(text);
  std::string shape_word = s.word();
  Shape shape;
  if (shape_word == "linear") shape = Shape::Linear;
  else if (shape_word == "cyclic") shape = Shape::Cyclic;
  else s.fail("unknown shape '" + shape_word + "' (expected 'linear' or 'cyclic')");
  s.expect(':', "':' after the shape");
  std::vector<Int> weights;
  weights.push_back(s.integer());
  while (!s.at_end()) {
    s.expect(',', "',' between weights");
    weights.push_back(s.integer());
  }
  return PlumbingGraph(shape, std::move(weights));
}

std::string unparse(const PlumbingGraph& g) {
  std::string out = g.shape == Shape::Linear ? "linear: " : "cyclic: ";
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    if (i) out += ", ";
    out += g.weights[i].str();
  }
  return out;
}

}  // namespace toricfill::cli
