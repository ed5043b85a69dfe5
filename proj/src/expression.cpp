#include "cyclab/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "cyclab/errors.hpp"

namespace cyclab {

namespace {

constexpr int kMaxDegree = 4096;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BivariateSeries parse() {
    BivariateSeries p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static BivariateSeries product(const BivariateSeries& a, const BivariateSeries& b) {
    const Box box{a.max_k() + b.max_k(), a.max_l() + b.max_l()};
    if (box.k > kMaxDegree || box.l > kMaxDegree) {
      throw Error(ErrorKind::Parse, "polynomial degree exceeds " + std::to_string(kMaxDegree));
    }
    return multiply(a, b, box);
  }

  BivariateSeries expr() {
    BivariateSeries acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term());
      } else if (accept('-')) {
        acc = subtract(acc, term());
      } else {
        return acc;
      }
    }
  }

  BivariateSeries term() {
    BivariateSeries acc = unary();
    while (accept('*')) acc = product(acc, unary());
    return acc;
  }

  BivariateSeries unary() {
    if (accept('-')) return scale(unary(), -1.0);
    if (accept('+')) return unary();
    return power();
  }

  BivariateSeries power() {
    BivariateSeries base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    int e = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, e);
    if (ec != std::errc() || e > kMaxDegree) fail("exponent out of range");
    BivariateSeries acc = BivariateSeries::constant(1.0);
    for (int i = 0; i < e; ++i) acc = product(acc, base);
    return acc;
  }

  BivariateSeries primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BivariateSeries inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'z') {
      if (pos_ + 1 < s_.size() && (s_[pos_ + 1] == '1' || s_[pos_ + 1] == '2')) {
        const bool first = s_[pos_ + 1] == '1';
        pos_ += 2;
        if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
          fail("unknown identifier");
        }
        return first ? BivariateSeries::monomial(1, 0) : BivariateSeries::monomial(0, 1);
      }
      fail("unknown variable (expected z1 or z2)");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  BivariateSeries number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      digits();
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_ || !std::isfinite(v)) {
      pos_ = start;
      fail("malformed number");
    }
    return BivariateSeries::constant(v);
  }
};

// Replace -0.0 by 0.0 so equal polynomials serialize identically.
BivariateSeries canonical_zeros(const BivariateSeries& p) {
  BivariateSeries q = p;
  for (int k = 0; k <= q.max_k(); ++k) {
    for (int l = 0; l <= q.max_l(); ++l) {
      Complex& c = q.at(k, l);
      c = {c.real() == 0.0 ? 0.0 : c.real(), c.imag() == 0.0 ? 0.0 : c.imag()};
    }
  }
  return q;
}

}  // namespace

BivariateSeries parse_polynomial(std::string_view text) {
  Parser parser(text);
  return canonical_zeros(trim(parser.parse(), 0.0));
}

}  // namespace cyclab
