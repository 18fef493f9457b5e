#include "closure_lab/expression.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "closure_lab/error.hpp"

namespace closure_lab {

namespace {

// Exponents past this bound on anything but a bare monomial are rejected.
constexpr unsigned long kMaxExpandedPower = 4096;

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" +
                                   std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-')
      fail("negative exponent");
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a nonnegative integer exponent");
    mpz_class e = integer();
    if (base.is_term()) {
      const auto& [mono, coeff] = *base.terms().begin();
      mpq_class c = 1;
      if (coeff != 1) {
        if (coeff == -1) {
          c = mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
        } else {
          if (e > kMaxExpandedPower) fail_at("exponent too large", at);
          mpz_pow_ui(c.get_num_mpz_t(), coeff.get_num_mpz_t(), e.get_ui());
          mpz_pow_ui(c.get_den_mpz_t(), coeff.get_den_mpz_t(), e.get_ui());
          c.canonicalize();
        }
      }
      return Polynomial::monomial(mono.scaled(e), c);
    }
    if (base.is_zero()) return sgn(e) == 0 ? Polynomial::constant(vars_.size(), 1)
                                           : base;
    if (e > kMaxExpandedPower) fail_at("exponent too large", at);
    return base.pow(e.get_ui());
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected an integer denominator");
        mpz_class den = integer();
        if (sgn(den) == 0) fail_at("zero denominator", at);
        value /= mpq_class(den);
      }
      return Polynomial::constant(vars_.size(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail_at("unknown variable `" + name + "`", start);
      return Polynomial::variable(vars_.size(),
                                  static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> vars) {
  if (vars.empty()) throw PreconditionError("no variables declared");
  return Parser(text, vars).parse();
}

std::string format_monomial(const ExponentVector& e,
                            std::span<const std::string> vars) {
  require_same_dim(vars.size(), e.dim());
  std::string out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (sgn(e[i]) == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + e[i].get_str();
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p,
                              std::span<const std::string> vars,
                              TermOrder order) {
  if (p.is_zero()) return "0";
  std::vector<const Polynomial::Terms::value_type*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
    return compare(order, a->first, b->first) > 0;
  });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [e, c] = *terms[i];
    const bool negative = sgn(c) < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const mpq_class magnitude = abs(c);
    const std::string mono = format_monomial(e, vars);
    if (e.is_zero()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace closure_lab
