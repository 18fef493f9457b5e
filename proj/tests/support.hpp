#pragma once

#include <string>

#include "closure_lab/expression.hpp"
#include "closure_lab/polynomial.hpp"
#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<closure_lab::Polynomial> {
  static String convert(const closure_lab::Polynomial& p) {
    const auto vars = closure_lab::default_variable_names(p.dim());
    return closure_lab::format_polynomial(p, vars).c_str();
  }
};
template <>
struct StringMaker<std::vector<std::string>> {
  static String convert(const std::vector<std::string>& v) {
    std::string s = "[";
    for (const auto& x : v) s += (s.size() > 1 ? ", " : "") + x;
    return (s + "]").c_str();
  }
};
}  // namespace doctest
