#include "qosc/qvalue.hpp"

#include <cctype>
#include <cstdlib>

namespace qosc {

namespace detail {

template <>
double real_from_decimal<double>(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size())
    throw std::invalid_argument("invalid decimal: '" + text + "'");
  return v;
}

template <>
ext_real real_from_decimal<ext_real>(const std::string& text) {
  return ext_real(text);
}

}  // namespace detail

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_integer(const std::string& s, long long& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtoll(s.c_str(), &end, 10);
  return end == s.c_str() + s.size();
}

bool looks_like_decimal(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

}  // namespace

QExpression QExpression::parse(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw std::invalid_argument("q value is empty");

  QExpression expr;
  expr.text_ = text;

  const auto call_argument = [&text](const std::string& name) -> std::string {
    // text is known to start with name + '('; strip it and the trailing ')'
    if (text.back() != ')')
      throw std::invalid_argument("unbalanced parentheses in q value: '" + text + "'");
    return trim(text.substr(name.size() + 1, text.size() - name.size() - 2));
  };

  if (text.rfind("sqrt(", 0) == 0) {
    const std::string inner = call_argument("sqrt");
    const std::size_t slash = inner.find('/');
    if (slash != std::string::npos) {
      if (!parse_integer(trim(inner.substr(0, slash)), expr.num_) ||
          !parse_integer(trim(inner.substr(slash + 1)), expr.den_) || expr.den_ == 0)
        throw std::invalid_argument("invalid fraction under sqrt: '" + text + "'");
      expr.kind_ = Kind::sqrt_fraction;
      return expr;
    }
    if (!looks_like_decimal(inner))
      throw std::invalid_argument("invalid argument to sqrt: '" + text + "'");
    expr.decimal_ = inner;
    expr.kind_ = Kind::sqrt_decimal;
    return expr;
  }

  if (text.rfind("nextnearest(", 0) == 0) {
    long long m = 0;
    if (!parse_integer(call_argument("nextnearest"), m) || m < 0)
      throw std::invalid_argument(
          "nextnearest(m) needs a nonnegative integer m: '" + text + "'");
    expr.m_ = static_cast<int>(m);
    expr.kind_ = Kind::next_nearest;
    return expr;
  }

  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    if (!parse_integer(trim(text.substr(0, slash)), expr.num_) ||
        !parse_integer(trim(text.substr(slash + 1)), expr.den_) || expr.den_ == 0)
      throw std::invalid_argument("invalid fraction: '" + text + "'");
    expr.kind_ = Kind::fraction;
    return expr;
  }

  if (!looks_like_decimal(text))
    throw std::invalid_argument("invalid q value: '" + text + "'");
  expr.decimal_ = text;
  expr.kind_ = Kind::decimal;
  return expr;
}

}  // namespace qosc
