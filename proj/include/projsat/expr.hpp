/// @file  expr.hpp
/// @brief Parse algebraic Boolean expressions into `bool_func`
///
/// Accepted syntax, loosest binding first:
///
///     a + b   a | b     disjunction
///     a ^ b             exclusive or
///     a.b  a*b  a&b  a b conjunction (juxtaposition works after `'`, `)` or whitespace)
///     a'   !a   ~a      complement
///     0  1  (e)  name   constants, grouping, variables known to the manager

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "bdd.hpp"

namespace projsat {

namespace detail {

class expr_parser {
  manager &_mgr;
  std::string_view _text;
  std::size_t _pos = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw parse_error(1, "column " + std::to_string(_pos + 1) + ": " + msg);
  }

  void skip_ws() {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  char peek() {
    skip_ws();
    return _pos < _text.size() ? _text[_pos] : '\0';
  }

  static bool starts_factor(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '!' || c == '~';
  }

  bool_func parse_or() {
    auto r = parse_xor();
    while (peek() == '+' || peek() == '|') {
      ++_pos;
      r |= parse_xor();
    }
    return r;
  }

  bool_func parse_xor() {
    auto r = parse_and();
    while (peek() == '^') {
      ++_pos;
      r ^= parse_and();
    }
    return r;
  }

  bool_func parse_and() {
    auto r = parse_unary();
    for (;;) {
      const char c = peek();
      if (c == '.' || c == '*' || c == '&') {
        ++_pos;
        r &= parse_unary();
      } else if (starts_factor(c)) {
        r &= parse_unary();
      } else {
        return r;
      }
    }
  }

  bool_func parse_unary() {
    const char c = peek();
    if (c == '!' || c == '~') {
      ++_pos;
      return ~parse_unary();
    }
    auto r = parse_primary();
    while (_pos < _text.size() && _text[_pos] == '\'') {
      ++_pos;
      r = ~r;
    }
    return r;
  }

  bool_func parse_primary() {
    const char c = peek();
    if (c == '(') {
      ++_pos;
      auto r = parse_or();
      if (peek() != ')')
        fail("expected ')'");
      ++_pos;
      return r;
    }
    if (c == '0' || c == '1') {
      ++_pos;
      return _mgr.constant(c == '1');
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = _pos;
      while (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
        ++_pos;
      const auto name = _text.substr(start, _pos - start);
      const auto v = _mgr.find_var(name);
      if (!v)
        fail("unknown variable '" + std::string(name) + "'");
      return _mgr.var(*v);
    }
    fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected '") + c + "'");
  }

public:
  expr_parser(manager &mgr, std::string_view text) : _mgr(mgr), _text(text) {}

  bool_func parse() {
    auto r = parse_or();
    if (peek() != '\0')
      fail(std::string("trailing '") + _text[_pos] + "'");
    return r;
  }
};

} // namespace detail

/// Build the function denoted by `text`; variable names resolve through
/// `manager::find_var`. Throws `parse_error` on bad syntax or unknown names.
inline bool_func parse_expr(manager &mgr, std::string_view text) { return detail::expr_parser(mgr, text).parse(); }

} // namespace projsat
