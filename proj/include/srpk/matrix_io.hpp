#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "srpk/error.hpp"
#include "srpk/matrix.hpp"

namespace srpk::io {

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

inline std::size_t parse_count(std::string_view token, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    raise(ErrorKind::parse_error, std::string("bad ") + what + ": '" + std::string(token) + "'");
  }
  return v;
}

/// Reads a `a b` header line of two counts.
inline std::pair<std::size_t, std::size_t> read_header(std::istream& in, const char* what) {
  std::string line;
  if (!next_content_line(in, line)) raise(ErrorKind::parse_error, std::string("empty ") + what);
  auto toks = split_tokens(line);
  if (toks.size() != 2) {
    raise(ErrorKind::parse_error, std::string(what) + " header must hold two counts: '" + line + "'");
  }
  return {parse_count(toks[0], "count"), parse_count(toks[1], "count")};
}

inline void expect_end(std::istream& in, const char* what) {
  std::string line;
  if (next_content_line(in, line)) {
    raise(ErrorKind::parse_error, std::string("trailing content after ") + what + ": '" + line + "'");
  }
}

}  // namespace detail

// Text format: a line `n m`, then n lines of m whitespace-separated element
// tokens. Blank lines are ignored.
template <Semiring S>
Matrix<S> read_matrix(const S& s, std::istream& in) {
  auto [n, m] = detail::read_header(in, "matrix");
  std::vector<element_t<S>> data;
  data.reserve(n * m);
  std::string line;
  for (std::size_t i = 0; i < n; ++i) {
    if (!detail::next_content_line(in, line)) {
      raise(ErrorKind::parse_error, "matrix ends after " + std::to_string(i) + " of " +
                                        std::to_string(n) + " rows");
    }
    auto toks = detail::split_tokens(line);
    if (toks.size() != m) {
      raise(ErrorKind::parse_error, "row " + std::to_string(i + 1) + " has " +
                                        std::to_string(toks.size()) + " entries, expected " +
                                        std::to_string(m));
    }
    for (const auto& t : toks) data.push_back(s.parse(t));
  }
  detail::expect_end(in, "matrix");
  return Matrix<S>(s, n, m, std::move(data));
}

template <Semiring S>
Matrix<S> read_matrix(const S& s, const std::string& text) {
  std::istringstream in(text);
  return read_matrix(s, in);
}

/// Accepts either an n x 1 or a 1 x n matrix.
template <Semiring S>
Vector<S> read_vector(const S& s, std::istream& in) {
  Matrix<S> m = read_matrix(s, in);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return Vector<S>(m.row(0).begin(), m.row(0).end());
  raise(ErrorKind::parse_error, "expected a vector, got " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
}

template <Semiring S>
Vector<S> read_vector(const S& s, const std::string& text) {
  std::istringstream in(text);
  return read_vector(s, in);
}

template <Semiring S>
void write_matrix(std::ostream& out, const Matrix<S>& a) {
  const S& s = a.semiring();
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << s.format(a(i, j));
    }
    out << '\n';
  }
}

/// Writes a vector as an n x 1 matrix.
template <Semiring S>
void write_vector(std::ostream& out, const S& s, std::span<const element_t<S>> v) {
  write_matrix(out, Matrix<S>::column(s, v));
}

template <Semiring S>
std::string to_text(const Matrix<S>& a) {
  std::ostringstream out;
  write_matrix(out, a);
  return out.str();
}

}  // namespace srpk::io
