#pragma once

#include <bit>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hbcells/polynomial.hpp"
#include "hbcells/text.hpp"

namespace hbcells {

// Row-major matrix of polynomials over one shared ring.
class PolyMatrix {
 public:
  PolyMatrix(VariableSet ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

  static PolyMatrix identity(const VariableSet& ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
    return m;
  }

  const VariableSet& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Polynomial> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  void set(std::size_t r, std::size_t c, Polynomial p) {
    if (!(p.ring() == ring_)) throw ambient_mismatch("matrix entry over a foreign ring");
    (*this)(r, c) = std::move(p);
  }

  PolyMatrix without_row(std::size_t skip) const {
    PolyMatrix m(ring_, rows_ - 1, cols_);
    for (std::size_t r = 0, out = 0; r < rows_; ++r) {
      if (r == skip) continue;
      for (std::size_t c = 0; c < cols_; ++c) m(out, c) = (*this)(r, c);
      ++out;
    }
    return m;
  }

  PolyMatrix without(std::size_t skip_row, std::size_t skip_col) const {
    PolyMatrix m(ring_, rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, ro = 0; r < rows_; ++r) {
      if (r == skip_row) continue;
      for (std::size_t c = 0, co = 0; c < cols_; ++c) {
        if (c == skip_col) continue;
        m(ro, co++) = (*this)(r, c);
      }
      ++ro;
    }
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  PolyMatrix map(const auto& fn) const {
    PolyMatrix m(ring_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = fn(entries_[i]);
    if (!entries_.empty()) m.ring_ = m.entries_.front().ring();
    return m;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  VariableSet ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

namespace detail {

inline Polynomial cofactor_determinant(const PolyMatrix& m) {
  const auto n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Polynomial det(m.ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Polynomial term = m(0, c) * cofactor_determinant(m.without(0, c));
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

// Fraction-free elimination. Pivot: first non-zero entry in the current
// column; a row swap flips the sign; an all-zero column gives determinant 0.
inline Polynomial bareiss_determinant(PolyMatrix m) {
  const auto n = m.rows();
  bool negate = false;
  Polynomial previous = Polynomial::constant(m.ring(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Polynomial(m.ring());
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m(k, k) * m(i, j);
        if (!m(i, k).is_zero() && !m(k, j).is_zero()) num -= m(i, k) * m(k, j);
        m(i, j) = exact_divide(num, previous);
      }
      m(i, k) = Polynomial(m.ring());
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace detail

// Division-free Laplace expansion along rows, sharing the minors on each
// column subset. 2^n intermediate minors, so only for small n; no exact
// division, which keeps intermediates no larger than the final minors.
inline Polynomial expansion_determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw shape_error("determinant of a non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  if (n > 20) throw shape_error("expansion determinant limited to 20x20");
  // minors[S]: determinant of rows 0..|S|-1 against the columns in S
  std::vector<Polynomial> minors(std::size_t{1} << n, Polynomial(m.ring()));
  minors[0] = Polynomial::constant(m.ring(), 1);
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) by_size[std::popcount(s)].push_back(s);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::uint32_t s : by_size[k + 1]) {
      Polynomial acc(m.ring());
      for (std::size_t c = 0; c < n; ++c) {
        if (!(s >> c & 1u) || m(k, c).is_zero()) continue;
        const auto& sub = minors[s & ~(std::uint32_t{1} << c)];
        if (sub.is_zero()) continue;
        Polynomial term = m(k, c) * sub;
        // sign from the columns of s to the right of c
        if (std::popcount(s >> (c + 1)) % 2 == 0) acc += term;
        else acc -= term;
      }
      minors[s] = std::move(acc);
    }
    for (std::uint32_t s : by_size[k]) minors[s] = Polynomial(m.ring());
  }
  return minors.back();
}

// Exact determinant. Cofactor expansion for n <= 4, Bareiss above.
inline Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw shape_error("determinant of a non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  if (m.rows() <= 4) return detail::cofactor_determinant(m);
  return detail::bareiss_determinant(m);
}

// Entry i is det(M with row i deleted); no sign normalization.
inline std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  if (m.rows() != m.cols() + 1)
    throw shape_error("maximal minors need a (t+1)x t matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  std::vector<Polynomial> minors;
  minors.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) minors.push_back(determinant(m.without_row(r)));
  return minors;
}

// Rank of a dense rational matrix by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Text and JSON forms

// One row per line, entries separated by " | ".
inline std::string to_text(const PolyMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " | " : "") << to_string(m(r, c));
    out << '\n';
  }
  return out.str();
}

inline PolyMatrix matrix_from_text(std::string_view text, const VariableSet& ring) {
  std::vector<std::vector<Polynomial>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Polynomial> row;
    std::size_t start = 0;
    for (;;) {
      auto bar = line.find('|', start);
      row.push_back(parse_polynomial(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start), ring));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw parse_error("ragged matrix text");
    rows.push_back(std::move(row));
  }
  PolyMatrix m(ring, rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = std::move(rows[r][c]);
  return m;
}

inline nlohmann::ordered_json to_json(const PolyMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline PolyMatrix matrix_from_json(const nlohmann::json& j, const VariableSet& ring) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw parse_error("matrix JSON: row count mismatch");
    PolyMatrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) throw parse_error("matrix JSON: column count mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_polynomial(entries[r][c].get<std::string>(), ring);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace hbcells
