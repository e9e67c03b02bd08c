#include "cdga/linear.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cdga/errors.hpp"

namespace cdga {

Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool seen_digit = false, seen_slash = false, denominator_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) denominator_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
    }
  }
  if (!seen_digit || (seen_slash && !denominator_digit))
    throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
  if (s[0] == '+') s.erase(0, 1);
  Scalar value;
  if (value.set_str(s, 10) != 0) throw ParseError("not an exact rational: \"" + s + "\"");
  if (value.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

void add_scaled(SparseVec& target, const Scalar& factor, const SparseVec& source) {
  if (factor == 0) return;
  for (const auto& [index, coeff] : source) {
    auto [it, inserted] = target.try_emplace(index, factor * coeff);
    if (!inserted) {
      it->second += factor * coeff;
      if (it->second == 0) target.erase(it);
    }
  }
}

SparseVec scaled(const SparseVec& v, const Scalar& factor) {
  SparseVec out;
  if (factor == 0) return out;
  for (const auto& [index, coeff] : v) out.emplace(index, coeff * factor);
  return out;
}

SparseVec to_sparse(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace(i, v[i]);
  return out;
}

Vector to_dense(const SparseVec& v, std::size_t dim) {
  Vector out(dim);
  for (const auto& [index, coeff] : v) {
    if (index >= dim) throw std::out_of_range("sparse index outside dense dimension");
    out[index] = coeff;
  }
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols) {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
  for (auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry outside shape");
    acc[{e.row, e.col}] += e.value;
  }
  for (auto& [pos, value] : acc)
    if (value != 0) entries_.push_back({pos.first, pos.second, value});
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, i, Scalar(1)});
  return SparseMatrix(n, n, std::move(e));
}

SparseMatrix SparseMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  std::vector<Entry> e;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) e.push_back({r, c, rows[r][c]});
  }
  return SparseMatrix(rows.size(), cols, std::move(e));
}

SparseMatrix SparseMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  std::vector<Entry> e;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (columns[c][r] != 0) e.push_back({r, c, columns[c][r]});
  }
  return SparseMatrix(rows, columns.size(), std::move(e));
}

Scalar SparseMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& p) {
                               return std::pair{e.row, e.col} < p;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

std::vector<Vector> SparseMatrix::to_rows() const {
  std::vector<Vector> out(rows_, Vector(cols_));
  for (const auto& e : entries_) out[e.row][e.col] = e.value;
  return out;
}

Vector SparseMatrix::column(std::size_t col) const {
  Vector out(rows_);
  for (const auto& e : entries_)
    if (e.col == col) out[e.row] = e.value;
  return out;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match columns");
  Vector out(rows_);
  for (const auto& e : entries_) out[e.row] += e.value * v[e.col];
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shapes do not compose");
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_row(other.rows_);
  for (const auto& e : other.entries_) by_row[e.row].emplace_back(e.col, e.value);
  std::vector<Entry> out;
  for (const auto& e : entries_)
    for (const auto& [col, value] : by_row[e.col]) out.push_back({e.row, col, e.value * value});
  return SparseMatrix(rows_, other.cols_, std::move(out));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.col, e.row, e.value});
  return SparseMatrix(cols_, rows_, std::move(out));
}

namespace detail {

std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    Scalar inv = 1 / rows[next][col];
    for (std::size_t c = col; c < cols; ++c) rows[next][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      Scalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (rows[next][c] != 0) rows[r][c] -= factor * rows[next][c];
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace detail

RowEchelon rref(const SparseMatrix& m) {
  auto rows = m.to_rows();
  auto pivots = detail::reduce_rows(rows, m.cols());
  RowEchelon out;
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  out.reduced = SparseMatrix::from_rows(rows, m.cols());
  return out;
}

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  auto rows = m.to_rows();
  auto pivots = detail::reduce_rows(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  auto rows = m.to_rows();
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(b[r]);
  auto pivots = detail::reduce_rows(rows, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][m.cols()];
  return x;
}

QuotientData quotient_data(const std::vector<Vector>& subspace, std::size_t ambient_dim) {
  std::vector<Vector> rows = subspace;
  for (const auto& v : rows)
    if (v.size() != ambient_dim) throw std::invalid_argument("subspace vector length mismatch");
  auto pivots = detail::reduce_rows(rows, ambient_dim);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : pivots) is_pivot[p] = true;

  QuotientData out;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (is_pivot[c]) continue;
    out.coordinates.push_back(c);
    Vector e(ambient_dim);
    e[c] = 1;
    out.representatives.push_back(std::move(e));
  }
  // v ↦ v - Σ_p v_p row_p, read off at the non-pivot coordinates.
  std::vector<SparseMatrix::Entry> entries;
  for (std::size_t k = 0; k < out.coordinates.size(); ++k) {
    std::size_t c = out.coordinates[k];
    entries.push_back({k, c, Scalar(1)});
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i][c] != 0) entries.push_back({k, pivots[i], -rows[i][c]});
  }
  out.projection = SparseMatrix(out.coordinates.size(), ambient_dim, std::move(entries));
  return out;
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim) {
  auto rows = vectors;
  return detail::reduce_rows(rows, dim).size();
}

std::optional<std::vector<Vector>> invert(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return std::vector<Vector>{};
  std::vector<Vector> work = rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (work[i].size() != n) throw std::invalid_argument("invert: matrix is not square");
    work[i].resize(2 * n);
    work[i][n + i] = 1;
  }
  auto pivots = detail::reduce_rows(work, 2 * n);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  std::vector<Vector> inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
  return inv;
}

// ------------------------------------------------------------------ Subspace

Subspace::Subspace(const std::vector<SparseVec>& vectors) {
  for (const auto& v : vectors) insert(v);
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec out = v;
  for (const auto& [pivot, row] : rows_) {
    auto it = out.find(pivot);
    if (it == out.end()) continue;
    Scalar c = it->second;
    add_scaled(out, -c, row);
  }
  return out;
}

bool Subspace::insert(const SparseVec& v) {
  SparseVec w = reduce(v);
  if (w.empty()) return false;
  const std::size_t pivot = w.begin()->first;
  w = scaled(w, 1 / Scalar(w.begin()->second));
  for (auto& [p, row] : rows_) {
    (void)p;
    auto it = row.find(pivot);
    if (it == row.end()) continue;
    Scalar c = it->second;
    add_scaled(row, -c, w);
  }
  rows_.emplace(pivot, std::move(w));
  return true;
}

std::vector<SparseVec> Subspace::basis() const {
  std::vector<SparseVec> out;
  for (const auto& [p, row] : rows_) {
    (void)p;
    out.push_back(row);
  }
  return out;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVec& v) const {
  std::vector<Scalar> coeffs;
  SparseVec rest = v;
  for (const auto& [pivot, row] : rows_) {
    auto it = v.find(pivot);
    Scalar c = it == v.end() ? Scalar(0) : it->second;
    coeffs.push_back(c);
    add_scaled(rest, -c, row);
  }
  if (!rest.empty()) return std::nullopt;
  return coeffs;
}

}  // namespace cdga
