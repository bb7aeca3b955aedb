#include "tracts/linalg.hpp"

#include <algorithm>

#include "tracts/errors.hpp"

namespace tracts {

Scalar scalar_add(const Scalar& a, const Scalar& b) {
  require_same_tract(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  switch (a.tract.kind) {
    case TractKind::FieldQ: {
      Rat s = std::get<QVal>(a.payload).v + std::get<QVal>(b.payload).v;
      return s == 0 ? scalar_zero(a.tract) : make_q(s);
    }
    case TractKind::FieldQi: {
      GRat s = std::get<QiVal>(a.payload).v + std::get<QiVal>(b.payload).v;
      return s == GRat() ? scalar_zero(a.tract) : make_qi(s);
    }
    case TractKind::FieldFp: {
      unsigned s = (std::get<FpVal>(a.payload).r + std::get<FpVal>(b.payload).r) % a.tract.p;
      return s == 0 ? scalar_zero(a.tract) : make_fp(a.tract, s);
    }
    default:
      throw UnsupportedTractError("field addition outside a field tract");
  }
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) { return scalar_add(a, neg(b)); }

FieldMatrix make_matrix(const TractId& tract, size_t rows, size_t cols,
                        std::vector<Scalar> data) {
  if (tract.kind != TractKind::FieldQ && tract.kind != TractKind::FieldQi &&
      tract.kind != TractKind::FieldFp)
    throw UnsupportedTractError("matrices require a field tract");
  if (data.size() != rows * cols) throw ValidationError("matrix shape mismatch");
  for (const Scalar& s : data) require_tract(tract, s);
  return FieldMatrix{tract, rows, cols, std::move(data)};
}

FieldMatrix parse_matrix(const TractId& tract, const std::string& text) {
  std::vector<std::vector<Scalar>> rows;
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument("matrix literal: expected '" + std::string(1, c) + "'");
    ++i;
  };
  expect('[');
  skip_ws();
  while (i < text.size() && text[i] != ']') {
    expect('[');
    std::vector<Scalar> row;
    std::string cur;
    int depth = 0;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ']')) {
        size_t a = cur.find_first_not_of(" \t\n");
        if (a == std::string::npos) throw std::invalid_argument("empty matrix entry");
        size_t b = cur.find_last_not_of(" \t\n");
        row.push_back(scalar_parse(tract, cur.substr(a, b - a + 1)));
        cur.clear();
        if (c == ']') {
          ++i;
          break;
        }
        continue;
      }
      cur += c;
    }
    rows.push_back(std::move(row));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip_ws();
    }
  }
  expect(']');
  if (rows.empty()) throw std::invalid_argument("empty matrix literal");
  size_t cols = rows.front().size();
  std::vector<Scalar> data;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix literal");
    data.insert(data.end(), r.begin(), r.end());
  }
  return make_matrix(tract, rows.size(), cols, std::move(data));
}

namespace {

// Gaussian elimination over the given columns in order; returns pivot rows used.
// work is modified in place to reduced form.
std::vector<size_t> eliminate(std::vector<std::vector<Scalar>>& work,
                              const std::vector<size_t>& columns) {
  std::vector<size_t> pivot_rows;
  size_t next_row = 0;
  for (size_t c : columns) {
    size_t hit = work.size();
    for (size_t r = next_row; r < work.size(); ++r)
      if (!work[r][c].is_zero()) {
        hit = r;
        break;
      }
    if (hit == work.size()) continue;
    std::swap(work[next_row], work[hit]);
    Scalar piv = inv(work[next_row][c]);
    for (Scalar& s : work[next_row]) s = mul(piv, s);
    for (size_t r = 0; r < work.size(); ++r) {
      if (r == next_row || work[r][c].is_zero()) continue;
      Scalar f = work[r][c];
      for (size_t k = 0; k < work[r].size(); ++k)
        work[r][k] = scalar_sub(work[r][k], mul(f, work[next_row][k]));
    }
    pivot_rows.push_back(c);
    ++next_row;
  }
  return pivot_rows;
}

std::vector<std::vector<Scalar>> row_copy(const FieldMatrix& m) {
  std::vector<std::vector<Scalar>> work(m.rows);
  for (size_t r = 0; r < m.rows; ++r)
    for (size_t c = 0; c < m.cols; ++c) work[r].push_back(m.at(r, c));
  return work;
}

}  // namespace

int rank(const FieldMatrix& m) {
  auto work = row_copy(m);
  std::vector<size_t> cols(m.cols);
  for (size_t c = 0; c < m.cols; ++c) cols[c] = c;
  return static_cast<int>(eliminate(work, cols).size());
}

int column_rank(const FieldMatrix& m, uint32_t column_mask) {
  auto work = row_copy(m);
  std::vector<size_t> cols;
  for (size_t c = 0; c < m.cols; ++c)
    if (column_mask & (1u << c)) cols.push_back(c);
  return static_cast<int>(eliminate(work, cols).size());
}

std::vector<std::vector<Scalar>> reduce_against_basis(const FieldMatrix& m, uint32_t basis_mask) {
  auto work = row_copy(m);
  std::vector<size_t> cols;
  for (size_t c = 0; c < m.cols; ++c)
    if (basis_mask & (1u << c)) cols.push_back(c);
  std::vector<size_t> pivots = eliminate(work, cols);
  if (pivots.size() != cols.size())
    throw ValidationError("selected columns are dependent");
  for (size_t r = pivots.size(); r < work.size(); ++r)
    for (const Scalar& s : work[r])
      if (!s.is_zero()) throw ValidationError("selected columns do not span the row space");
  work.resize(pivots.size());
  return work;
}

std::vector<std::vector<Scalar>> nullspace(const FieldMatrix& m) {
  auto work = row_copy(m);
  std::vector<size_t> cols(m.cols);
  for (size_t c = 0; c < m.cols; ++c) cols[c] = c;
  std::vector<size_t> pivots = eliminate(work, cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols, scalar_zero(m.tract));
    v[free] = scalar_one(m.tract);
    for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = neg(work[pi][free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace tracts
