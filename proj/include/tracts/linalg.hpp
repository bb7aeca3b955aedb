#pragma once

#include <vector>

#include "tracts/fvector.hpp"
#include "tracts/scalar.hpp"

namespace tracts {

// exact field addition; defined for the three field tracts only
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);

// dense row-major matrix over one of the field tracts
struct FieldMatrix {
  TractId tract;
  size_t rows = 0, cols = 0;
  std::vector<Scalar> data;

  Scalar& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Scalar& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

FieldMatrix make_matrix(const TractId& tract, size_t rows, size_t cols,
                        std::vector<Scalar> data);
FieldMatrix parse_matrix(const TractId& tract, const std::string& text);  // [[a,b],[c,d]]

int rank(const FieldMatrix& m);
// rank of the column submatrix selected by the mask
int column_rank(const FieldMatrix& m, uint32_t column_mask);

// Row reduces so the columns flagged in basis_mask carry an identity, one pivot
// per flagged column in ground order. Requires the flagged columns to be
// independent of full row rank; throws ValidationError otherwise.
// Returns one row per flagged column, in ascending column order.
std::vector<std::vector<Scalar>> reduce_against_basis(const FieldMatrix& m, uint32_t basis_mask);

// basis of the right null space {x : m x = 0}
std::vector<std::vector<Scalar>> nullspace(const FieldMatrix& m);

}  // namespace tracts
