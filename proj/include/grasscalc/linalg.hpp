#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace grasscalc {

using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>; // row-major, rectangular

QMatrix zero_matrix(size_t rows, size_t cols);

/// Exact determinant of a square matrix (Gaussian elimination with
/// column pivoting over mpq).
mpq_class determinant(QMatrix m);

long rank(QMatrix m);

/// Basis of the right null space {x : M x = 0}. Each vector is scaled so
/// its first nonzero entry is 1; vectors come out ordered by the position
/// of their free column.
std::vector<QVector> kernel_basis(QMatrix m);

/// Solves M x = b exactly. Empty optional if the system is inconsistent;
/// for underdetermined systems the free variables are set to zero.
std::optional<QVector> solve(QMatrix m, QVector b);

/// Leading principal minors D_1, ..., D_n of a square matrix.
std::vector<mpq_class> leading_principal_minors(const QMatrix& m);

} // namespace grasscalc
