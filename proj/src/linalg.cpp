#include "grasscalc/linalg.hpp"

#include <stdexcept>

namespace grasscalc {

namespace {

struct Echelon {
    QMatrix m;                // reduced row echelon form
    std::vector<size_t> lead; // pivot column of each nonzero row
    int sign = 1;             // parity of row swaps
    mpq_class pivot_product = 1;
};

// Reduced row echelon form with partial (first-nonzero) pivoting.
Echelon rref(QMatrix m)
{
    Echelon e;
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != row) {
            std::swap(m[pivot], m[row]);
            e.sign = -e.sign;
        }
        e.pivot_product *= m[row][col];
        mpq_class inv = 1 / m[row][col];
        for (size_t j = col; j < cols; ++j)
            m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            mpq_class factor = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] -= factor * m[row][j];
        }
        e.lead.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

} // namespace

QMatrix zero_matrix(size_t rows, size_t cols)
{
    return QMatrix(rows, QVector(cols, mpq_class(0)));
}

mpq_class determinant(QMatrix m)
{
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    Echelon e = rref(std::move(m));
    if (e.lead.size() < n)
        return 0;
    return e.sign > 0 ? e.pivot_product : -e.pivot_product;
}

long rank(QMatrix m)
{
    return static_cast<long>(rref(std::move(m)).lead.size());
}

std::vector<QVector> kernel_basis(QMatrix m)
{
    size_t cols = m.empty() ? 0 : m[0].size();
    Echelon e = rref(std::move(m));
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.lead)
        is_pivot[c] = true;
    std::vector<QVector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        QVector v(cols, mpq_class(0));
        v[free] = 1;
        for (size_t r = 0; r < e.lead.size(); ++r)
            v[e.lead[r]] = -e.m[r][free];
        // scale so the first nonzero entry is 1
        for (auto& x : v) {
            if (x != 0) {
                mpq_class inv = 1 / x;
                for (auto& y : v)
                    y *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(QMatrix m, QVector b)
{
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    if (b.size() != rows)
        throw std::invalid_argument("solve: size mismatch");
    for (size_t i = 0; i < rows; ++i)
        m[i].push_back(b[i]);
    Echelon e = rref(std::move(m));
    QVector x(cols, mpq_class(0));
    for (size_t r = 0; r < e.lead.size(); ++r) {
        if (e.lead[r] == cols)
            return std::nullopt; // pivot in the augmented column
        x[e.lead[r]] = e.m[r][cols];
    }
    return x;
}

std::vector<mpq_class> leading_principal_minors(const QMatrix& m)
{
    size_t n = m.size();
    std::vector<mpq_class> minors;
    minors.reserve(n);
    for (size_t s = 1; s <= n; ++s) {
        QMatrix sub(s, QVector(s));
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < s; ++j)
                sub[i][j] = m[i][j];
        minors.push_back(determinant(std::move(sub)));
    }
    return minors;
}

} // namespace grasscalc
