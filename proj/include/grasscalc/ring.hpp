#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "grasscalc/context.hpp"
#include "grasscalc/linalg.hpp"
#include "grasscalc/partition.hpp"
#include "grasscalc/special_poly.hpp"

namespace grasscalc {

/// The special Schubert class cbar_i = [Omega_i], 1 <= i <= n-k.
struct SpecialClass {
    int index = 1;
};

/// Homogeneous element of H^*(G_{n,k}; Q) in the Schubert basis: a sparse
/// rational combination of partitions of one fixed weight. Terms iterate
/// in the basis order (decreasing lexicographic).
class CohElement {
public:
    CohElement(GrassContext ctx, long grade); // zero element
    static CohElement unit(const GrassContext& ctx);
    static CohElement schubert(const GrassContext& ctx, const Partition& nu);
    /// [Omega_i], which lives in complex grade N - |i|.
    static CohElement schubert(const GrassContext& ctx, const IndexSet& i);

    const GrassContext& ctx() const { return ctx_; }
    long grade() const { return grade_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, mpq_class, PartitionDescLex>& terms() const { return terms_; }
    mpq_class coeff(const Partition& nu) const;

    void set_coeff(const Partition& nu, const mpq_class& c);
    void add_coeff(const Partition& nu, const mpq_class& c);

    CohElement& operator+=(const CohElement& other);
    CohElement& operator-=(const CohElement& other);
    CohElement& operator*=(const mpq_class& scalar);
    CohElement operator+(const CohElement& other) const;
    CohElement operator-(const CohElement& other) const;
    CohElement operator-() const;
    friend CohElement operator*(const mpq_class& scalar, CohElement e)
    {
        e *= scalar;
        return e;
    }

    /// Coordinates over ctx().basis(grade()).
    QVector coordinates() const;
    static CohElement from_coordinates(const GrassContext& ctx, long grade,
                                       const QVector& coords);

    std::string to_string() const; // e.g. "s(2) - s(1,1)"

    friend bool operator==(const CohElement& a, const CohElement& b)
    {
        return a.ctx_.same_ring(b.ctx_) && a.grade_ == b.grade_ && a.terms_ == b.terms_;
    }

private:
    GrassContext ctx_;
    long grade_ = 0;
    std::map<Partition, mpq_class, PartitionDescLex> terms_;
};

/// Pieri rule: a * cbar_s, summing over horizontal-strip additions inside
/// the box. Partitions escaping the box are dropped, which implements the
/// ideal quotient.
CohElement pieri_multiply(const CohElement& a, SpecialClass s);
CohElement pieri_power(const CohElement& a, SpecialClass s, long exponent);

/// Giambelli determinant det(cbar_{nu_t - t + s}) as a formal polynomial
/// in the special-class symbols. Symbols of index > n-k may appear; they
/// evaluate to zero in the ring.
SpecialPoly giambelli_expand(const GrassContext& ctx, const Partition& nu);

/// Evaluates a homogeneous special-class polynomial against a, i.e.
/// a * p(cbar_1, ..., cbar_{n-k}), via iterated Pieri.
CohElement apply_special_poly(const CohElement& a, const SpecialPoly& p);
CohElement evaluate_special_poly(const GrassContext& ctx, const SpecialPoly& p);

/// Full cup product, computed by Giambelli-expanding each basis class of b
/// and applying iterated Pieri to a.
CohElement multiply(const CohElement& a, const CohElement& b);

/// Coefficient of the top class in a * b; zero unless grades sum to N.
mpq_class duality_pair(const CohElement& a, const CohElement& b);

/// Degree of the Schubert variety Omega_i by the closed product formula
/// r! prod_{t<s} (i_s - i_t) / prod_j (i_j - 1)!, r = |i|.
mpz_class schubert_degree_formula(const GrassContext& ctx, const IndexSet& i);
/// Same degree as <[Omega_i] cbar_1^{|i|}, mu>, by iterated Pieri. The
/// independent oracle for the closed formula.
mpz_class schubert_degree_pieri(const GrassContext& ctx, const IndexSet& i);

/// deg G_{n,k} = N! 1! ... (k-1)! / ((n-k)! ... (n-1)!).
mpz_class grassmannian_degree(const GrassContext& ctx);
mpz_class grassmannian_degree(int n, int k);

/// deg([Omega_i][Omega_j]) = <[Omega_i][Omega_j] cbar_1^q, mu> with
/// q = |i| + |j| - N; zero when q < 0.
mpz_class pair_degree(const GrassContext& ctx, const IndexSet& i, const IndexSet& j);

/// h_j(c_1, ..., c_k) evaluated in the ring; must vanish for n-k < j <= n.
CohElement relation_check(const GrassContext& ctx, int j);

/// Monomials cbar^j of weight r with every exponent <= n-k, in decreasing
/// lexicographic order on exponent vectors. A basis of H^{2r} when k <= n/2.
std::vector<Monomial> cbar_monomials(const GrassContext& ctx, long r);

/// Row t = Schubert coordinates of the t-th cbar-monomial of weight r.
QMatrix cbar_monomial_to_schubert(const GrassContext& ctx, long r);

} // namespace grasscalc
