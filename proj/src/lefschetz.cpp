#include "grasscalc/lefschetz.hpp"

#include <stdexcept>

namespace grasscalc {

namespace {

constexpr SpecialClass kOmega{1};

void require_form_grade(const CohElement& a, const CohElement& b)
{
    require_same_ring(a.ctx(), b.ctx());
    if (a.grade() != b.grade())
        throw std::invalid_argument("the form pairs classes of equal grade");
    if (2 * a.grade() > a.ctx().dim())
        throw std::out_of_range("the form is defined for 2r <= N");
}

} // namespace

mpq_class omega_pairing(const CohElement& a, const CohElement& b)
{
    require_form_grade(a, b);
    long power = a.ctx().dim() - 2 * a.grade();
    CohElement lifted = pieri_power(b, kOmega, power);
    // expand the low-grade factor through Giambelli
    return multiply(lifted, a).coeff(a.ctx().top_class());
}

mpq_class omega_pairing_scaled(const CohElement& a, const CohElement& b,
                               const mpq_class& t)
{
    require_form_grade(a, b);
    if (t == 0)
        throw std::domain_error("the Lefschetz class must be nonzero");
    long power = a.ctx().dim() - 2 * a.grade();
    CohElement lifted = b;
    for (long i = 0; i < power; ++i) {
        lifted = pieri_multiply(lifted, kOmega);
        lifted *= t;
    }
    return multiply(lifted, a).coeff(a.ctx().top_class());
}

PairingMatrix pairing_matrix(const GrassContext& ctx, long r)
{
    if (r < 0 || 2 * r > ctx.dim())
        throw std::out_of_range("pairing matrix needs 0 <= 2r <= N");
    const auto& basis = ctx.basis(r);
    size_t dim = basis.size();
    PairingMatrix out{ctx, r, basis, zero_matrix(dim, dim)};
    long power = ctx.dim() - 2 * r;
    for (size_t bcol = 0; bcol < dim; ++bcol) {
        CohElement lifted =
            pieri_power(CohElement::schubert(ctx, basis[bcol]), kOmega, power);
        for (size_t arow = 0; arow <= bcol; ++arow) {
            mpq_class value = multiply(lifted, CohElement::schubert(ctx, basis[arow]))
                                  .coeff(ctx.top_class());
            out.entries[arow][bcol] = value;
            out.entries[bcol][arow] = value;
        }
    }
    return out;
}

std::vector<CohElement> primitive_subspace(const GrassContext& ctx, long r)
{
    if (r < 0 || 2 * r > ctx.dim())
        throw std::out_of_range("primitive space needs 0 <= 2r <= N");
    long power = ctx.dim() - 2 * r + 1;
    const auto& basis = ctx.basis(r);
    long target_grade = r + power;
    if (target_grade > ctx.dim()) {
        // the target group vanishes (only r = 0 reaches here), so the
        // kernel is all of H^{2r}
        std::vector<CohElement> out;
        for (const Partition& nu : basis)
            out.push_back(CohElement::schubert(ctx, nu));
        return out;
    }
    size_t target_dim = static_cast<size_t>(ctx.betti(target_grade));
    // rows: images of basis classes; kernel of the transpose gives the
    // coefficient vectors annihilated by cup omega^{N-2r+1}
    QMatrix images = zero_matrix(basis.size(), target_dim);
    for (size_t i = 0; i < basis.size(); ++i) {
        CohElement img = pieri_power(CohElement::schubert(ctx, basis[i]), kOmega, power);
        images[i] = img.coordinates();
    }
    QMatrix transposed = zero_matrix(target_dim, basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < target_dim; ++j)
            transposed[j][i] = images[i][j];
    std::vector<CohElement> out;
    for (const QVector& v : kernel_basis(std::move(transposed)))
        out.push_back(CohElement::from_coordinates(ctx, r, v));
    return out;
}

std::vector<CohElement> lefschetz_decompose(const CohElement& a)
{
    const GrassContext& ctx = a.ctx();
    long r = a.grade();
    if (2 * r > ctx.dim())
        throw std::out_of_range("decomposition supported for grades 2r <= N only");
    // columns: bases of omega^q V^{2r-2q} for q = 0..r
    std::vector<std::pair<long, CohElement>> columns;
    for (long q = 0; q <= r; ++q) {
        for (const CohElement& v : primitive_subspace(ctx, r - q))
            columns.emplace_back(q, pieri_power(v, kOmega, q));
    }
    size_t dim = static_cast<size_t>(ctx.betti(r));
    QMatrix m = zero_matrix(dim, columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        QVector coords = columns[c].second.coordinates();
        for (size_t i = 0; i < dim; ++i)
            m[i][c] = coords[i];
    }
    auto x = solve(std::move(m), a.coordinates());
    if (!x)
        throw std::logic_error("Lefschetz decomposition failed to span H^{2r}");
    std::vector<CohElement> components;
    for (long q = 0; q <= r; ++q)
        components.emplace_back(ctx, r);
    for (size_t c = 0; c < columns.size(); ++c) {
        CohElement scaled = columns[c].second;
        scaled *= (*x)[c];
        components[static_cast<size_t>(columns[c].first)] += scaled;
    }
    return components;
}

namespace {

QMatrix gram_matrix(const std::vector<CohElement>& vectors)
{
    size_t dim = vectors.size();
    QMatrix gram = zero_matrix(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j <= i; ++j) {
            mpq_class value = omega_pairing(vectors[i], vectors[j]);
            gram[i][j] = value;
            gram[j][i] = value;
        }
    return gram;
}

// Orthogonal projection of x onto the complement of span(subspace) under
// (.,.)_omega; gram must be the (nondegenerate) Gram matrix of subspace.
CohElement project_off(const CohElement& x, const std::vector<CohElement>& subspace,
                       const QMatrix& gram)
{
    if (subspace.empty())
        return x;
    size_t dim = subspace.size();
    QVector rhs(dim);
    for (size_t i = 0; i < dim; ++i)
        rhs[i] = omega_pairing(subspace[i], x);
    auto coeffs = solve(gram, std::move(rhs));
    if (!coeffs)
        throw std::logic_error("degenerate Gram matrix in projection");
    CohElement out = x;
    for (size_t i = 0; i < dim; ++i) {
        CohElement scaled = subspace[i];
        scaled *= (*coeffs)[i];
        out -= scaled;
    }
    return out;
}

} // namespace

PrimitiveBasis primitive_generators(const GrassContext& ctx)
{
    PrimitiveBasis out{ctx, {}};
    long r_max = std::min<long>(ctx.k(), ctx.dim() / 2);
    for (long r = 2; r <= r_max; ++r) {
        PrimitiveGrade grade{r, {}, {}, CohElement(ctx, r), 0};
        // basis of omega H^{2r-2}
        std::vector<CohElement> lifted;
        for (const Monomial& m : cbar_monomials(ctx, r - 1)) {
            SpecialPoly p;
            p.add_term(m, 1);
            lifted.push_back(pieri_multiply(evaluate_special_poly(ctx, p), kOmega));
        }
        QMatrix lifted_gram = gram_matrix(lifted);
        // ordered monomials without cbar_1; cbar_r comes out last
        for (const Monomial& m : cbar_monomials(ctx, r))
            if (m.exponent(1) == 0)
                grade.monomials.push_back(m);
        for (const Monomial& m : grade.monomials) {
            SpecialPoly p;
            p.add_term(m, 1);
            CohElement x = project_off(evaluate_special_poly(ctx, p), lifted, lifted_gram);
            // Gram-Schmidt inside V^{2r}, where the form is definite
            for (const CohElement& w : grade.basis) {
                mpq_class factor = omega_pairing(x, w) / omega_pairing(w, w);
                CohElement scaled = w;
                scaled *= factor;
                x -= scaled;
            }
            grade.basis.push_back(std::move(x));
        }
        grade.v = grade.basis.back(); // from cbar_r
        grade.v_norm = omega_pairing(grade.v, grade.v);
        out.grades.push_back(std::move(grade));
    }
    return out;
}

mpq_class primitive_norm(const GrassContext& ctx, long r)
{
    if (r < 2 || r > std::min<long>(ctx.k(), ctx.dim() / 2))
        throw std::out_of_range("primitive generators exist for 2 <= r <= min(k, N/2)");
    PrimitiveBasis basis = primitive_generators(ctx);
    return basis.grades[static_cast<size_t>(r - 2)].v_norm;
}

mpq_class v2_norm_closed_form(int n, int k)
{
    long dim = static_cast<long>(k) * (n - k);
    if (dim < 4)
        throw std::domain_error("closed form requires N = k(n-k) >= 4");
    mpz_class kk(k), cc(n - k);
    mpq_class value(grassmannian_degree(n, k) * (kk * kk - 1) * (cc * cc - 1),
                    mpz_class(2) * (dim - 1) * (dim - 1) * (dim - 2) * (dim - 3));
    value.canonicalize();
    return value;
}

int definiteness_sign(const GrassContext& ctx, long r, long q)
{
    if (q < 0 || q > r || 2 * r > ctx.dim())
        throw std::out_of_range("definiteness needs 0 <= q <= r, 2r <= N");
    std::vector<CohElement> basis;
    for (const CohElement& v : primitive_subspace(ctx, r - q))
        basis.push_back(pieri_power(v, kOmega, q));
    int sign = (q + r) % 2 == 0 ? 1 : -1;
    size_t dim = basis.size();
    QMatrix gram = zero_matrix(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j <= i; ++j) {
            mpq_class value = sign * omega_pairing(basis[i], basis[j]);
            gram[i][j] = value;
            gram[j][i] = value;
        }
    for (const mpq_class& minor : leading_principal_minors(gram)) {
        if (minor == 0)
            throw std::logic_error("degenerate restriction of the form");
        if (minor < 0)
            throw std::logic_error("Sylvester certificate failed on omega^q V^{2r-2q}");
    }
    return sign;
}

} // namespace grasscalc
