#include "grasscalc/ring.hpp"

#include <stdexcept>

namespace grasscalc {

CohElement::CohElement(GrassContext ctx, long grade) : ctx_(std::move(ctx)), grade_(grade)
{
    if (grade < 0)
        throw std::out_of_range("negative grade");
}

CohElement CohElement::unit(const GrassContext& ctx)
{
    CohElement e(ctx, 0);
    e.set_coeff(Partition{}, 1);
    return e;
}

CohElement CohElement::schubert(const GrassContext& ctx, const Partition& nu)
{
    if (!ctx.in_box(nu))
        throw std::domain_error("partition " + nu.to_string() + " outside the box of " +
                                ctx.name());
    CohElement e(ctx, nu.weight());
    e.set_coeff(nu, 1);
    return e;
}

CohElement CohElement::schubert(const GrassContext& ctx, const IndexSet& i)
{
    return schubert(ctx, ctx.to_partition(i));
}

mpq_class CohElement::coeff(const Partition& nu) const
{
    auto it = terms_.find(nu);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void CohElement::set_coeff(const Partition& nu, const mpq_class& c)
{
    if (c == 0) {
        terms_.erase(nu);
        return;
    }
    if (nu.weight() != grade_)
        throw std::invalid_argument("coefficient on partition of wrong weight");
    terms_[nu] = c;
}

void CohElement::add_coeff(const Partition& nu, const mpq_class& c)
{
    if (c == 0)
        return;
    if (nu.weight() != grade_)
        throw std::invalid_argument("coefficient on partition of wrong weight");
    auto it = terms_.find(nu);
    if (it == terms_.end()) {
        terms_.emplace(nu, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

CohElement& CohElement::operator+=(const CohElement& other)
{
    require_same_ring(ctx_, other.ctx_);
    if (grade_ != other.grade_)
        throw std::invalid_argument("grade mismatch in addition");
    for (const auto& [nu, c] : other.terms_)
        add_coeff(nu, c);
    return *this;
}

CohElement& CohElement::operator-=(const CohElement& other)
{
    require_same_ring(ctx_, other.ctx_);
    if (grade_ != other.grade_)
        throw std::invalid_argument("grade mismatch in subtraction");
    for (const auto& [nu, c] : other.terms_)
        add_coeff(nu, -c);
    return *this;
}

CohElement& CohElement::operator*=(const mpq_class& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [nu, c] : terms_)
        c *= scalar;
    return *this;
}

CohElement CohElement::operator+(const CohElement& other) const
{
    CohElement out = *this;
    out += other;
    return out;
}

CohElement CohElement::operator-(const CohElement& other) const
{
    CohElement out = *this;
    out -= other;
    return out;
}

CohElement CohElement::operator-() const
{
    CohElement out = *this;
    for (auto& [nu, c] : out.terms_)
        c = -c;
    return out;
}

QVector CohElement::coordinates() const
{
    const auto& basis = ctx_.basis(grade_);
    QVector coords(basis.size(), mpq_class(0));
    for (const auto& [nu, c] : terms_)
        coords[static_cast<size_t>(ctx_.basis_index(nu))] = c;
    return coords;
}

CohElement CohElement::from_coordinates(const GrassContext& ctx, long grade,
                                        const QVector& coords)
{
    const auto& basis = ctx.basis(grade);
    if (coords.size() != basis.size())
        throw std::invalid_argument("coordinate vector has wrong length");
    CohElement e(ctx, grade);
    for (size_t i = 0; i < basis.size(); ++i)
        e.set_coeff(basis[i], coords[i]);
    return e;
}

std::string CohElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [nu, c] : terms_) {
        mpq_class abs_c = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (abs_c != 1)
            out += abs_c.get_str() + "*";
        out += "s(" + nu.to_string() + ")";
    }
    return out;
}

namespace {

// mu in the box with mu/lambda a horizontal strip: interleaving
// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
void horizontal_strips(const Partition& lambda, int k, int cols, int row,
                       long remaining, std::vector<int>& prefix,
                       std::vector<Partition>& out)
{
    if (row == k) {
        if (remaining == 0)
            out.emplace_back(prefix);
        return;
    }
    int lo = lambda.part(row);
    int hi = std::min(row == 0 ? cols : lambda.part(row - 1),
                      lo + static_cast<int>(remaining));
    for (int p = hi; p >= lo; --p) {
        prefix.push_back(p);
        horizontal_strips(lambda, k, cols, row + 1, remaining - (p - lo), prefix, out);
        prefix.pop_back();
    }
}

mpz_class factorial(long n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class to_integer(const mpq_class& q, const char* what)
{
    mpq_class canon = q;
    canon.canonicalize();
    if (canon.get_den() != 1)
        throw std::logic_error(std::string(what) + ": expected an integer, got " +
                               canon.get_str());
    return canon.get_num();
}

} // namespace

CohElement pieri_multiply(const CohElement& a, SpecialClass s)
{
    const GrassContext& ctx = a.ctx();
    if (s.index < 1 || s.index > ctx.cols())
        throw std::domain_error("special class index must lie in [1, n-k]");
    CohElement out(ctx, a.grade() + s.index);
    std::vector<Partition> strips;
    std::vector<int> prefix;
    for (const auto& [lambda, c] : a.terms()) {
        strips.clear();
        prefix.clear();
        horizontal_strips(lambda, ctx.k(), ctx.cols(), 0, s.index, prefix, strips);
        for (const Partition& mu : strips)
            out.add_coeff(mu, c);
    }
    return out;
}

CohElement pieri_power(const CohElement& a, SpecialClass s, long exponent)
{
    if (exponent < 0)
        throw std::domain_error("negative Pieri exponent");
    CohElement out = a;
    for (long i = 0; i < exponent; ++i)
        out = pieri_multiply(out, s);
    return out;
}

SpecialPoly giambelli_expand(const GrassContext& ctx, const Partition& nu)
{
    if (!ctx.in_box(nu))
        throw std::domain_error("partition " + nu.to_string() + " outside the box of " +
                                ctx.name());
    int len = nu.length();
    if (len == 0)
        return SpecialPoly::constant(1);
    // det(cbar_{nu_t - t + s}) expanded over permutations; every entry is a
    // single symbol (or 0/1), so each permutation contributes one monomial.
    std::vector<int> perm(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        perm[static_cast<size_t>(i)] = i;
    SpecialPoly out;
    // iterate permutations with parity tracking via sorted start
    std::vector<int> p = perm;
    auto parity_of = [](std::vector<int> q) {
        int sign = 1;
        for (size_t i = 0; i < q.size(); ++i) {
            while (q[i] != static_cast<int>(i)) {
                std::swap(q[i], q[static_cast<size_t>(q[i])]);
                sign = -sign;
            }
        }
        return sign;
    };
    do {
        std::vector<int> exps;
        bool zero = false;
        for (int t = 0; t < len && !zero; ++t) {
            int idx = nu.part(t) - (t + 1) + (p[static_cast<size_t>(t)] + 1);
            if (idx < 0) {
                zero = true;
            } else if (idx > 0) {
                if (static_cast<size_t>(idx) > exps.size())
                    exps.resize(static_cast<size_t>(idx), 0);
                exps[static_cast<size_t>(idx - 1)] += 1;
            }
        }
        if (!zero)
            out.add_term(Monomial(std::move(exps)), parity_of(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

CohElement apply_special_poly(const CohElement& a, const SpecialPoly& p)
{
    const GrassContext& ctx = a.ctx();
    CohElement out(ctx, a.grade() + p.homogeneous_weight());
    for (const auto& [m, c] : p.terms()) {
        bool vanishes = false; // symbols of index > n-k are zero in the ring
        for (size_t t = 0; t < m.exponents().size(); ++t)
            if (m.exponents()[t] > 0 && static_cast<long>(t) + 1 > ctx.cols())
                vanishes = true;
        if (vanishes)
            continue;
        CohElement term = a;
        for (size_t t = 0; t < m.exponents().size(); ++t)
            term = pieri_power(term, SpecialClass{static_cast<int>(t + 1)},
                               m.exponents()[t]);
        term *= mpq_class(c);
        out += term;
    }
    return out;
}

CohElement evaluate_special_poly(const GrassContext& ctx, const SpecialPoly& p)
{
    return apply_special_poly(CohElement::unit(ctx), p);
}

CohElement multiply(const CohElement& a, const CohElement& b)
{
    require_same_ring(a.ctx(), b.ctx());
    CohElement out(a.ctx(), a.grade() + b.grade());
    for (const auto& [mu, c] : b.terms()) {
        CohElement term = apply_special_poly(a, giambelli_expand(a.ctx(), mu));
        term *= c;
        out += term;
    }
    return out;
}

mpq_class duality_pair(const CohElement& a, const CohElement& b)
{
    require_same_ring(a.ctx(), b.ctx());
    if (a.grade() + b.grade() != a.ctx().dim())
        return 0;
    return multiply(a, b).coeff(a.ctx().top_class());
}

mpz_class schubert_degree_formula(const GrassContext& ctx, const IndexSet& i)
{
    ctx.to_partition(i); // validity check
    long r = i.weight();
    const auto& idx = i.indices();
    mpz_class num = factorial(r);
    for (size_t t = 0; t < idx.size(); ++t)
        for (size_t s = t + 1; s < idx.size(); ++s)
            num *= idx[s] - idx[t];
    mpz_class den = 1;
    for (int ij : idx)
        den *= factorial(ij - 1);
    return to_integer(mpq_class(num, den), "schubert_degree_formula");
}

mpz_class schubert_degree_pieri(const GrassContext& ctx, const IndexSet& i)
{
    CohElement cls = CohElement::schubert(ctx, i);
    CohElement top = pieri_power(cls, SpecialClass{1}, i.weight());
    return to_integer(top.coeff(ctx.top_class()), "schubert_degree_pieri");
}

mpz_class grassmannian_degree(int n, int k)
{
    long dim = static_cast<long>(k) * (n - k);
    mpz_class num = factorial(dim);
    for (int j = 1; j < k; ++j)
        num *= factorial(j);
    mpz_class den = 1;
    for (int j = n - k; j < n; ++j)
        den *= factorial(j);
    return to_integer(mpq_class(num, den), "grassmannian_degree");
}

mpz_class grassmannian_degree(const GrassContext& ctx)
{
    return grassmannian_degree(ctx.n(), ctx.k());
}

mpz_class pair_degree(const GrassContext& ctx, const IndexSet& i, const IndexSet& j)
{
    long q = i.weight() + j.weight() - ctx.dim();
    if (q < 0)
        return 0;
    CohElement prod = multiply(CohElement::schubert(ctx, i), CohElement::schubert(ctx, j));
    CohElement top = pieri_power(prod, SpecialClass{1}, q);
    return to_integer(top.coeff(ctx.top_class()), "pair_degree");
}

CohElement relation_check(const GrassContext& ctx, int j)
{
    if (j <= ctx.cols() || j > ctx.n())
        throw std::out_of_range("relation h_j is only in the ideal for n-k < j <= n");
    // Chern classes of the tautological bundle as ring elements, then the
    // h_j recursion carried out with genuine ring products.
    std::vector<CohElement> c;
    c.push_back(CohElement::unit(ctx));
    for (int p = 1; p <= ctx.k(); ++p)
        c.push_back(evaluate_special_poly(ctx, chern_generator_expansion(p)));
    std::vector<CohElement> h;
    h.push_back(CohElement::unit(ctx));
    for (int r = 1; r <= j; ++r) {
        CohElement next(ctx, r);
        for (int p = 1; p <= std::min(r, ctx.k()); ++p)
            next -= multiply(c[static_cast<size_t>(p)], h[static_cast<size_t>(r - p)]);
        h.push_back(std::move(next));
    }
    return h[static_cast<size_t>(j)];
}

std::vector<Monomial> cbar_monomials(const GrassContext& ctx, long r)
{
    if (r < 0 || r > ctx.dim())
        throw std::out_of_range("grade " + std::to_string(r) + " outside [0, N]");
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<size_t>(ctx.k()), 0);
    // choose exponents from symbol 1 upwards; emit in decreasing lex order
    auto rec = [&](auto&& self, int sym, long remaining) -> void {
        if (sym > ctx.k()) {
            if (remaining == 0)
                out.emplace_back(exps);
            return;
        }
        int cap = static_cast<int>(std::min<long>(ctx.cols(), remaining / sym));
        for (int e = cap; e >= 0; --e) {
            exps[static_cast<size_t>(sym - 1)] = e;
            self(self, sym + 1, remaining - static_cast<long>(e) * sym);
        }
        exps[static_cast<size_t>(sym - 1)] = 0;
    };
    rec(rec, 1, r);
    return out;
}

QMatrix cbar_monomial_to_schubert(const GrassContext& ctx, long r)
{
    std::vector<Monomial> monomials = cbar_monomials(ctx, r);
    QMatrix m;
    m.reserve(monomials.size());
    for (const Monomial& mono : monomials) {
        SpecialPoly p;
        p.add_term(mono, 1);
        m.push_back(evaluate_special_poly(ctx, p).coordinates());
    }
    return m;
}

} // namespace grasscalc
