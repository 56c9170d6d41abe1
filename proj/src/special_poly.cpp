#include "grasscalc/special_poly.hpp"

#include <stdexcept>

namespace grasscalc {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents))
{
    for (int e : exps_)
        if (e < 0)
            throw std::invalid_argument("monomial exponents must be nonnegative");
    while (!exps_.empty() && exps_.back() == 0)
        exps_.pop_back();
}

Monomial Monomial::generator(int index)
{
    if (index < 1)
        throw std::invalid_argument("generator index must be >= 1");
    std::vector<int> exps(static_cast<size_t>(index), 0);
    exps.back() = 1;
    return Monomial(std::move(exps));
}

int Monomial::exponent(int index) const
{
    if (index < 1 || index > static_cast<int>(exps_.size()))
        return 0;
    return exps_[static_cast<size_t>(index - 1)];
}

long Monomial::weight() const
{
    long w = 0;
    for (size_t t = 0; t < exps_.size(); ++t)
        w += static_cast<long>(t + 1) * exps_[t];
    return w;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    std::vector<int> exps(std::max(exps_.size(), other.exps_.size()), 0);
    for (size_t t = 0; t < exps_.size(); ++t)
        exps[t] += exps_[t];
    for (size_t t = 0; t < other.exps_.size(); ++t)
        exps[t] += other.exps_[t];
    return Monomial(std::move(exps));
}

std::string Monomial::to_string(const std::string& symbol) const
{
    if (is_constant())
        return "1";
    std::string out;
    for (size_t t = 0; t < exps_.size(); ++t) {
        if (exps_[t] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += symbol + "_" + std::to_string(t + 1);
        if (exps_[t] > 1)
            out += "^" + std::to_string(exps_[t]);
    }
    return out;
}

bool MonomialDescLex::operator()(const Monomial& a, const Monomial& b) const
{
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    size_t len = std::max(x.size(), y.size());
    for (size_t t = 0; t < len; ++t) {
        int xe = t < x.size() ? x[t] : 0;
        int ye = t < y.size() ? y[t] : 0;
        if (xe != ye)
            return xe > ye;
    }
    return false;
}

SpecialPoly SpecialPoly::constant(const mpz_class& c)
{
    SpecialPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

SpecialPoly SpecialPoly::generator(int index)
{
    SpecialPoly p;
    p.add_term(Monomial::generator(index), 1);
    return p;
}

long SpecialPoly::homogeneous_weight() const
{
    long w = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            w = m.weight();
            first = false;
        } else if (m.weight() != w) {
            throw std::logic_error("polynomial is not homogeneous");
        }
    }
    return w;
}

void SpecialPoly::add_term(const Monomial& m, const mpz_class& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

SpecialPoly& SpecialPoly::operator+=(const SpecialPoly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

SpecialPoly& SpecialPoly::operator-=(const SpecialPoly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

SpecialPoly SpecialPoly::operator+(const SpecialPoly& other) const
{
    SpecialPoly out = *this;
    out += other;
    return out;
}

SpecialPoly SpecialPoly::operator-(const SpecialPoly& other) const
{
    SpecialPoly out = *this;
    out -= other;
    return out;
}

SpecialPoly SpecialPoly::operator*(const SpecialPoly& other) const
{
    SpecialPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

SpecialPoly SpecialPoly::operator-() const
{
    SpecialPoly out;
    for (const auto& [m, c] : terms_)
        out.add_term(m, -c);
    return out;
}

std::string SpecialPoly::to_string(const std::string& symbol) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        mpz_class abs_c = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (abs_c != 1 || m.is_constant()) {
            out += abs_c.get_str();
            if (!m.is_constant())
                out += "*";
        }
        if (!m.is_constant())
            out += m.to_string(symbol);
    }
    return out;
}

SpecialPoly chern_generator_expansion(int index)
{
    if (index < 0)
        return SpecialPoly{};
    if (index == 0)
        return SpecialPoly::constant(1);
    // g_r = -sum_{q=1..r} x_q g_{r-q}, g_0 = 1; the same triangular
    // substitution inverts itself, so one table serves both directions.
    std::vector<SpecialPoly> table;
    table.push_back(SpecialPoly::constant(1));
    for (int r = 1; r <= index; ++r) {
        SpecialPoly g;
        for (int q = 1; q <= r; ++q)
            g -= SpecialPoly::generator(q) * table[static_cast<size_t>(r - q)];
        table.push_back(std::move(g));
    }
    return table[static_cast<size_t>(index)];
}

SpecialPoly chern_convert(const SpecialPoly& p, ChernDirection)
{
    SpecialPoly out;
    for (const auto& [m, c] : p.terms()) {
        SpecialPoly term = SpecialPoly::constant(c);
        for (size_t t = 0; t < m.exponents().size(); ++t) {
            int e = m.exponents()[t];
            if (e == 0)
                continue;
            SpecialPoly image = chern_generator_expansion(static_cast<int>(t + 1));
            for (int i = 0; i < e; ++i)
                term = term * image;
        }
        out += term;
    }
    return out;
}

SpecialPoly complete_homogeneous(int j, int k)
{
    if (j < 0)
        return SpecialPoly{};
    std::vector<SpecialPoly> h;
    h.push_back(SpecialPoly::constant(1));
    for (int r = 1; r <= j; ++r) {
        SpecialPoly next;
        for (int p = 1; p <= std::min(r, k); ++p)
            next -= SpecialPoly::generator(p) * h[static_cast<size_t>(r - p)];
        h.push_back(std::move(next));
    }
    return h[static_cast<size_t>(j)];
}

} // namespace grasscalc
