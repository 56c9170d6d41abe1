#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace grasscalc {

/// Exponent vector of a monomial in graded symbols x_1, x_2, ...; entry t
/// is the exponent of x_{t+1}, trailing zeros stripped. The symbols stand
/// for either the special Schubert classes (= Chern classes of the
/// quotient bundle) or the Chern classes of the tautological bundle,
/// depending on context.
class Monomial {
public:
    Monomial() = default; // constant monomial
    explicit Monomial(std::vector<int> exponents);
    static Monomial generator(int index); // x_index, index >= 1

    const std::vector<int>& exponents() const { return exps_; }
    int exponent(int index) const; // of x_index, 1-based
    long weight() const;           // sum of index * exponent
    bool is_constant() const { return exps_.empty(); }

    Monomial operator*(const Monomial& other) const;
    std::string to_string(const std::string& symbol) const; // e.g. "s_1^2*s_3"

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<int> exps_;
};

/// Decreasing lexicographic order on exponent vectors; pads with zeros on
/// the right, so e.g. (0,3) > (0,1,0,1) > (0,0,2) > (0,0,0,0,0,1).
struct MonomialDescLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Integer-coefficient polynomial in the graded symbols.
class SpecialPoly {
public:
    SpecialPoly() = default;
    static SpecialPoly constant(const mpz_class& c);
    static SpecialPoly generator(int index);

    const std::map<Monomial, mpz_class, MonomialDescLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Common weight of all monomials; throws std::logic_error when the
    /// polynomial is not homogeneous. Zero polynomial reports weight 0.
    long homogeneous_weight() const;

    void add_term(const Monomial& m, const mpz_class& c);

    SpecialPoly& operator+=(const SpecialPoly& other);
    SpecialPoly& operator-=(const SpecialPoly& other);
    SpecialPoly operator+(const SpecialPoly& other) const;
    SpecialPoly operator-(const SpecialPoly& other) const;
    SpecialPoly operator*(const SpecialPoly& other) const;
    SpecialPoly operator-() const;

    std::string to_string(const std::string& symbol) const;

    friend bool operator==(const SpecialPoly&, const SpecialPoly&) = default;

private:
    std::map<Monomial, mpz_class, MonomialDescLex> terms_;
};

enum class ChernDirection {
    TautToQuotient, // express c_i (tautological) in the cbar_j (quotient)
    QuotientToTaut, // express cbar_i in the c_j
};

/// Expansion of the degree-i generator of one presentation in the symbols
/// of the other, from the recursion sum_{p+q=r} c_p cbar_q = 0 (r >= 1).
/// Both directions use the same recursion, so the result only depends on i.
SpecialPoly chern_generator_expansion(int index);

/// Applies the generator expansion to every symbol of p. Composing the two
/// directions is the identity; the direction flag documents intent.
SpecialPoly chern_convert(const SpecialPoly& p, ChernDirection direction);

/// h_j as a polynomial in c_1..c_k via h_j = -sum_{p=1..min(j,k)} c_p h_{j-p}.
SpecialPoly complete_homogeneous(int j, int k);

} // namespace grasscalc
