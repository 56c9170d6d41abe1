#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grasscalc {

/// Radicand outside the supported range (square-free, d % 4 in {2, 3}).
struct unsupported_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct SquareRoot {
    bool is_square = false;
    mpz_class root; // valid when is_square
};

/// Exact integer square test; negative inputs are never squares.
SquareRoot is_perfect_square(const mpz_class& v);

/// a/b in lowest terms is a rational square iff numerator and denominator
/// are both integer squares.
bool is_rational_square(const mpq_class& q);

struct SquareFreeDecomposition {
    mpz_class alpha; // square-free part
    mpz_class u;     // v = alpha * u^2
    bool complete;   // false when trial division could not finish the job
};

/// Writes v = alpha * u^2 with alpha square-free, by trial division up to
/// `trial_bound`. When the unfactored cofactor cannot be certified, the
/// result keeps it inside alpha and reports complete = false.
SquareFreeDecomposition square_free_part(const mpz_class& v,
                                         unsigned long trial_bound = 1000000);

struct PellSolution {
    mpz_class d;
    mpz_class y;
    mpz_class x; // y^2 - d x^2 = 1, minimal x > 0
};

/// Fundamental solution via the continued fraction of sqrt(d).
PellSolution pell_fundamental(const mpz_class& d);

/// a + b sqrt(d) in Z[sqrt(d)].
class QuadraticInteger {
public:
    QuadraticInteger(mpz_class d, mpz_class a, mpz_class b)
        : d_(std::move(d)), a_(std::move(a)), b_(std::move(b))
    {
    }

    const mpz_class& d() const { return d_; }
    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }

    mpz_class norm() const { return a_ * a_ - d_ * b_ * b_; }
    QuadraticInteger conjugate() const { return {d_, a_, -b_}; }
    QuadraticInteger operator-() const { return {d_, -a_, -b_}; }
    QuadraticInteger operator*(const QuadraticInteger& other) const;

    std::string to_string() const; // "8+3*sqrt(7)"

    friend bool operator==(const QuadraticInteger&, const QuadraticInteger&) = default;

private:
    mpz_class d_, a_, b_;
};

/// Fundamental unit of Z[sqrt(d)] for square-free d with d % 4 != 1 (then
/// Z[sqrt(d)] is the full ring of integers). Other d: unsupported_error.
QuadraticInteger fundamental_unit(const mpz_class& d);

struct NormOrbitSet {
    mpz_class d;
    mpz_class target;
    QuadraticInteger unit;                    // fundamental unit of Z[sqrt(d)]
    std::vector<QuadraticInteger> generators; // one per +-orbit
};

/// All orbits of {x in Z[sqrt(d)] : N(x) = target} under multiplication by
/// +- powers of the norm-one unit subgroup (the fundamental unit itself
/// when its norm is 1, its square otherwise), found by a bounded
/// coefficient search and merged by explicit unit multiplication.
NormOrbitSet norm_orbit_generators(const mpz_class& d, const mpz_class& target);

/// First `count` solutions (xi, eta) of xi^2 - d eta^2 = target with both
/// coordinates > 1, in increasing order of eta.
std::vector<std::pair<mpz_class, mpz_class>>
enumerate_norm_solutions(const mpz_class& d, const mpz_class& target, int count);

struct Prop46Candidate {
    mpz_class xi, eta;
    mpz_class value; // xi^2 eta^2 + 2
    bool solvable;   // value == 3 v^2 for some integer v
    mpz_class v;     // the witness when solvable
};

struct Prop46Result {
    int k = 0;
    std::vector<Prop46Candidate> candidates; // the probed solutions
    bool all_fail = false;
    mpz_class next_xi, next_eta; // first untested solution
    mpz_class bound;             // 2c > (next_xi * next_eta)^2 when all fail
};

/// Probes the norm-equation solutions behind the k = 3 / k = 7 case
/// analysis: tests xi^2 eta^2 + 2 = 3 v^2 on the first `probe` solutions
/// and reports the resulting lower bound on 2c when all of them fail.
Prop46Result prop46_bound(int k, int probe);

struct QScanHit {
    long x = 0;
    long z = 0;
    mpz_class y;             // Q(a,b,x,z) = y^2
    bool degenerate = false; // x == 1 or z == 1, where Q = 0

    friend bool operator==(const QScanHit&, const QScanHit&) = default;
};

/// Brute-force scan of y^2 = (a^2-1)(b^2-1)(x^2-1)(z^2-1) with az = bx,
/// x <= x_max. A desk-scale witness that the hit list is finite.
std::vector<QScanHit> scan_q_squares(long a, long b, long x_max, int jobs = 1);

} // namespace grasscalc
