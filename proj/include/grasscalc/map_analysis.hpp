#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "grasscalc/context.hpp"

namespace grasscalc {

/// A continuous-map question G_{n,k} -> G_{m,l} between Grassmannians of
/// equal dimension N = k(n-k) = l(m-l), over the same (skew-)field.
struct MapProblem {
    GrassContext source; // G_{n,k}
    GrassContext target; // G_{m,l}

    MapProblem(GrassContext src, GrassContext dst);

    int n() const { return source.n(); }
    int k() const { return source.k(); }
    int m() const { return target.n(); }
    int l() const { return target.k(); }
    long N() const { return source.dim(); }
    Field field() const { return source.field(); }
    bool identical_pair() const { return n() == m() && k() == l(); }
};

/// All (n, m) with 2k <= n <= n_max and l(m-l) = k(n-k), l <= m/2.
/// Canonical orientation 1 <= l <= k.
std::vector<std::pair<int, int>> dimension_matches(int k, int l, int n_max);

/// deg G_{n,k} / deg G_{m,l} in lowest terms.
mpq_class degree_ratio(const MapProblem& problem);

/// lambda^N * degree_ratio: the only possible degree once f* scales the
/// H^2 generator by lambda. Admissible only when integral.
mpq_class candidate_degree(const MapProblem& problem, long lambda);
bool is_integral(const mpq_class& q);

/// Coefficient of lambda^{2j} in lambda_j^2, namely
/// degree_ratio * (u_j, u_j) / (v_j, v_j), with u_j primitive in the
/// target and v_j in the source. A nonzero-degree map needs this to be a
/// rational square. Requires 2 <= j <= l.
mpq_class lambda_j_squared(const MapProblem& problem, int j);

struct QInvariant {
    mpz_class value; // (l^2-1)(k^2-1)((m-l)^2-1)((n-k)^2-1)
    bool is_square = false;
    mpz_class root; // when is_square
};

/// The perfect-square obstruction; requires l >= 2 (for l = 1 the target
/// is a projective space and the test is vacuous).
QInvariant q_invariant(const MapProblem& problem);

enum class Verdict { ForcedZero, UnconstrainedByTheseTests, ProjectiveTarget };

std::string verdict_name(Verdict v);

struct CandidateDegree {
    long lambda = 0;
    mpq_class value;
    bool admissible = false; // integral
};

struct LambdaSquareEntry {
    int j = 0;
    long cohomology_degree = 0; // of u_j: 2j over C, 4j over H
    mpq_class value;            // coefficient of lambda^{2j}
    bool is_square = false;     // square in Q
};

/// Consolidated verdict for one map problem. Every certificate can be
/// recomputed from the stored inputs (n, k, m, l, field, lambda_max).
struct MapAnalysisReport {
    int n = 0, k = 0, m = 0, l = 0;
    Field field = Field::Complex;
    long N = 0;
    long lambda_max = 0;

    Verdict verdict = Verdict::UnconstrainedByTheseTests;
    std::vector<std::string> reasons;

    std::optional<QInvariant> q; // absent when l = 1
    mpq_class ratio;
    std::vector<CandidateDegree> candidates;      // lambda in [-L, L]
    std::vector<LambdaSquareEntry> lambda_squares; // j = 2..l
    bool degree_one_possible = false;              // (m,l) == (n,k), per the
                                                   // degree +-1 rigidity
};

MapAnalysisReport analyze_map(const MapProblem& problem, long lambda_max = 16);

} // namespace grasscalc
