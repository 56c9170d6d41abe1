#include "grasscalc/map_analysis.hpp"

#include <stdexcept>

#include "grasscalc/diophantine.hpp"
#include "grasscalc/lefschetz.hpp"
#include "grasscalc/ring.hpp"

namespace grasscalc {

MapProblem::MapProblem(GrassContext src, GrassContext dst)
    : source(std::move(src)), target(std::move(dst))
{
    if (source.dim() != target.dim())
        throw std::invalid_argument("dimension mismatch: " + source.name() + " has N = " +
                                    std::to_string(source.dim()) + ", " + target.name() +
                                    " has N = " + std::to_string(target.dim()));
    if (source.field() != target.field())
        throw std::invalid_argument("source and target must share the ground field");
}

std::vector<std::pair<int, int>> dimension_matches(int k, int l, int n_max)
{
    if (l < 1 || l > k)
        throw std::domain_error("canonical orientation requires 1 <= l <= k");
    if (n_max < 2 * k)
        throw std::domain_error("n_max must be at least 2k");
    std::vector<std::pair<int, int>> out;
    for (int n = 2 * k; n <= n_max; ++n) {
        long dim = static_cast<long>(k) * (n - k);
        if (dim % l != 0)
            continue;
        long m = l + dim / l;
        if (2 * l > m)
            continue;
        out.emplace_back(n, static_cast<int>(m));
    }
    return out;
}

mpq_class degree_ratio(const MapProblem& problem)
{
    mpq_class ratio(grassmannian_degree(problem.n(), problem.k()),
                    grassmannian_degree(problem.m(), problem.l()));
    ratio.canonicalize();
    return ratio;
}

bool is_integral(const mpq_class& q)
{
    mpq_class canon = q;
    canon.canonicalize();
    return canon.get_den() == 1;
}

mpq_class candidate_degree(const MapProblem& problem, long lambda)
{
    mpq_class power(1);
    mpq_class base(lambda);
    for (long i = 0; i < problem.N(); ++i)
        power *= base;
    mpq_class value = power * degree_ratio(problem);
    value.canonicalize();
    return value;
}

mpq_class lambda_j_squared(const MapProblem& problem, int j)
{
    if (j < 2 || j > problem.l())
        throw std::out_of_range("lambda_j is defined for 2 <= j <= l");
    mpq_class u_norm = primitive_norm(problem.target, j);
    mpq_class v_norm = primitive_norm(problem.source, j);
    mpq_class value = degree_ratio(problem) * u_norm / v_norm;
    value.canonicalize();
    return value;
}

QInvariant q_invariant(const MapProblem& problem)
{
    if (problem.l() < 2)
        throw std::domain_error("Q test is vacuous for projective targets (l = 1)");
    auto square_minus_one = [](long v) -> mpz_class { return mpz_class(v) * v - 1; };
    QInvariant q;
    q.value = square_minus_one(problem.l()) * square_minus_one(problem.k()) *
              square_minus_one(problem.m() - problem.l()) *
              square_minus_one(problem.n() - problem.k());
    SquareRoot root = is_perfect_square(q.value);
    q.is_square = root.is_square;
    q.root = root.root;
    return q;
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::ForcedZero:
        return "forced-zero";
    case Verdict::UnconstrainedByTheseTests:
        return "unconstrained-by-these-tests";
    case Verdict::ProjectiveTarget:
        return "projective-target";
    }
    return "?";
}

MapAnalysisReport analyze_map(const MapProblem& problem, long lambda_max)
{
    if (lambda_max < 0)
        throw std::domain_error("lambda scan bound must be nonnegative");
    MapAnalysisReport report;
    report.n = problem.n();
    report.k = problem.k();
    report.m = problem.m();
    report.l = problem.l();
    report.field = problem.field();
    report.N = problem.N();
    report.lambda_max = lambda_max;
    report.ratio = degree_ratio(problem);
    report.degree_one_possible = problem.identical_pair();

    bool forced_zero = false;
    if (problem.k() < problem.l()) {
        forced_zero = true;
        report.reasons.push_back("k < l <= m/2 forces degree zero");
    }
    if (problem.l() >= 2) {
        report.q = q_invariant(problem);
        if (!report.q->is_square) {
            forced_zero = true;
            report.reasons.push_back("Q = " + report.q->value.get_str() +
                                     " is not a perfect square");
        }
        long scale = problem.source.degree_scale();
        // v_j exists in the source only for j <= k; beyond that the norm
        // comparison has no content (k < l is already covered by the
        // forced-zero rule above)
        for (int j = 2; j <= std::min(problem.l(), problem.k()); ++j) {
            LambdaSquareEntry entry;
            entry.j = j;
            entry.cohomology_degree = scale * j;
            entry.value = lambda_j_squared(problem, j);
            entry.is_square = is_rational_square(entry.value);
            if (!entry.is_square) {
                forced_zero = true;
                report.reasons.push_back("lambda_" + std::to_string(j) +
                                         "^2 coefficient " + entry.value.get_str() +
                                         " is not a rational square");
            }
            report.lambda_squares.push_back(std::move(entry));
        }
    }

    for (long lambda = -lambda_max; lambda <= lambda_max; ++lambda) {
        CandidateDegree cand;
        cand.lambda = lambda;
        cand.value = candidate_degree(problem, lambda);
        cand.admissible = is_integral(cand.value);
        report.candidates.push_back(std::move(cand));
    }

    if (forced_zero)
        report.verdict = Verdict::ForcedZero;
    else if (problem.l() == 1)
        report.verdict = Verdict::ProjectiveTarget;
    else
        report.verdict = Verdict::UnconstrainedByTheseTests;
    return report;
}

} // namespace grasscalc
