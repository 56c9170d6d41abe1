#include "grasscalc/json_io.hpp"

namespace grasscalc {

json to_json(const mpz_class& v)
{
    return v.get_str();
}

json to_json(const mpq_class& q)
{
    mpq_class canon = q;
    canon.canonicalize();
    return json{{"num", canon.get_num().get_str()}, {"den", canon.get_den().get_str()}};
}

mpz_class mpz_from_json(const json& j)
{
    return mpz_class(j.get<std::string>());
}

mpq_class mpq_from_json(const json& j)
{
    mpq_class q(mpz_class(j.at("num").get<std::string>()),
                mpz_class(j.at("den").get<std::string>()));
    q.canonicalize();
    return q;
}

json to_json(const Partition& nu)
{
    return json(nu.parts());
}

json to_json(const CohElement& e)
{
    json terms = json::array();
    for (const auto& [nu, c] : e.terms()) {
        mpq_class canon = c;
        canon.canonicalize();
        terms.push_back({{"partition", to_json(nu)},
                         {"numerator", canon.get_num().get_str()},
                         {"denominator", canon.get_den().get_str()}});
    }
    return json{{"grade", e.grade()},
                {"cohomology_degree", e.ctx().degree_scale() * e.grade()},
                {"terms", std::move(terms)}};
}

CohElement coh_from_json(const GrassContext& ctx, const json& j)
{
    CohElement e(ctx, j.at("grade").get<long>());
    for (const auto& term : j.at("terms")) {
        Partition nu(term.at("partition").get<std::vector<int>>());
        mpq_class c(mpz_class(term.at("numerator").get<std::string>()),
                    mpz_class(term.at("denominator").get<std::string>()));
        c.canonicalize();
        e.add_coeff(nu, c);
    }
    return e;
}

json to_json(const QMatrix& m)
{
    json rows = json::array();
    for (const auto& row : m) {
        json cells = json::array();
        for (const auto& value : row)
            cells.push_back(to_json(value));
        rows.push_back(std::move(cells));
    }
    return rows;
}

QMatrix qmatrix_from_json(const json& j)
{
    QMatrix m;
    for (const auto& row : j) {
        QVector r;
        for (const auto& cell : row)
            r.push_back(mpq_from_json(cell));
        m.push_back(std::move(r));
    }
    return m;
}

json to_json(const PairingMatrix& m)
{
    json basis = json::array();
    for (const Partition& nu : m.basis)
        basis.push_back(to_json(nu));
    return json{{"n", m.ctx.n()},
                {"k", m.ctx.k()},
                {"field", field_name(m.ctx.field())},
                {"grade", m.grade},
                {"cohomology_degree", m.ctx.degree_scale() * m.grade},
                {"basis", std::move(basis)},
                {"entries", to_json(m.entries)}};
}

json to_json(const MapAnalysisReport& report)
{
    json candidates = json::array();
    for (const auto& cand : report.candidates)
        candidates.push_back({{"lambda", cand.lambda},
                              {"value", to_json(cand.value)},
                              {"admissible", cand.admissible}});
    json lambda_squares = json::array();
    for (const auto& entry : report.lambda_squares)
        lambda_squares.push_back({{"j", entry.j},
                                  {"cohomology_degree", entry.cohomology_degree},
                                  {"value", to_json(entry.value)},
                                  {"is_square", entry.is_square}});
    json q;
    if (report.q)
        q = json{{"value", report.q->value.get_str()}, {"is_square", report.q->is_square}};
    return json{{"source", {{"n", report.n}, {"k", report.k}}},
                {"target", {{"m", report.m}, {"l", report.l}}},
                {"field", field_name(report.field)},
                {"N", report.N},
                {"lambda_max", report.lambda_max},
                {"verdict", verdict_name(report.verdict)},
                {"reasons", report.reasons},
                {"Q", std::move(q)},
                {"degree_ratio", to_json(report.ratio)},
                {"candidate_degrees", std::move(candidates)},
                {"lambda_squares", std::move(lambda_squares)},
                {"degree_one_possible", report.degree_one_possible}};
}

json to_json(const QuadraticInteger& q)
{
    return json{{"d", q.d().get_str()},
                {"a", q.a().get_str()},
                {"b", q.b().get_str()},
                {"norm", q.norm().get_str()}};
}

json to_json(const PellSolution& p)
{
    return json{{"d", p.d.get_str()}, {"y", p.y.get_str()}, {"x", p.x.get_str()}};
}

json to_json(const NormOrbitSet& orbits)
{
    json generators = json::array();
    for (const auto& gen : orbits.generators)
        generators.push_back(to_json(gen));
    return json{{"d", orbits.d.get_str()},
                {"target", orbits.target.get_str()},
                {"fundamental_unit", to_json(orbits.unit)},
                {"orbit_generators", std::move(generators)}};
}

json to_json(const Prop46Result& result)
{
    json candidates = json::array();
    for (const auto& cand : result.candidates) {
        json entry{{"xi", cand.xi.get_str()},
                   {"eta", cand.eta.get_str()},
                   {"value", cand.value.get_str()},
                   {"solvable", cand.solvable}};
        if (cand.solvable)
            entry["v"] = cand.v.get_str();
        candidates.push_back(std::move(entry));
    }
    json out{{"k", result.k},
             {"candidates", std::move(candidates)},
             {"all_fail", result.all_fail},
             {"next", {{"xi", result.next_xi.get_str()}, {"eta", result.next_eta.get_str()}}}};
    if (result.all_fail)
        out["bound_2c"] = result.bound.get_str();
    return out;
}

json to_json(const std::vector<QScanHit>& hits)
{
    json out = json::array();
    for (const auto& hit : hits)
        out.push_back({{"x", hit.x},
                       {"z", hit.z},
                       {"y", hit.y.get_str()},
                       {"degenerate", hit.degenerate}});
    return out;
}

} // namespace grasscalc
