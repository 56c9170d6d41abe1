#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "grasscalc/diophantine.hpp"
#include "grasscalc/json_io.hpp"
#include "grasscalc/lefschetz.hpp"
#include "grasscalc/map_analysis.hpp"
#include "grasscalc/ring.hpp"

namespace {

using namespace grasscalc;

struct Common {
    std::string format = "table";
    std::string field = "C";

    bool json() const { return format == "json"; }
    Field parsed_field() const { return parse_field(field); }
};

void add_common(CLI::App* cmd, Common& common)
{
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->add_option("--field", common.field, "Ground field C or H")
        ->check(CLI::IsMember({"C", "H"}))
        ->capture_default_str();
}

/// Exit code 2 for malformed user input, before any mathematics runs.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GrassContext make_context(const std::string& text, const Common& common)
{
    std::vector<int> nk;
    try {
        Partition parsed = Partition::parse(text);
        nk = parsed.parts();
    } catch (const std::invalid_argument& e) {
        throw usage_error("bad context '" + text + "': " + e.what());
    }
    if (nk.size() != 2)
        throw usage_error("context must be given as n,k");
    return GrassContext(nk[0], nk[1], common.parsed_field());
}

Partition parse_partition_arg(const std::string& text)
{
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw usage_error("bad partition '" + text + "': " + e.what());
    }
}

IndexSet parse_index_arg(const std::string& text)
{
    try {
        return IndexSet::parse(text);
    } catch (const std::invalid_argument& e) {
        throw usage_error("bad index set '" + text + "': " + e.what());
    }
}

std::string q_str(const mpq_class& q)
{
    mpq_class canon = q;
    canon.canonicalize();
    return canon.get_str();
}

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- ring

void run_ring(const std::string& ctx_text, long grade, bool has_grade, const Common& common)
{
    GrassContext ctx = make_context(ctx_text, common);
    long lo = has_grade ? grade : 0;
    long hi = has_grade ? grade : ctx.dim();
    if (common.json()) {
        json grades = json::array();
        for (long r = lo; r <= hi; ++r) {
            json classes = json::array();
            for (const Partition& nu : ctx.basis(r))
                classes.push_back(to_json(nu));
            grades.push_back({{"grade", r},
                              {"cohomology_degree", ctx.degree_scale() * r},
                              {"betti", ctx.betti(r)},
                              {"classes", std::move(classes)}});
        }
        emit(json{{"n", ctx.n()},
                  {"k", ctx.k()},
                  {"field", field_name(ctx.field())},
                  {"N", ctx.dim()},
                  {"grades", std::move(grades)}});
        return;
    }
    std::cout << ctx.name() << ": N = " << ctx.dim() << "\n";
    for (long r = lo; r <= hi; ++r) {
        std::cout << "r=" << r << " H^" << ctx.degree_scale() * r
                  << " betti=" << ctx.betti(r) << " :";
        for (const Partition& nu : ctx.basis(r))
            std::cout << " s(" << nu.to_string() << ")";
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------- degree

void run_degree(const std::string& ctx_text, const std::string& index_text,
                const std::string& partition_text, const Common& common)
{
    GrassContext ctx = make_context(ctx_text, common);
    if (index_text.empty() == partition_text.empty())
        throw usage_error("give exactly one of --index or --partition");
    IndexSet i = index_text.empty() ? ctx.to_index(parse_partition_arg(partition_text))
                                    : parse_index_arg(index_text);
    Partition nu = ctx.to_partition(i);
    mpz_class by_formula = schubert_degree_formula(ctx, i);
    mpz_class by_pieri = schubert_degree_pieri(ctx, i);
    if (common.json()) {
        emit(json{{"context", ctx.name()},
                  {"index", i.to_string()},
                  {"partition", nu.to_string()},
                  {"dimension", i.weight()},
                  {"degree_formula", by_formula.get_str()},
                  {"degree_pieri", by_pieri.get_str()},
                  {"agree", by_formula == by_pieri}});
        return;
    }
    std::cout << ctx.name() << " Omega" << i.to_string() << " = s(" << nu.to_string()
              << "), dim = " << i.weight() << "\n";
    std::cout << "degree (closed formula) = " << by_formula.get_str() << "\n";
    std::cout << "degree (Pieri oracle)   = " << by_pieri.get_str() << "\n";
    std::cout << (by_formula == by_pieri ? "agree" : "DISAGREE") << "\n";
}

// ---------------------------------------------------------------- multiply

void run_multiply(const std::string& ctx_text, const std::string& a_text,
                  const std::string& b_text, const Common& common)
{
    GrassContext ctx = make_context(ctx_text, common);
    CohElement a = CohElement::schubert(ctx, parse_partition_arg(a_text));
    CohElement b = CohElement::schubert(ctx, parse_partition_arg(b_text));
    CohElement product = multiply(a, b);
    if (common.json()) {
        emit(json{{"context", ctx.name()},
                  {"a", to_json(a)},
                  {"b", to_json(b)},
                  {"product", to_json(product)}});
        return;
    }
    std::cout << a.to_string() << " * " << b.to_string() << " = " << product.to_string()
              << "\n";
}

// ---------------------------------------------------------------- giambelli

void run_giambelli(const std::string& ctx_text, const std::string& partition_text,
                   const Common& common)
{
    GrassContext ctx = make_context(ctx_text, common);
    Partition nu = parse_partition_arg(partition_text);
    SpecialPoly poly = giambelli_expand(ctx, nu);
    if (common.json()) {
        json terms = json::array();
        for (const auto& [m, c] : poly.terms())
            terms.push_back({{"exponents", m.exponents()}, {"coefficient", c.get_str()}});
        emit(json{{"context", ctx.name()},
                  {"partition", to_json(nu)},
                  {"polynomial", std::move(terms)},
                  {"printed", poly.to_string("cbar")}});
        return;
    }
    std::cout << "s(" << nu.to_string() << ") = " << poly.to_string("cbar") << "\n";
}

// ---------------------------------------------------------------- pairing

void run_pairing(const std::string& ctx_text, long grade, const Common& common)
{
    GrassContext ctx = make_context(ctx_text, common);
    PairingMatrix m = pairing_matrix(ctx, grade);
    if (common.json()) {
        emit(to_json(m));
        return;
    }
    std::cout << ctx.name() << " intersection form on H^" << ctx.degree_scale() * grade
              << ", basis:";
    for (const Partition& nu : m.basis)
        std::cout << " s(" << nu.to_string() << ")";
    std::cout << "\n";
    for (const auto& row : m.entries) {
        for (size_t j = 0; j < row.size(); ++j)
            std::cout << (j ? " " : "") << q_str(row[j]);
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------- primitive

void run_primitive(const std::string& ctx_text, long grade, bool has_grade,
                   const Common& common)
{
    GrassContext ctx = make_context(ctx_text, common);
    PrimitiveBasis basis = primitive_generators(ctx);
    if (common.json()) {
        json grades = json::array();
        for (const auto& g : basis.grades) {
            if (has_grade && g.r != grade)
                continue;
            json vectors = json::array();
            for (const auto& w : g.basis)
                vectors.push_back(to_json(w));
            grades.push_back({{"grade", g.r},
                              {"cohomology_degree", ctx.degree_scale() * g.r},
                              {"v", to_json(g.v)},
                              {"v_norm", to_json(g.v_norm)},
                              {"primitive_basis", std::move(vectors)}});
        }
        emit(json{{"n", ctx.n()},
                  {"k", ctx.k()},
                  {"field", field_name(ctx.field())},
                  {"grades", std::move(grades)}});
        return;
    }
    std::cout << ctx.name() << " primitive generators\n";
    for (const auto& g : basis.grades) {
        if (has_grade && g.r != grade)
            continue;
        std::cout << "r=" << g.r << ": v_" << g.r << " = " << g.v.to_string() << "\n";
        std::cout << "     (v_" << g.r << ",v_" << g.r << ") = " << q_str(g.v_norm) << "\n";
    }
}

// ---------------------------------------------------------------- v2norm

void run_v2norm(const std::string& ctx_text, const Common& common)
{
    GrassContext ctx = make_context(ctx_text, common);
    mpq_class closed = v2_norm_closed_form(ctx.n(), ctx.k());
    mpq_class computed = primitive_norm(ctx, 2);
    if (common.json()) {
        emit(json{{"context", ctx.name()},
                  {"closed_form", to_json(closed)},
                  {"gram_schmidt", to_json(computed)},
                  {"agree", closed == computed}});
        return;
    }
    std::cout << ctx.name() << " (v_2,v_2) closed form = " << q_str(closed) << "\n";
    std::cout << ctx.name() << " (v_2,v_2) Gram-Schmidt = " << q_str(computed) << "\n";
    std::cout << (closed == computed ? "agree" : "DISAGREE") << "\n";
}

// ---------------------------------------------------------------- analyze

void run_analyze(const std::string& source_text, const std::string& target_text,
                 long lambda_max, const Common& common)
{
    MapProblem problem(make_context(source_text, common), make_context(target_text, common));
    MapAnalysisReport report = analyze_map(problem, lambda_max);
    if (common.json()) {
        emit(to_json(report));
        return;
    }
    std::cout << "map " << problem.source.name() << " -> " << problem.target.name()
              << ", N = " << report.N << "\n";
    std::cout << "verdict: " << verdict_name(report.verdict) << "\n";
    for (const auto& reason : report.reasons)
        std::cout << "  - " << reason << "\n";
    if (report.q)
        std::cout << "Q = " << report.q->value.get_str()
                  << (report.q->is_square ? " = " + report.q->root.get_str() + "^2"
                                          : " (not a square)")
                  << "\n";
    std::cout << "degree ratio = " << q_str(report.ratio) << "\n";
    for (const auto& entry : report.lambda_squares)
        std::cout << "lambda_" << entry.j << "^2 coefficient (H^" << entry.cohomology_degree
                  << ") = " << q_str(entry.value)
                  << (entry.is_square ? " (rational square)" : " (not a rational square)")
                  << "\n";
    bool any = false;
    for (const auto& cand : report.candidates) {
        if (!cand.admissible || cand.lambda == 0)
            continue;
        if (!any)
            std::cout << "admissible candidate degrees, |lambda| <= " << report.lambda_max
                      << ":\n";
        any = true;
        std::cout << "  lambda=" << cand.lambda << " degree=" << q_str(cand.value) << "\n";
    }
    if (!any)
        std::cout << "no admissible nonzero candidate degrees for |lambda| <= "
                  << report.lambda_max << "\n";
    std::cout << (report.degree_one_possible
                      ? "degree +-1 would force a homotopy equivalence"
                      : "degree +-1 impossible: it requires (m,l) = (n,k)")
              << "\n";
}

// ---------------------------------------------------------------- matches

void run_matches(int k, int l, int n_max, const Common& common)
{
    auto pairs = dimension_matches(k, l, n_max);
    if (common.json()) {
        json out = json::array();
        for (auto [n, m] : pairs)
            out.push_back({{"n", n},
                           {"m", m},
                           {"N", static_cast<long>(k) * (n - k)}});
        emit(json{{"k", k}, {"l", l}, {"n_max", n_max}, {"pairs", std::move(out)}});
        return;
    }
    std::cout << "dimension matches k=" << k << " l=" << l << " n<=" << n_max << ":\n";
    for (auto [n, m] : pairs)
        std::cout << "n=" << n << " m=" << m << " N=" << static_cast<long>(k) * (n - k)
                  << "\n";
}

// ---------------------------------------------------------------- diophantine

void run_pell(long d, const Common& common)
{
    PellSolution p = pell_fundamental(d);
    if (common.json()) {
        emit(to_json(p));
        return;
    }
    std::cout << "d=" << p.d.get_str() << ": fundamental solution y=" << p.y.get_str()
              << ", x=" << p.x.get_str() << " (y^2 - " << p.d.get_str() << "*x^2 = 1)\n";
}

void run_norm_orbits(long d, long target, int count, const Common& common)
{
    NormOrbitSet orbits = norm_orbit_generators(d, target);
    auto solutions = enumerate_norm_solutions(d, target, count);
    if (common.json()) {
        json sols = json::array();
        for (const auto& [xi, eta] : solutions)
            sols.push_back({{"xi", xi.get_str()}, {"eta", eta.get_str()}});
        json out = to_json(orbits);
        out["solutions"] = std::move(sols);
        emit(out);
        return;
    }
    std::cout << "Z[sqrt(" << d << ")], norm " << target << ": fundamental unit "
              << orbits.unit.to_string() << "\n";
    std::cout << "orbit generators:";
    for (const auto& gen : orbits.generators)
        std::cout << " " << gen.to_string();
    std::cout << "\n";
    std::cout << "first " << count << " solutions with xi,eta > 1:";
    for (const auto& [xi, eta] : solutions)
        std::cout << " (" << xi.get_str() << "," << eta.get_str() << ")";
    std::cout << "\n";
}

void run_prop46(int k, int probe, const Common& common)
{
    Prop46Result result = prop46_bound(k, probe);
    if (common.json()) {
        emit(to_json(result));
        return;
    }
    std::cout << "k=" << k << ": norm equation xi^2 - " << (k == 7 ? 7 : 3)
              << "*eta^2 = " << (k == 7 ? -6 : -2) << "\n";
    for (const auto& cand : result.candidates) {
        std::cout << "(" << cand.xi.get_str() << "," << cand.eta.get_str()
                  << "): xi^2*eta^2 + 2 = " << cand.value.get_str();
        if (cand.solvable)
            std::cout << " = 3*" << cand.v.get_str() << "^2\n";
        else
            std::cout << ", not of the form 3*v^2\n";
    }
    if (result.all_fail) {
        std::cout << "all " << result.candidates.size() << " candidates fail; next solution ("
                  << result.next_xi.get_str() << "," << result.next_eta.get_str() << ")\n";
        std::cout << "bound: 2c > " << result.next_eta.get_str() << "^2 * "
                  << result.next_xi.get_str() << "^2 = " << result.bound.get_str() << "\n";
    } else {
        std::cout << "some candidate admits xi^2*eta^2 + 2 = 3*v^2; no bound derived\n";
    }
}

void run_scan_q(long a, long b, long x_max, int jobs, const Common& common)
{
    auto hits = scan_q_squares(a, b, x_max, jobs);
    if (common.json()) {
        emit(json{{"a", a}, {"b", b}, {"x_max", x_max}, {"hits", to_json(hits)}});
        return;
    }
    std::cout << "y^2 = (a^2-1)(b^2-1)(x^2-1)(z^2-1), a*z = b*x, a=" << a << " b=" << b
              << ", x <= " << x_max << "\n";
    long degenerate = 0;
    for (const auto& hit : hits) {
        if (hit.degenerate) {
            ++degenerate;
            continue;
        }
        std::cout << "x=" << hit.x << " z=" << hit.z << " y=" << hit.y.get_str() << "\n";
    }
    std::cout << hits.size() - degenerate << " hit(s), " << degenerate
              << " degenerate (x=1 or z=1)\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Schubert calculus and map-degree analysis for Grassmannians"};
    app.require_subcommand(1);

    Common common;

    // ring
    std::string ctx_text;
    long grade = 0;
    auto* ring = app.add_subcommand("ring", "Betti numbers and Schubert basis");
    ring->add_option("--ctx", ctx_text, "Grassmannian n,k")->required();
    auto* ring_grade = ring->add_option("--grade", grade, "Restrict to one grade");
    add_common(ring, common);

    // degree
    std::string index_text, partition_text;
    auto* degree = app.add_subcommand("degree", "Degree of a Schubert variety, two ways");
    degree->add_option("--ctx", ctx_text, "Grassmannian n,k")->required();
    degree->add_option("--index", index_text, "Index set, e.g. \"[3,4]\"");
    degree->add_option("--partition", partition_text, "Partition label, e.g. \"2,1\"");
    add_common(degree, common);

    // multiply
    std::string a_text, b_text;
    auto* multiply_cmd = app.add_subcommand("multiply", "Product of two Schubert classes");
    multiply_cmd->add_option("--ctx", ctx_text, "Grassmannian n,k")->required();
    multiply_cmd->add_option("--a", a_text, "First partition")->required();
    multiply_cmd->add_option("--b", b_text, "Second partition")->required();
    add_common(multiply_cmd, common);

    // giambelli
    auto* giambelli = app.add_subcommand("giambelli", "Determinant expansion in special classes");
    giambelli->add_option("--ctx", ctx_text, "Grassmannian n,k")->required();
    giambelli->add_option("--partition", partition_text, "Partition label")->required();
    add_common(giambelli, common);

    // pairing
    auto* pairing = app.add_subcommand("pairing", "Intersection-form matrix on one grade");
    pairing->add_option("--ctx", ctx_text, "Grassmannian n,k")->required();
    pairing->add_option("--grade", grade, "Complex grade r, 2r <= N")->required();
    add_common(pairing, common);

    // primitive
    auto* primitive = app.add_subcommand("primitive", "Primitive generators v_r");
    primitive->add_option("--ctx", ctx_text, "Grassmannian n,k")->required();
    auto* primitive_grade = primitive->add_option("--grade", grade, "Restrict to one grade");
    add_common(primitive, common);

    // v2norm
    auto* v2norm = app.add_subcommand("v2norm", "(v_2, v_2): closed form vs Gram-Schmidt");
    v2norm->add_option("--ctx", ctx_text, "Grassmannian n,k")->required();
    add_common(v2norm, common);

    // analyze
    std::string source_text, target_text;
    long lambda_max = 16;
    auto* analyze = app.add_subcommand("analyze", "Degree obstructions for a map problem");
    analyze->add_option("--source", source_text, "Source n,k")->required();
    analyze->add_option("--target", target_text, "Target m,l")->required();
    analyze->add_option("--lambda-max", lambda_max, "Scan bound for lambda")
        ->capture_default_str();
    add_common(analyze, common);

    // matches
    int match_k = 0, match_l = 0, n_max = 0;
    auto* matches = app.add_subcommand("matches", "Dimension-matched (n, m) pairs");
    matches->add_option("--k", match_k, "Source k")->required();
    matches->add_option("--l", match_l, "Target l (1 <= l <= k)")->required();
    matches->add_option("--n-max", n_max, "Largest n to scan")->required();
    add_common(matches, common);

    // pell
    long pell_d = 0;
    auto* pell = app.add_subcommand("pell", "Fundamental Pell solution");
    pell->add_option("--d", pell_d, "Non-square radicand")->required();
    add_common(pell, common);

    // norm-orbits
    long orbit_d = 0, orbit_target = 0;
    int count = 4;
    auto* norm_orbits = app.add_subcommand("norm-orbits", "Norm-equation orbits in Z[sqrt(d)]");
    norm_orbits->add_option("--d", orbit_d, "Radicand (square-free, not 1 mod 4)")->required();
    norm_orbits->add_option("--target", orbit_target, "Target norm")->required();
    norm_orbits->add_option("--count", count, "Solutions to list")->capture_default_str();
    add_common(norm_orbits, common);

    // prop46
    int prop_k = 0, probe = 3;
    auto* prop46 = app.add_subcommand("prop46", "Bound on 2c from the k = 3 / 7 case analysis");
    prop46->add_option("--k", prop_k, "3 or 7")->required();
    prop46->add_option("--probe", probe, "Norm solutions to test")->capture_default_str();
    add_common(prop46, common);

    // scan-q
    long scan_a = 0, scan_b = 0, x_max = 0;
    int jobs = 1;
    auto* scan_q = app.add_subcommand("scan-q", "Brute-force perfect-square scan of Q");
    scan_q->add_option("--a", scan_a, "First parameter, a > 1")->required();
    scan_q->add_option("--b", scan_b, "Second parameter, b > a")->required();
    scan_q->add_option("--xmax", x_max, "Scan limit for x")->required();
    scan_q->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    add_common(scan_q, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (ring->parsed())
            run_ring(ctx_text, grade, ring_grade->count() > 0, common);
        else if (degree->parsed())
            run_degree(ctx_text, index_text, partition_text, common);
        else if (multiply_cmd->parsed())
            run_multiply(ctx_text, a_text, b_text, common);
        else if (giambelli->parsed())
            run_giambelli(ctx_text, partition_text, common);
        else if (pairing->parsed())
            run_pairing(ctx_text, grade, common);
        else if (primitive->parsed())
            run_primitive(ctx_text, grade, primitive_grade->count() > 0, common);
        else if (v2norm->parsed())
            run_v2norm(ctx_text, common);
        else if (analyze->parsed())
            run_analyze(source_text, target_text, lambda_max, common);
        else if (matches->parsed())
            run_matches(match_k, match_l, n_max, common);
        else if (pell->parsed())
            run_pell(pell_d, common);
        else if (norm_orbits->parsed())
            run_norm_orbits(orbit_d, orbit_target, count, common);
        else if (prop46->parsed())
            run_prop46(prop_k, probe, common);
        else if (scan_q->parsed())
            run_scan_q(scan_a, scan_b, x_max, jobs, common);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
