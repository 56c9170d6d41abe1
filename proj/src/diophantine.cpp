#include "grasscalc/diophantine.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace grasscalc {

SquareRoot is_perfect_square(const mpz_class& v)
{
    if (v < 0)
        return {false, 0};
    if (mpz_perfect_square_p(v.get_mpz_t()) == 0)
        return {false, 0};
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return {true, root};
}

bool is_rational_square(const mpq_class& q)
{
    mpq_class canon = q;
    canon.canonicalize();
    if (canon < 0)
        return false;
    return is_perfect_square(canon.get_num()).is_square &&
           is_perfect_square(canon.get_den()).is_square;
}

SquareFreeDecomposition square_free_part(const mpz_class& v, unsigned long trial_bound)
{
    if (v < 1)
        throw std::domain_error("square-free decomposition needs v >= 1");
    mpz_class rest = v;
    mpz_class alpha = 1, u = 1;
    for (mpz_class p = 2; p * p <= rest && p <= trial_bound; p == 2 ? p = 3 : p += 2) {
        if (rest % p != 0)
            continue;
        int exp = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exp;
        }
        for (int i = 0; i + 1 < exp; i += 2)
            u *= p;
        if (exp % 2 == 1)
            alpha *= p;
    }
    // leftover cofactor: 1, a prime (all factors exceed the trial bound, so
    // anything <= bound^2 is prime), or a perfect square; otherwise honesty
    // requires flagging the decomposition as incomplete.
    bool complete = true;
    if (rest > 1) {
        SquareRoot root = is_perfect_square(rest);
        if (root.is_square) {
            u *= root.root;
        } else if (rest <= mpz_class(trial_bound) * trial_bound) {
            alpha *= rest;
        } else {
            alpha *= rest;
            complete = false;
        }
    }
    return {alpha, u, complete};
}

PellSolution pell_fundamental(const mpz_class& d)
{
    if (d <= 0)
        throw std::domain_error("Pell radicand must be positive");
    if (is_perfect_square(d).is_square)
        throw std::domain_error("Pell radicand must not be a square");
    // continued fraction of sqrt(d): a_i = floor((a0 + P_i)/Q_i)
    mpz_class a0;
    mpz_sqrt(a0.get_mpz_t(), d.get_mpz_t());
    mpz_class P = 0, Q = 1, a = a0;
    mpz_class h_prev = 1, h = a0, k_prev = 0, k = 1;
    while (true) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (a0 + P) / Q;
        if (Q == 1 && a == 2 * a0) {
            // period complete; (h, k) is the minimal solution of
            // y^2 - d x^2 = +-1 with the sign given by the period parity
            mpz_class norm = h * h - d * k * k;
            if (norm == 1)
                return {d, h, k};
            // norm -1: square the unit
            return {d, h * h + d * k * k, 2 * h * k};
        }
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
}

QuadraticInteger QuadraticInteger::operator*(const QuadraticInteger& other) const
{
    if (d_ != other.d_)
        throw std::invalid_argument("radicand mismatch");
    return {d_, a_ * other.a_ + d_ * b_ * other.b_, a_ * other.b_ + b_ * other.a_};
}

std::string QuadraticInteger::to_string() const
{
    std::string out = a_.get_str();
    if (b_ == 0)
        return out;
    out += b_ < 0 ? "-" : "+";
    mpz_class abs_b = abs(b_);
    if (abs_b != 1)
        out += abs_b.get_str() + "*";
    return out + "sqrt(" + d_.get_str() + ")";
}

namespace {

void require_supported_radicand(const mpz_class& d)
{
    if (d < 2)
        throw unsupported_error("radicand must be >= 2");
    if (is_perfect_square(d).is_square)
        throw unsupported_error("radicand must not be a square");
    SquareFreeDecomposition dec = square_free_part(d);
    if (!dec.complete || dec.alpha != d)
        throw unsupported_error("radicand must be square-free");
    if (d % 4 == 1)
        throw unsupported_error("d = 1 mod 4 has ring of integers larger than Z[sqrt(d)]; "
                                "unsupported");
}

} // namespace

QuadraticInteger fundamental_unit(const mpz_class& d)
{
    require_supported_radicand(d);
    // For d = 2, 3 mod 4 the ring of integers is Z[sqrt(d)]; the continued
    // fraction convergent at the period end gives its fundamental unit
    // (norm -1 when the period is odd).
    mpz_class a0;
    mpz_sqrt(a0.get_mpz_t(), d.get_mpz_t());
    mpz_class P = 0, Q = 1, a = a0;
    mpz_class h_prev = 1, h = a0, k_prev = 0, k = 1;
    while (true) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (a0 + P) / Q;
        if (Q == 1 && a == 2 * a0)
            return {d, h, k};
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
}

namespace {

mpz_class ceil_sqrt(const mpq_class& q)
{
    // smallest integer s with s^2 >= q
    mpz_class s;
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class quotient = num / den;
    mpz_sqrt(s.get_mpz_t(), quotient.get_mpz_t());
    while (s * s * den < num)
        ++s;
    return s;
}

struct PairLess {
    bool operator()(const std::pair<mpz_class, mpz_class>& x,
                    const std::pair<mpz_class, mpz_class>& y) const
    {
        if (x.first != y.first)
            return x.first < y.first;
        return x.second < y.second;
    }
};

} // namespace

// Units of norm -1 flip the sign of norms, so orbits of a norm equation
// live under the norm-one unit subgroup: nu itself when N(nu) = 1, nu^2
// otherwise (d = 3, 7 both have N(nu) = 1).
static QuadraticInteger norm_one_unit(const QuadraticInteger& unit)
{
    return unit.norm() == 1 ? unit : unit * unit;
}

NormOrbitSet norm_orbit_generators(const mpz_class& d, const mpz_class& target)
{
    if (target == 0)
        throw std::domain_error("target norm must be nonzero");
    QuadraticInteger unit = fundamental_unit(d);
    QuadraticInteger acting = norm_one_unit(unit);

    // Reduction box: every orbit has a representative with
    // |b| <= ceil(sqrt(|target| (nu + 1) / d)), nu the acting unit's value.
    mpq_class unit_value_upper(acting.a() + acting.b() * ceil_sqrt(mpq_class(d)) + 1);
    mpz_class bound = ceil_sqrt(mpq_class(abs(target)) * (unit_value_upper + 1) / d);

    std::vector<QuadraticInteger> solutions;
    for (mpz_class b = 0; b <= bound; ++b) {
        mpz_class a2 = target + d * b * b;
        SquareRoot root = is_perfect_square(a2);
        if (!root.is_square)
            continue;
        const mpz_class& a = root.root;
        solutions.emplace_back(d, a, b);
        if (a != 0)
            solutions.emplace_back(d, -a, b);
        if (b != 0) {
            solutions.emplace_back(d, a, -b);
            if (a != 0)
                solutions.emplace_back(d, -a, -b);
        }
    }

    // union-find over the candidate set, merging s with -s, s*unit and
    // s*unit^{-1} whenever those land back inside the search box
    std::map<std::pair<mpz_class, mpz_class>, size_t, PairLess> index;
    for (size_t i = 0; i < solutions.size(); ++i)
        index[{solutions[i].a(), solutions[i].b()}] = i;
    std::vector<size_t> parent(solutions.size());
    for (size_t i = 0; i < parent.size(); ++i)
        parent[i] = i;
    auto find = [&](size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    auto merge = [&](size_t i, const QuadraticInteger& t) {
        auto it = index.find({t.a(), t.b()});
        if (it != index.end())
            parent[find(it->second)] = find(i);
    };
    QuadraticInteger inverse = acting.conjugate(); // norm one
    for (size_t i = 0; i < solutions.size(); ++i) {
        merge(i, -solutions[i]);
        QuadraticInteger up = solutions[i];
        QuadraticInteger down = solutions[i];
        for (int step = 0; step < 6; ++step) {
            up = up * acting;
            down = down * inverse;
            merge(i, up);
            merge(i, down);
        }
    }

    // canonical representative per orbit: smallest |b|, then a > 0, then b >= 0
    std::map<size_t, QuadraticInteger> reps;
    auto better = [](const QuadraticInteger& x, const QuadraticInteger& y) {
        mpz_class bx = abs(x.b()), by = abs(y.b());
        if (bx != by)
            return bx < by;
        bool xpos = x.a() > 0, ypos = y.a() > 0;
        if (xpos != ypos)
            return xpos;
        return x.b() > y.b();
    };
    for (size_t i = 0; i < solutions.size(); ++i) {
        size_t root = find(i);
        auto it = reps.find(root);
        if (it == reps.end())
            reps.emplace(root, solutions[i]);
        else if (better(solutions[i], it->second))
            it->second = solutions[i];
    }

    NormOrbitSet out{d, target, unit, {}};
    for (auto& [_, rep] : reps)
        out.generators.push_back(rep);
    std::sort(out.generators.begin(), out.generators.end(),
              [&](const QuadraticInteger& x, const QuadraticInteger& y) {
                  if (abs(x.b()) != abs(y.b()))
                      return abs(x.b()) < abs(y.b());
                  return y.b() < x.b();
              });
    return out;
}

namespace {

bool both_coords_exceed_one(const QuadraticInteger& s)
{
    return (s.a() > 1 && s.b() > 1) || (s.a() < -1 && s.b() < -1);
}

QuadraticInteger positive_form(const QuadraticInteger& s)
{
    return s.a() < 0 ? -s : s;
}

} // namespace

std::vector<std::pair<mpz_class, mpz_class>>
enumerate_norm_solutions(const mpz_class& d, const mpz_class& target, int count)
{
    if (count < 0)
        throw std::domain_error("count must be nonnegative");
    NormOrbitSet orbits = norm_orbit_generators(d, target);
    QuadraticInteger acting = norm_one_unit(orbits.unit);
    QuadraticInteger inverse = acting.conjugate();

    std::vector<std::pair<mpz_class, mpz_class>> pool;
    for (const QuadraticInteger& gen : orbits.generators) {
        // walk up the unit ladder until both coordinates pass 1 (signs
        // align after finitely many steps), then down to the minimal such
        // element; from there the qualifying set is an upward ladder
        QuadraticInteger s = gen;
        int guard = 0;
        while (!both_coords_exceed_one(s)) {
            s = s * acting;
            if (++guard > 256)
                throw std::logic_error("norm-orbit ladder failed to stabilize");
        }
        while (true) {
            QuadraticInteger down = s * inverse;
            if (!both_coords_exceed_one(down))
                break;
            s = down;
        }
        s = positive_form(s);
        for (int i = 0; i < count; ++i) {
            pool.emplace_back(s.a(), s.b());
            s = positive_form(s * acting);
        }
    }
    std::sort(pool.begin(), pool.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    if (pool.size() > static_cast<size_t>(count))
        pool.resize(static_cast<size_t>(count));
    return pool;
}

Prop46Result prop46_bound(int k, int probe)
{
    if (k != 3 && k != 7)
        throw std::domain_error("the case analysis covers k = 3 and k = 7 only");
    if (probe < 1)
        throw std::domain_error("probe must be >= 1");
    mpz_class d = k == 7 ? 7 : 3;
    mpz_class target = k == 7 ? -6 : -2;
    auto solutions = enumerate_norm_solutions(d, target, probe + 1);

    Prop46Result out;
    out.k = k;
    out.all_fail = true;
    for (int i = 0; i < probe; ++i) {
        const auto& [xi, eta] = solutions[static_cast<size_t>(i)];
        Prop46Candidate cand;
        cand.xi = xi;
        cand.eta = eta;
        cand.value = xi * xi * eta * eta + 2;
        cand.solvable = false;
        if (cand.value % 3 == 0) {
            SquareRoot root = is_perfect_square(cand.value / 3);
            if (root.is_square) {
                cand.solvable = true;
                cand.v = root.root;
            }
        }
        if (cand.solvable)
            out.all_fail = false;
        out.candidates.push_back(std::move(cand));
    }
    out.next_xi = solutions.back().first;
    out.next_eta = solutions.back().second;
    if (out.all_fail) {
        mpz_class product = out.next_xi * out.next_eta;
        out.bound = product * product;
    }
    return out;
}

std::vector<QScanHit> scan_q_squares(long a, long b, long x_max, int jobs)
{
    if (a <= 1 || b <= a)
        throw std::domain_error("scan needs 1 < a < b");
    if (x_max < 1)
        throw std::domain_error("x_max must be >= 1");
    if (jobs < 1)
        jobs = 1;

    mpz_class head = (mpz_class(a) * a - 1) * (mpz_class(b) * b - 1);
    auto scan_range = [&](long lo, long hi, std::vector<QScanHit>& out) {
        for (long x = lo; x < hi; ++x) {
            mpz_class bx = mpz_class(b) * x;
            if (bx % a != 0)
                continue;
            mpz_class zq = bx / a;
            long z = static_cast<long>(zq.get_si());
            mpz_class q = head * (mpz_class(x) * x - 1) * (zq * zq - 1);
            SquareRoot root = is_perfect_square(q);
            if (root.is_square)
                out.push_back({x, z, root.root, x == 1 || z == 1});
        }
    };

    std::vector<std::vector<QScanHit>> chunks(static_cast<size_t>(jobs));
    if (jobs == 1) {
        scan_range(1, x_max + 1, chunks[0]);
    } else {
        std::vector<std::thread> workers;
        long span = (x_max + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            long lo = 1 + t * span;
            long hi = std::min(x_max + 1, lo + span);
            if (lo > x_max)
                break;
            workers.emplace_back(scan_range, lo, hi, std::ref(chunks[static_cast<size_t>(t)]));
        }
        for (auto& w : workers)
            w.join();
    }
    std::vector<QScanHit> hits;
    for (auto& chunk : chunks)
        hits.insert(hits.end(), chunk.begin(), chunk.end());
    std::sort(hits.begin(), hits.end(),
              [](const QScanHit& u, const QScanHit& v) { return u.x < v.x; });
    return hits;
}

} // namespace grasscalc
