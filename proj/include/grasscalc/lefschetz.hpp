#pragma once

#include <gmpxx.h>

#include <vector>

#include "grasscalc/context.hpp"
#include "grasscalc/linalg.hpp"
#include "grasscalc/ring.hpp"

namespace grasscalc {

/// (alpha, beta)_omega = <alpha beta omega^{N-2r}, mu> for alpha, beta of
/// the same complex grade r with 2r <= N; omega = cbar_1.
mpq_class omega_pairing(const CohElement& a, const CohElement& b);

/// Same form for the rescaled Lefschetz class t*omega, computed honestly
/// by scaling each omega factor.
mpq_class omega_pairing_scaled(const CohElement& a, const CohElement& b,
                               const mpq_class& t);

/// Exact Gram matrix of (.,.)_omega on the Schubert basis of H^{2r}.
struct PairingMatrix {
    GrassContext ctx;
    long grade;
    std::vector<Partition> basis;
    QMatrix entries;
};

PairingMatrix pairing_matrix(const GrassContext& ctx, long r);

/// Basis of the primitive space V^{2r} = ker(cup omega^{N-2r+1}), by exact
/// kernel computation. Dimension is betti(r) - betti(r-1).
std::vector<CohElement> primitive_subspace(const GrassContext& ctx, long r);

/// Unique components a_q in omega^q V^{2r-2q} with sum = a, 0 <= q <= r.
std::vector<CohElement> lefschetz_decompose(const CohElement& a);

/// Distinguished primitive generators, built by projecting the
/// cbar-monomials without cbar_1 onto V^{2r} and running exact
/// Gram-Schmidt in decreasing lexicographic monomial order. v_r is the
/// vector obtained from cbar_r (the last monomial in that order).
struct PrimitiveGrade {
    long r;
    std::vector<Monomial> monomials;  // ordered source monomials (j_1 = 0)
    std::vector<CohElement> basis;    // orthogonal basis of V^{2r}, same order
    CohElement v;                     // v_r
    mpq_class v_norm;                 // (v_r, v_r)_omega
};

struct PrimitiveBasis {
    GrassContext ctx;
    std::vector<PrimitiveGrade> grades; // r = 2 .. min(k, N/2)
};

PrimitiveBasis primitive_generators(const GrassContext& ctx);

/// (v_r, v_r) for one grade without building the whole table.
mpq_class primitive_norm(const GrassContext& ctx, long r);

/// Closed form for the norm of v_2:
/// deg G_{n,k} * (k^2-1)((n-k)^2-1) / (2 (N-1)^2 (N-2) (N-3)), N >= 4.
mpq_class v2_norm_closed_form(int n, int k);

/// Certifies that (-1)^{q+r} (.,.)_omega is positive definite on
/// omega^q V^{2r-2q} by exact leading-principal-minor signs, and returns
/// that sign. Throws std::logic_error if the certificate fails.
int definiteness_sign(const GrassContext& ctx, long r, long q);

} // namespace grasscalc
