#pragma once

#include <utility>

#include "kmx/characters.hpp"
#include "kmx/matrix.hpp"

namespace kmx {

/// One index computation by two routes, plus whether they agree.
struct IndexReport {
    Rat weight_sum_value;
    Int string_sum_value;
    bool agrees = false;
};

/// (1/2) sum_lambda n_lambda <lambda, theta^vee>^2, exact.
Rat index_weight_sum(const RootSystem& rs, const Character& ch);

/// sum_i C(m_i + 1, 3) over summand dimensions m_i (a dim-2 string counts 1).
Int index_string_sum(const Sl2Strings& strings);

/// The pair ((1/2) sum_{n=0}^{m} (m - 2n)^2, C(m+2, 3)); callers assert equality.
std::pair<Rat, Int> sl2_string_identity(long m);

/// Images of the standard sl2 basis {e, f, h} under a representation into
/// trace-zero matrices.
struct Sl2RepMatrices {
    RMat e, f, h;
};

/// Matrices of the (m+1)-dimensional irreducible sl2 representation.
Sl2RepMatrices sl2_irrep_matrices(int m);

/// tr(phi(x) phi(y)) / <x, y> for the normalized form on sl2 (<h,h> = 2,
/// <e,f> = 1). Validates trace-zero inputs, the sl2 bracket relations, and
/// that the ratio is constant across basis pairs; throws domain_error if the
/// input is not a homomorphism or the ratios disagree.
Rat index_trace_ratio(const Sl2RepMatrices& rep);

/// Convenience pipeline: character of lambda, both index routes, comparison.
IndexReport index_report(const RootSystem& rs, const Weight& lambda);

}  // namespace kmx
