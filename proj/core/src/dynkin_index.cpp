#include "kmx/dynkin_index.hpp"

namespace kmx {

Rat index_weight_sum(const RootSystem& rs, const Character& ch) {
    const Root& theta = rs.highest_root();
    Rat s = 0;
    for (const auto& [fw, m] : ch.entries) {
        const Int k = rs.pair_coroot(Weight{fw}, theta);
        s += Rat(m) * Rat(k * k);
    }
    return s / 2;
}

Int index_string_sum(const Sl2Strings& strings) {
    Int s = 0;
    for (const auto& [dim, count] : strings.dims) s += count * binomial(dim + 1, 3);
    return s;
}

std::pair<Rat, Int> sl2_string_identity(long m) {
    if (m < 0) throw domain_error("negative sl2 highest weight");
    Rat lhs = 0;
    for (long n = 0; n <= m; ++n) lhs += Rat(Int(m - 2 * n) * Int(m - 2 * n));
    lhs /= 2;
    return {lhs, binomial(m + 2, 3)};
}

Sl2RepMatrices sl2_irrep_matrices(int m) {
    if (m < 0) throw domain_error("negative sl2 highest weight");
    const std::size_t d = static_cast<std::size_t>(m) + 1;
    Sl2RepMatrices rep{RMat(d, d), RMat(d, d), RMat(d, d)};
    // Basis v_0..v_m: h v_j = (m-2j) v_j, f v_j = (j+1) v_{j+1}, e v_j = (m-j+1) v_{j-1}.
    for (std::size_t j = 0; j < d; ++j) {
        rep.h(j, j) = m - 2 * static_cast<int>(j);
        if (j + 1 < d) rep.f(j + 1, j) = static_cast<int>(j) + 1;
        if (j > 0) rep.e(j - 1, j) = m - static_cast<int>(j) + 1;
    }
    return rep;
}

namespace {

RMat commutator(const RMat& x, const RMat& y) { return x * y - y * x; }

Rat trace_product(const RMat& x, const RMat& y) { return (x * y).trace(); }

}  // namespace

Rat index_trace_ratio(const Sl2RepMatrices& rep) {
    const auto& [e, f, h] = rep;
    if (e.rows() != e.cols() || f.rows() != f.cols() || h.rows() != h.cols() ||
        e.rows() != f.rows() || e.rows() != h.rows())
        throw domain_error("sl2 images must be square matrices of one size");
    for (const RMat* m : {&e, &f, &h})
        if (m->trace() != 0) throw domain_error("sl2 images must be trace-zero");
    if (!(commutator(h, e) == 2 * e) || !(commutator(h, f) == Rat(-2) * f) ||
        !(commutator(e, f) == h))
        throw domain_error("matrices do not satisfy the sl2 bracket relations");

    // Normalized form on the source: <h,h> = 2, <e,f> = <f,e> = 1, rest 0.
    struct Pairing {
        const RMat *x, *y;
        Rat source;
    };
    const Pairing nonzero[] = {{&e, &f, 1}, {&f, &e, 1}, {&h, &h, 2}};
    const Pairing zero[] = {{&e, &e, 0}, {&f, &f, 0}, {&h, &e, 0},
                            {&h, &f, 0}, {&e, &h, 0}, {&f, &h, 0}};

    Rat ratio = trace_product(e, f);  // / 1
    for (const auto& p : nonzero)
        if (trace_product(*p.x, *p.y) / p.source != ratio)
            throw domain_error("inconsistent trace ratios: not an invariant-form multiple");
    for (const auto& p : zero)
        if (trace_product(*p.x, *p.y) != 0)
            throw domain_error("inconsistent trace ratios: form not diagonal where required");
    return ratio;
}

IndexReport index_report(const RootSystem& rs, const Weight& lambda) {
    const Character ch = weight_multiplicities(rs, lambda);
    IndexReport r;
    r.weight_sum_value = index_weight_sum(rs, ch);
    r.string_sum_value = index_string_sum(sl2_theta_decompose(rs, ch));
    r.agrees = Rat(r.string_sum_value) == r.weight_sum_value;
    return r;
}

}  // namespace kmx
