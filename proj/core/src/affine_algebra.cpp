#include "kmx/affine_algebra.hpp"

#include <algorithm>

namespace kmx {

namespace {

void check_trace_zero(const RMat& m) {
    if (m.rows() != m.cols()) throw domain_error("loop-algebra matrices must be square");
    if (m.trace() != 0) throw domain_error("loop-algebra matrices must be trace-zero");
}

bool matrix_is_zero(const RMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

}  // namespace

AffineElement AffineElement::term(RMat x, const LaurentPoly& p) {
    check_trace_zero(x);
    AffineElement e(static_cast<int>(x.rows()));
    for (const auto& [exp, c] : p.terms()) e.add_term(exp, c * x);
    return e;
}

AffineElement& AffineElement::add_term(int exponent, const RMat& m) {
    if (static_cast<int>(m.rows()) != n_ || static_cast<int>(m.cols()) != n_)
        throw domain_error("matrix size mismatch in affine element");
    auto it = std::lower_bound(summands_.begin(), summands_.end(), exponent,
                               [](const auto& s, int e) { return s.first < e; });
    if (it != summands_.end() && it->first == exponent) {
        it->second = it->second + m;
        if (matrix_is_zero(it->second)) summands_.erase(it);
    } else if (!matrix_is_zero(m)) {
        summands_.insert(it, {exponent, m});
    }
    return *this;
}

AffineElement operator+(const AffineElement& x, const AffineElement& y) {
    if (x.n_ != y.n_) throw domain_error("matrix size mismatch in affine sum");
    AffineElement r = x;
    for (const auto& [e, m] : y.summands_) r.add_term(e, m);
    r.central_ += y.central_;
    return r;
}

AffineElement operator-(const AffineElement& x, const AffineElement& y) {
    return x + (Rat(-1) * y);
}

AffineElement AffineElement::operator-() const { return Rat(-1) * *this; }

AffineElement operator*(const Rat& c, const AffineElement& x) {
    AffineElement r(x.n_);
    if (c == 0) return r;
    for (const auto& [e, m] : x.summands_) r.summands_.emplace_back(e, c * m);
    r.central_ = c * x.central_;
    return r;
}

AffineElement bracket(const AffineElement& x, const AffineElement& y) {
    if (x.matrix_size() != y.matrix_size())
        throw domain_error("bracket requires equal matrix sizes");
    AffineElement r(x.matrix_size());
    for (const auto& [ex, mx] : x.summands()) {
        const LaurentPoly px = LaurentPoly::monomial(ex, 1);
        for (const auto& [ey, my] : y.summands()) {
            const LaurentPoly py = LaurentPoly::monomial(ey, 1);
            r.add_term(ex + ey, mx * my - my * mx);
            const Rat pairing = (mx * my).trace();
            if (pairing != 0) r.add_central(pairing * residue_cocycle(px, py));
        }
    }
    return r;
}

bool is_integrable_admissible(const RootSystem& rs, const Weight& lambda, long level) {
    if (!lambda.dominant()) throw domain_error("highest weight must be dominant");
    return Int(level) >= rs.pair_coroot(lambda, rs.highest_root());
}

std::vector<IntegrableWeightAtLevel> enumerate_level_weights(const RootSystem& rs, long level) {
    std::vector<IntegrableWeightAtLevel> out;
    if (level < 0) return out;
    const int n = rs.rank();

    // <omega_i, theta^vee> >= 1 for every i, so coordinates are bounded by the level.
    std::vector<long> comark(n);
    for (int i = 0; i < n; ++i) {
        Weight omega{std::vector<int>(n, 0)};
        omega.fw[i] = 1;
        comark[i] = rs.pair_coroot(omega, rs.highest_root()).convert_to<long>();
    }

    std::vector<int> c(n, 0);
    while (true) {
        long pairing = 0;
        for (int i = 0; i < n; ++i) pairing += comark[i] * c[i];
        if (pairing <= level) out.push_back({Weight{c}, level});

        int k = 0;
        while (k < n && static_cast<long>(c[k] + 1) * comark[k] > level) c[k++] = 0;
        if (k == n) break;
        ++c[k];
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        const Int pa = rs.pair_coroot(a.weight, rs.highest_root());
        const Int pb = rs.pair_coroot(b.weight, rs.highest_root());
        return pa != pb ? pa < pb : a.weight.fw < b.weight.fw;
    });
    return out;
}

Int verma_graded_dim(const RootSystem& rs, const Int& dim_v, int d) {
    if (d < 0) throw domain_error("negative grading depth");
    const long dim_g = rs.rank() + 2 * static_cast<long>(rs.positive_roots().size());
    // coefficient of q^d in prod_{n >= 1} (1 - q^n)^{-dim_g}
    std::vector<Int> coeffs(d + 1, 0);
    coeffs[0] = 1;
    for (int n = 1; n <= d; ++n)
        for (long copy = 0; copy < dim_g; ++copy)
            for (int k = n; k <= d; ++k) coeffs[k] += coeffs[k - n];
    return dim_v * coeffs[d];
}

std::array<AffineElement, 3> triangular_project(const AffineElement& x) {
    AffineElement pos(x.matrix_size()), levi(x.matrix_size()), neg(x.matrix_size());
    for (const auto& [e, m] : x.summands()) {
        if (e > 0)
            pos.add_term(e, m);
        else if (e == 0)
            levi.add_term(e, m);
        else
            neg.add_term(e, m);
    }
    levi.add_central(x.central());
    return {pos, levi, neg};
}

}  // namespace kmx
