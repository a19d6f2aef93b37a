#include "kmx/chern.hpp"

namespace kmx {

namespace {

void check_same_ring(const TruncatedClass& x, const TruncatedClass& y) {
    if (x.ring != y.ring) throw domain_error("cannot mix classes from different rings");
}

}  // namespace

TruncatedClass ring_add(const TruncatedClass& x, const TruncatedClass& y) {
    check_same_ring(x, y);
    TruncatedClass r = x;
    for (int i = 0; i < 4; ++i) r.coeff[i] += y.coeff[i];
    return r;
}

TruncatedClass ring_sub(const TruncatedClass& x, const TruncatedClass& y) {
    check_same_ring(x, y);
    TruncatedClass r = x;
    for (int i = 0; i < 4; ++i) r.coeff[i] -= y.coeff[i];
    return r;
}

TruncatedClass ring_mul(const TruncatedClass& x, const TruncatedClass& y) {
    check_same_ring(x, y);
    TruncatedClass r{x.ring, {0, 0, 0, 0}};
    if (x.ring == RingId::S4) {
        // (u + v Omega)(u' + v' Omega), Omega^2 = 0
        r.coeff[0] = x.coeff[0] * y.coeff[0];
        r.coeff[1] = x.coeff[0] * y.coeff[1] + x.coeff[1] * y.coeff[0];
    } else {
        // basis 1, a, b, ab with a^2 = b^2 = 0
        r.coeff[0] = x.coeff[0] * y.coeff[0];
        r.coeff[1] = x.coeff[0] * y.coeff[1] + x.coeff[1] * y.coeff[0];
        r.coeff[2] = x.coeff[0] * y.coeff[2] + x.coeff[2] * y.coeff[0];
        r.coeff[3] = x.coeff[0] * y.coeff[3] + x.coeff[3] * y.coeff[0] +
                     x.coeff[1] * y.coeff[2] + x.coeff[2] * y.coeff[1];
    }
    return r;
}

Int c2_of_wm(int m) {
    if (m < 0) throw domain_error("negative sl2 highest weight");
    // ch of the rank-(m+1) bundle in the truncated ring: (m+1) * 1 - c2 * Omega.
    auto ch_of = [](int rank, const Int& c2) { return TruncatedClass::s4(rank, -c2); };
    Int prev = 0;  // c2 at m = 0
    Int cur = 1;   // c2 at m = 1
    if (m == 0) return prev;
    for (int k = 1; k < m; ++k) {
        // ch W(k+1) = ch W(k) . ch W(1) - ch W(k-1)
        const TruncatedClass next =
            ring_sub(ring_mul(ch_of(k + 1, cur), ch_of(2, 1)), ch_of(k, prev));
        if (next.coeff[0] != k + 2) throw domain_error("rank bookkeeping broke in c2 recursion");
        prev = cur;
        cur = -next.coeff[1];
    }
    return cur;
}

Int grr_det_class(const Int& l) {
    // c2 of the restricted family in the product ring, with c1 = 0.
    const TruncatedClass c2 = TruncatedClass::cxx0(0, 0, 0, l);
    // Direct image: c1 = pushforward of -c2; only the ab term survives, ab -> a.
    const Int c1_direct_image = -c2.coeff[3];
    // Det is dual to the direct image determinant, so flip the sign.
    return -c1_direct_image;
}

Int string_bundle_c2(const Sl2Strings& strings) {
    Int s = 0;
    for (const auto& [dim, count] : strings.dims) s += count * c2_of_wm(dim - 1);
    return s;
}

}  // namespace kmx
