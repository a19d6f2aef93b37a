#pragma once

#include <array>

#include "kmx/characters.hpp"
#include "kmx/numeric.hpp"

namespace kmx {

/// The two truncated cohomology rings the degree bookkeeping lives in:
///   S4:   Z[Omega] / (Omega^2),            basis {1, Omega}
///   CxX0: Z[a, b] / (a^2, b^2), ab = ba,   basis {1, a, b, ab}
enum class RingId { S4, CxX0 };

struct TruncatedClass {
    RingId ring;
    std::array<Int, 4> coeff{};  // S4 uses slots {1, Omega, -, -}

    static TruncatedClass s4(Int unit, Int omega) {
        return {RingId::S4, {std::move(unit), std::move(omega), 0, 0}};
    }
    static TruncatedClass cxx0(Int unit, Int a, Int b, Int ab) {
        return {RingId::CxX0, {std::move(unit), std::move(a), std::move(b), std::move(ab)}};
    }
    bool operator==(const TruncatedClass&) const = default;
};

TruncatedClass ring_add(const TruncatedClass& x, const TruncatedClass& y);
TruncatedClass ring_sub(const TruncatedClass& x, const TruncatedClass& y);
/// Product with the truncation relations applied; throws on mixed rings.
TruncatedClass ring_mul(const TruncatedClass& x, const TruncatedClass& y);

/// Omega-coefficient of c2 of the rank-(m+1) string bundle, obtained by
/// running the tensor-with-the-standard-string recursion up from the m = 0
/// and m = 1 seeds (never by evaluating the closed form C(m+2,3)).
Int c2_of_wm(int m);

/// Bookkeeping for the direct-image first Chern class: with c1 = 0 and
/// c2 = l * ab, pushing forward along the second projection gives -l * a,
/// and dualizing the determinant flips the sign. Returns the a-coefficient l.
Int grr_det_class(const Int& l);

/// Total c2 of a sum of strings: sum of c2_of_wm(dim - 1) over summands.
Int string_bundle_c2(const Sl2Strings& strings);

}  // namespace kmx
