#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kmx/laurent.hpp"
#include "kmx/matrix.hpp"

namespace kmx {

/// The finite window V_n = t^{-n} L_0 / t^n L_0 for rank-N lattices, with
/// ordered basis {t^j e_i : -n <= j <= n-1} (degree-major, index-minor).
/// Multiplication by t shifts a basis vector one degree up and kills the top
/// degree, so it acts on row indices by r -> r + N.
struct TruncWindow {
    int N = 0;
    int n = 0;

    int dim() const { return 2 * n * N; }
    int row_of(int degree, int index) const { return (degree + n) * N + index; }
    int degree_of(int row) const { return row / N - n; }
    int index_of(int row) const { return row % N; }
    bool operator==(const TruncWindow&) const = default;
};

/// Field tags. Subspace arithmetic is generic over the two of them.
struct RationalField {
    using Elem = Rat;
    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) { return 1 / a; }
    static bool is_zero(const Elem& a) { return a == 0; }
};

struct PrimeField {
    std::uint32_t p = 2;
    using Elem = std::uint32_t;
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return (static_cast<std::uint64_t>(a) * b) % p; }
    Elem neg(Elem a) const { return (p - a) % p; }
    Elem inv(Elem a) const;
    static bool is_zero(Elem a) { return a == 0; }
};

/// Subspace of a window, held as the reduced column echelon basis (pivot =
/// first nonzero row from the top; pivots normalized to 1 and cleared across
/// columns; columns sorted by pivot row). The echelon form is the canonical
/// representative, so equality of subspaces is equality of these objects.
template <class F>
struct LatticeSubspace {
    TruncWindow window;
    Mat<typename F::Elem> basis;  // window.dim() x dim columns

    int dim() const { return static_cast<int>(basis.cols()); }
    bool operator==(const LatticeSubspace&) const = default;
};

using LatticeSubspaceQ = LatticeSubspace<RationalField>;
using LatticeSubspaceP = LatticeSubspace<PrimeField>;

/// Canonicalize arbitrary spanning columns (drops dependent columns).
LatticeSubspaceQ make_subspace(const TruncWindow& w, const RMat& columns);
LatticeSubspaceP make_subspace_mod_p(const TruncWindow& w, const PrimeField& f,
                                     const Mat<std::uint32_t>& columns);

/// A window point: dimension nN and stability under multiplication by t.
/// Throws on a basis with the wrong ambient dimension.
bool is_lattice_point(const LatticeSubspaceQ& w);
bool is_lattice_point(const PrimeField& f, const LatticeSubspaceP& w);

/// The diagonal-cocharacter point: span of {t^j e_i : mu_i <= j <= n-1}.
/// Requires sum(mu) = 0 and max|mu_i| <= n (else out_of_window_error carrying
/// the smallest adequate depth).
LatticeSubspaceQ cocharacter_point(const std::vector<int>& mu, const TruncWindow& w);
LatticeSubspaceP cocharacter_point_mod_p(const std::vector<int>& mu, const TruncWindow& w,
                                         const PrimeField& f);

/// The window-to-window embedding W -> t^n V + W into depth n+1.
LatticeSubspaceQ embed_next(const LatticeSubspaceQ& w);
LatticeSubspaceP embed_next(const PrimeField& f, const LatticeSubspaceP& w);

/// N x N matrix of Laurent polynomials over the rationals.
struct LoopMatrix {
    int N = 0;
    std::vector<LaurentPoly> entries;  // row-major

    LoopMatrix() = default;
    explicit LoopMatrix(int n) : N(n), entries(static_cast<std::size_t>(n) * n) {}
    static LoopMatrix identity(int n);
    LaurentPoly& at(int i, int j) { return entries[static_cast<std::size_t>(i) * N + j]; }
    const LaurentPoly& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * N + j];
    }
    friend LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b);
    bool operator==(const LoopMatrix&) const = default;
};

LaurentPoly loop_determinant(const LoopMatrix& g);

/// Write det g = t^k u with u(0) != 0 and rescale the last column by
/// t^{-k} u^{-1}, so the result has determinant 1. The unit inverse is a
/// power series; it is truncated at `trunc_order` terms, which is exact
/// whenever u is a constant (the case for every in-scope input) and exact to
/// the window depth otherwise. Throws domain_error on a singular input.
LoopMatrix normalize_determinant(const LoopMatrix& g, int trunc_order = 16);

/// The lattice spanned by the columns of g (an element with det 1), read in
/// the given window. Throws out_of_window_error with the minimal sufficient
/// depth when the window cannot hold g L_0.
LatticeSubspaceQ lattice_from_group(const LoopMatrix& g, const TruncWindow& w);

/// Smallest n with t^n L_0 inside g L_0 inside t^-n L_0; needs det g = 1.
int min_window_depth(const LoopMatrix& g);

/// Exhaustive count of t-stable mid-dimensional subspaces of the window over
/// F_q, by enumeration of reduced column echelon forms. Pivot patterns that
/// cannot carry a stable subspace are discarded before the scan; the number
/// of remaining candidates is checked against `budget` (explicit refusal, no
/// partial counts). `jobs` > 1 splits the pattern list across threads.
Int count_points(int N, int n, std::uint32_t q, Int budget = Int(200'000'000), int jobs = 1);

/// Number of echelon candidates the scan would visit (after pattern pruning).
Int count_points_workload(int N, int n, std::uint32_t q);

}  // namespace kmx
