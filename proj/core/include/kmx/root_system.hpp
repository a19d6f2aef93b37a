#pragma once

#include <string>
#include <vector>

#include "kmx/matrix.hpp"
#include "kmx/numeric.hpp"

namespace kmx {

enum class TypeLabel : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

TypeLabel type_label_from_char(char c);
inline char to_char(TypeLabel t) { return static_cast<char>(t); }

/// Weight in fundamental-weight coordinates.
struct Weight {
    std::vector<int> fw;

    bool dominant() const {
        for (int c : fw)
            if (c < 0) return false;
        return true;
    }
    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& o) const { return fw < o.fw; }
};

/// Root in simple-root coordinates.
struct Root {
    std::vector<int> sr;

    int height() const {
        int h = 0;
        for (int c : sr) h += c;
        return h;
    }
    bool operator==(const Root&) const = default;
};

/// Cartan, root and coroot data of one simple type, with the invariant form
/// normalized so the highest root has squared length 2.
///
/// Conventions, fixed once for the whole project:
///   * simple roots are numbered as in Bourbaki,
///   * cartan()(i, j) = <alpha_j, alpha_i^vee>  (coroot indexes the row),
///   * weights are stored in fundamental-weight coordinates, roots in
///     simple-root coordinates; fw-coords of a root are cartan() * sr-coords.
class RootSystem {
public:
    static RootSystem build(TypeLabel type, int rank);
    static RootSystem build(char type, int rank) { return build(type_label_from_char(type), rank); }

    TypeLabel type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

    const IMat& cartan() const { return cartan_; }
    const RMat& inverse_cartan() const { return inv_cartan_; }
    /// d_i = (alpha_i, alpha_i) / 2; makes diag(d) * cartan symmetric.
    const std::vector<Rat>& symmetrizer() const { return sym_; }

    /// All positive roots, graded-lex ordered by (height, coordinates).
    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    const Root& highest_root() const { return highest_root_; }
    Weight rho() const { return Weight{std::vector<int>(rank_, 1)}; }

    Weight fw_of_root(const Root& r) const;

    /// <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha); always an integer.
    Int pair_coroot(const Weight& lambda, const Root& alpha) const;
    Int pair_coroot(const Root& beta, const Root& alpha) const;

    /// Invariant symmetric bilinear form with <theta, theta> = 2.
    Rat form(const Weight& x, const Weight& y) const;
    Rat form(const Root& x, const Root& y) const;
    Rat form(const Weight& x, const Root& y) const;

    /// 1 + <rho, theta^vee>.
    Int dual_coxeter() const;

    /// Coordinates of alpha^vee in the simple-coroot basis (integers for roots).
    std::vector<int> coroot_coords(const Root& alpha) const;

    /// Simple reflection s_i on weights / roots.
    Weight reflect(int i, const Weight& w) const;
    Root reflect(int i, const Root& r) const;

    /// The dominant representative of the Weyl orbit of w.
    Weight dominant_representative(const Weight& w) const;
    /// Full Weyl orbit, deterministically ordered.
    std::vector<Weight> weyl_orbit(const Weight& w) const;

private:
    RootSystem() = default;

    TypeLabel type_{};
    int rank_ = 0;
    IMat cartan_;
    RMat inv_cartan_;
    std::vector<Rat> sym_;
    std::vector<Root> positive_roots_;
    Root highest_root_;
};

}  // namespace kmx
