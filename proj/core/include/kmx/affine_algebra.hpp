#pragma once

#include <array>
#include <vector>

#include "kmx/laurent.hpp"
#include "kmx/matrix.hpp"
#include "kmx/root_system.hpp"

namespace kmx {

/// Element of the centrally extended loop algebra over trace-zero N x N
/// matrices: a finite sum of (matrix tensor Laurent monomial) plus a central
/// coefficient. Stored canonically as one matrix per exponent.
class AffineElement {
public:
    explicit AffineElement(int n) : n_(n) {}

    static AffineElement term(RMat x, const LaurentPoly& p);
    static AffineElement central_term(int n, Rat c) {
        AffineElement e(n);
        e.central_ = std::move(c);
        return e;
    }

    int matrix_size() const { return n_; }
    const Rat& central() const { return central_; }
    /// exponent -> matrix coefficient, no zero matrices stored, sorted.
    const std::vector<std::pair<int, RMat>>& summands() const { return summands_; }

    bool is_zero() const { return summands_.empty() && central_ == 0; }

    AffineElement& add_term(int exponent, const RMat& m);
    AffineElement& add_central(const Rat& c) {
        central_ += c;
        return *this;
    }

    friend AffineElement operator+(const AffineElement& x, const AffineElement& y);
    friend AffineElement operator-(const AffineElement& x, const AffineElement& y);
    AffineElement operator-() const;
    friend AffineElement operator*(const Rat& c, const AffineElement& x);

    bool operator==(const AffineElement&) const = default;

private:
    int n_;
    std::vector<std::pair<int, RMat>> summands_;
    Rat central_ = 0;
};

/// [X (x) P, Y (x) Q] = [X,Y] (x) PQ + tr(XY) Res(P' Q) K, extended
/// bilinearly; the central parts of the inputs contribute nothing.
AffineElement bracket(const AffineElement& x, const AffineElement& y);

struct IntegrableWeightAtLevel {
    Weight weight;
    long level;
    bool operator==(const IntegrableWeightAtLevel&) const = default;
};

/// Criterion: the level is at least <lambda, theta^vee>. Rejects
/// non-dominant lambda.
bool is_integrable_admissible(const RootSystem& rs, const Weight& lambda, long level);

/// All dominant weights admissible at the given level, ordered by
/// (<lambda, theta^vee>, coordinates); empty for negative levels.
std::vector<IntegrableWeightAtLevel> enumerate_level_weights(const RootSystem& rs, long level);

/// Graded dimension of the induced module at depth d: dim V times the number
/// of degree-d monomials in dim(g) generators for each negative t-degree.
Int verma_graded_dim(const RootSystem& rs, const Int& dim_v, int d);

/// Split by t-exponent sign: (positive part, degree-zero part + center,
/// negative part). The three parts sum back to the input.
std::array<AffineElement, 3> triangular_project(const AffineElement& x);

}  // namespace kmx
