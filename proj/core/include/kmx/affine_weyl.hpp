#pragma once

#include <optional>
#include <vector>

#include "kmx/root_system.hpp"

namespace kmx {

/// The affine Weyl group realized as (finite Weyl group) x (coroot lattice),
/// acting on the coroot lattice by affine maps v -> w(v) + mu. Generators are
/// the simple reflections s_1..s_rank plus the reflection s_0 in the affine
/// hyperplane of the highest root at level one, s_0(v) = s_theta(v) + theta^vee.
///
/// Elements carry the linear part as integer matrices on both the root and
/// coroot lattices (plus inverses) and the translation in simple-coroot
/// coordinates. Lengths and reduced words come from descent-directed
/// reduction: s_i w < w iff w^{-1}(a_i) is a negative affine root, with
/// a_0 = delta - theta. No closed length formula is assumed anywhere; the
/// test suite certifies lengths against exhaustive word enumeration.
class AffineWeylGroup {
public:
    explicit AffineWeylGroup(RootSystem rs);

    const RootSystem& root_system() const { return rs_; }
    int rank() const { return rs_.rank(); }
    /// Generator indices: 1..rank finite, 0 affine.
    int num_generators() const { return rs_.rank() + 1; }

    struct Element {
        IMat root_act, root_act_inv;  // action on the root lattice (sr coords)
        IMat cr_act, cr_act_inv;      // action on the coroot lattice
        std::vector<int> tr;          // translation, simple-coroot coordinates

        bool operator==(const Element& o) const { return cr_act == o.cr_act && tr == o.tr; }
    };

    Element identity() const;
    const Element& generator(int i) const { return gens_.at(i); }
    Element mul(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    Element translation(const std::vector<int>& mu) const;
    Element from_word(const std::vector<int>& word) const;

    bool is_identity(const Element& e) const;
    /// True iff l(s_i e) < l(e).
    bool left_descent(int i, const Element& e) const;
    /// True iff l(e s_i) < l(e); only finite generators are asked for.
    bool right_descent_finite(int i, const Element& e) const;

    long length(const Element& e) const;
    /// Deterministic reduced word (scans descents s_1..s_rank then s_0).
    std::vector<int> reduced_word(const Element& e) const;

    /// Bruhat order on the group, by the descent/lifting recursion.
    bool bruhat_leq(const Element& u, const Element& v) const;

    /// Coset of the finite Weyl group, labeled by the translation part.
    struct Coset {
        std::vector<int> cocharacter;  // simple-coroot coordinates (canonical label)
        long min_length = 0;
        std::vector<int> min_word;
    };

    Coset coset(const std::vector<int>& mu) const;
    long coset_min_length(const std::vector<int>& mu) const { return coset(mu).min_length; }

    /// u <= v iff min-rep(u) <= (min-rep(v)) w for some finite Weyl w.
    bool bruhat_leq_coset(const Coset& u, const Coset& v) const;

    /// All cosets of minimal length <= n, ordered by (length, cocharacter).
    std::vector<Coset> cosets_upto(long n) const;

    /// Coefficient vector of sum_{v <= w} q^{l(v)} (index = power of q).
    std::vector<Int> poincare_coefficients(const Coset& w) const;

    /// The finite Weyl group, enumerated once on demand and length-sorted.
    const std::vector<Element>& finite_weyl() const;

    /// Type A only: the tuple (n_1..n_N) with sum zero attached to a coset.
    std::vector<int> cocharacter_tuple(const Coset& c) const;
    /// max_i |n_i|: the least window depth whose lattice model sees the coset.
    int min_lattice_level(const Coset& c) const;

private:
    Element min_coset_representative(const std::vector<int>& mu) const;

    RootSystem rs_;
    std::vector<Element> gens_;       // [0..rank]
    std::vector<int> theta_coroot_;   // coroot coords of theta^vee
    mutable std::vector<Element> finite_weyl_;  // lazily filled
};

}  // namespace kmx
