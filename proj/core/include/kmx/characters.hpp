#pragma once

#include <map>
#include <vector>

#include "kmx/root_system.hpp"

namespace kmx {

/// Finite formal character: weight (fw coordinates) -> multiplicity.
struct Character {
    std::map<std::vector<int>, Int> entries;

    Int total_mass() const {
        Int s = 0;
        for (const auto& [w, m] : entries) s += m;
        return s;
    }
    Int multiplicity(const std::vector<int>& fw) const {
        auto it = entries.find(fw);
        return it == entries.end() ? Int(0) : it->second;
    }
    void add(const std::vector<int>& fw, const Int& m) {
        if (m == 0) return;
        auto [it, fresh] = entries.emplace(fw, m);
        if (!fresh) {
            it->second += m;
            if (it->second == 0) entries.erase(it);
        }
    }
    bool operator==(const Character&) const = default;
};

/// Multiset of irreducible sl2-summand dimensions, keyed dim -> count.
struct Sl2Strings {
    std::map<int, Int, std::greater<int>> dims;

    Int total_dim() const {
        Int s = 0;
        for (const auto& [d, c] : dims) s += d * c;
        return s;
    }
    Int count(int dim) const {
        auto it = dims.find(dim);
        return it == dims.end() ? Int(0) : it->second;
    }
    bool operator==(const Sl2Strings&) const = default;
};

/// Full character of the irreducible module with highest weight lambda,
/// computed by the Freudenthal recursion over dominant weights and expanded
/// over Weyl orbits. All arithmetic exact; rejects non-dominant lambda.
Character weight_multiplicities(const RootSystem& rs, const Weight& lambda);

/// Product formula prod_{beta > 0} (lambda + rho, beta) / (rho, beta).
Int dimension(const RootSystem& rs, const Weight& lambda);

/// The dominant weights mu <= lambda (lambda - mu a nonnegative root sum),
/// ordered by increasing height of lambda - mu.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

/// Decompose a character into strings under the sl2 spanned by the +-theta
/// root spaces: N_k = sum of multiplicities at coroot-pairing k, and the
/// number of strings with top eigenvalue k >= 0 is N_k - N_{k+2}.
/// Throws domain_error on characters that are not consistent with any
/// decomposition (negative peel count or N_k != N_{-k}).
Sl2Strings sl2_theta_decompose(const RootSystem& rs, const Character& ch);

/// Highest weights in the tensor product of the (m+1)-dimensional irreducible
/// sl2 module with the 2-dimensional one: {m+1, m-1} for m >= 1, {1} for m = 0.
std::vector<int> clebsch_gordan_with_w1(int m);

}  // namespace kmx
