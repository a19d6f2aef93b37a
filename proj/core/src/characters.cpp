#include "kmx/characters.hpp"

#include <algorithm>

namespace kmx {

namespace {

Weight add_fw(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.fw.size(); ++i) r.fw[i] += b.fw[i];
    return r;
}

}  // namespace

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.dominant()) throw domain_error("highest weight must be dominant");
    const int n = rs.rank();

    // mu = lambda - A c with c >= 0; since A^{-1} is entrywise positive on
    // finite types, c <= A^{-1} fw(lambda) componentwise bounds the search box.
    std::vector<long> bound(n);
    for (int i = 0; i < n; ++i) {
        Rat b = 0;
        for (int j = 0; j < n; ++j) b += rs.inverse_cartan()(i, j) * lambda.fw[j];
        const Int fl = boost::multiprecision::numerator(b) / boost::multiprecision::denominator(b);
        bound[i] = fl.convert_to<long>();
    }

    struct Item {
        int height;
        std::vector<int> fw;
    };
    std::vector<Item> found;
    std::vector<int> c(n, 0);
    while (true) {
        int height = 0;
        for (int v : c) height += v;
        std::vector<int> fw(n);
        bool dom = true;
        for (int i = 0; i < n; ++i) {
            int v = lambda.fw[i];
            for (int j = 0; j < n; ++j) v -= rs.cartan()(i, j) * c[j];
            fw[i] = v;
            if (v < 0) dom = false;
        }
        if (dom) found.push_back({height, fw});

        int k = 0;
        while (k < n && c[k] == bound[k]) c[k++] = 0;
        if (k == n) break;
        ++c[k];
    }
    std::sort(found.begin(), found.end(), [](const Item& a, const Item& b) {
        return a.height != b.height ? a.height < b.height : a.fw < b.fw;
    });
    std::vector<Weight> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(Weight{std::move(f.fw)});
    return out;
}

Character weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.dominant()) throw domain_error("highest weight must be dominant");
    const int n = rs.rank();
    const Weight rho = rs.rho();
    const auto& positives = rs.positive_roots();

    // (alpha, alpha) per positive root, reused in the inner loop.
    std::vector<Rat> alpha_sq;
    alpha_sq.reserve(positives.size());
    for (const auto& a : positives) alpha_sq.push_back(rs.form(a, a));

    const auto dominants = dominant_weights_below(rs, lambda);
    std::map<std::vector<int>, Int> mult;  // dominant fw -> multiplicity
    mult[lambda.fw] = 1;

    const Rat lam_norm = rs.form(add_fw(lambda, rho), add_fw(lambda, rho));

    auto lookup = [&](const Weight& w) -> Int {
        const Weight d = rs.dominant_representative(w);
        auto it = mult.find(d.fw);
        return it == mult.end() ? Int(0) : it->second;
    };

    // Root-lattice coordinates of lambda - mu, for the cone test below.
    auto gap_coords = [&](const Weight& mu) {
        std::vector<long> c(n);
        for (int i = 0; i < n; ++i) {
            Rat ci = 0;
            for (int j = 0; j < n; ++j) ci += rs.inverse_cartan()(i, j) * (lambda.fw[j] - mu.fw[j]);
            c[i] = rat_to_int(ci).convert_to<long>();
        }
        return c;
    };

    for (const auto& mu : dominants) {
        if (mu.fw == lambda.fw) continue;
        const auto gap = gap_coords(mu);
        // Freudenthal: ((l+r, l+r) - (m+r, m+r)) mult(m)
        //   = 2 sum_{a > 0} sum_{k >= 1} mult(m + k a) (m + k a, a)
        Rat numer = 0;
        for (std::size_t ai = 0; ai < positives.size(); ++ai) {
            const Root& a = positives[ai];
            const Weight afw = rs.fw_of_root(a);
            const Rat mu_a = rs.form(mu, a);
            Weight shifted = mu;
            for (int k = 1;; ++k) {
                shifted = add_fw(shifted, afw);
                // mu + k a <= lambda is necessary for a nonzero multiplicity,
                // and once it fails it fails for every larger k.
                bool inside = true;
                for (int i = 0; i < n; ++i)
                    if (gap[i] - static_cast<long>(k) * a.sr[i] < 0) { inside = false; break; }
                if (!inside) break;
                const Int m = lookup(shifted);
                if (m != 0) numer += 2 * Rat(m) * (mu_a + k * alpha_sq[ai]);
            }
        }
        const Rat denom = lam_norm - rs.form(add_fw(mu, rho), add_fw(mu, rho));
        const Int m = rat_to_int(numer / denom);
        if (m <= 0) throw domain_error("Freudenthal produced a non-positive multiplicity");
        mult[mu.fw] = m;
    }

    Character ch;
    for (const auto& [fw, m] : mult)
        for (const auto& w : rs.weyl_orbit(Weight{fw})) ch.add(w.fw, m);
    return ch;
}

Int dimension(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.dominant()) throw domain_error("highest weight must be dominant");
    const Weight rho = rs.rho();
    const Weight lr = add_fw(lambda, rho);
    Rat prod = 1;
    for (const auto& beta : rs.positive_roots())
        prod *= rs.form(lr, beta) / rs.form(rho, beta);
    return rat_to_int(prod);
}

Sl2Strings sl2_theta_decompose(const RootSystem& rs, const Character& ch) {
    const Root& theta = rs.highest_root();
    std::map<long, Int> level;  // k -> N_k
    for (const auto& [fw, m] : ch.entries) {
        const Int k = rs.pair_coroot(Weight{fw}, theta);
        level[k.convert_to<long>()] += m;
    }
    auto n_at = [&](long k) -> Int {
        auto it = level.find(k);
        return it == level.end() ? Int(0) : it->second;
    };
    long top = 0;
    for (const auto& [k, nk] : level) top = std::max(top, std::abs(k));
    for (long k = 0; k <= top; ++k)
        if (n_at(k) != n_at(-k)) throw domain_error("malformed character: N_k != N_{-k}");

    Sl2Strings s;
    for (long k = top; k >= 0; --k) {
        const Int peeled = n_at(k) - n_at(k + 2);
        if (peeled < 0) throw domain_error("malformed character: negative string count");
        if (peeled > 0) s.dims[static_cast<int>(k) + 1] = peeled;
    }
    if (s.total_dim() != ch.total_mass())
        throw domain_error("malformed character: string peeling lost mass");
    return s;
}

std::vector<int> clebsch_gordan_with_w1(int m) {
    if (m < 0) throw domain_error("negative sl2 highest weight");
    if (m == 0) return {1};
    return {m + 1, m - 1};
}

}  // namespace kmx
