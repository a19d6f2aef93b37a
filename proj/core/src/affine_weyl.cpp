#include "kmx/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace kmx {

namespace {

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<int> apply(const IMat& m, const std::vector<int>& v) {
    std::vector<int> r(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

bool all_nonneg(const std::vector<int>& v) {
    for (int x : v)
        if (x < 0) return false;
    return true;
}

bool is_zero(const std::vector<int>& v) {
    for (int x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

AffineWeylGroup::AffineWeylGroup(RootSystem rs) : rs_(std::move(rs)) {
    const int n = rs_.rank();
    theta_coroot_ = rs_.coroot_coords(rs_.highest_root());

    gens_.resize(n + 1);
    // Finite generators: reflections in the simple roots.
    for (int i = 1; i <= n; ++i) {
        Element e{IMat::identity(n), IMat::identity(n), IMat::identity(n), IMat::identity(n),
                  std::vector<int>(n, 0)};
        // On the root lattice: s_i(c) = c - (A c)_i e_i, column by column.
        // On the coroot lattice: s_i(v) = v - (A^T v)_i e_i.
        for (int j = 0; j < n; ++j) {
            e.root_act(i - 1, j) -= rs_.cartan()(i - 1, j);
            e.cr_act(i - 1, j) -= rs_.cartan()(j, i - 1);
        }
        e.root_act_inv = e.root_act;  // involution
        e.cr_act_inv = e.cr_act;
        gens_[i] = std::move(e);
    }
    // Affine generator: s_theta composed with translation by theta^vee.
    {
        Element e{IMat(n, n), IMat(n, n), IMat(n, n), IMat(n, n), theta_coroot_};
        const Root& theta = rs_.highest_root();
        const Weight theta_fw = rs_.fw_of_root(theta);
        for (int j = 0; j < n; ++j) {
            // s_theta on roots: beta - <beta, theta^vee> theta
            Root basis{std::vector<int>(n, 0)};
            basis.sr[j] = 1;
            const int pairing = static_cast<int>(rs_.pair_coroot(basis, theta).convert_to<long>());
            for (int i = 0; i < n; ++i)
                e.root_act(i, j) = (i == j ? 1 : 0) - pairing * theta.sr[i];
            // s_theta on coroots: v - <theta, v> theta^vee; <theta, e_j> = fw(theta)_j
            for (int i = 0; i < n; ++i)
                e.cr_act(i, j) = (i == j ? 1 : 0) - theta_fw.fw[j] * theta_coroot_[i];
        }
        e.root_act_inv = e.root_act;  // s_theta is an involution
        e.cr_act_inv = e.cr_act;
        gens_[0] = std::move(e);
    }
}

AffineWeylGroup::Element AffineWeylGroup::identity() const {
    const int n = rs_.rank();
    return {IMat::identity(n), IMat::identity(n), IMat::identity(n), IMat::identity(n),
            std::vector<int>(n, 0)};
}

AffineWeylGroup::Element AffineWeylGroup::mul(const Element& a, const Element& b) const {
    Element r;
    r.root_act = a.root_act * b.root_act;
    r.root_act_inv = b.root_act_inv * a.root_act_inv;
    r.cr_act = a.cr_act * b.cr_act;
    r.cr_act_inv = b.cr_act_inv * a.cr_act_inv;
    r.tr = add(a.tr, apply(a.cr_act, b.tr));
    return r;
}

AffineWeylGroup::Element AffineWeylGroup::inverse(const Element& a) const {
    Element r;
    r.root_act = a.root_act_inv;
    r.root_act_inv = a.root_act;
    r.cr_act = a.cr_act_inv;
    r.cr_act_inv = a.cr_act;
    r.tr = apply(a.cr_act_inv, a.tr);
    for (int& x : r.tr) x = -x;
    return r;
}

AffineWeylGroup::Element AffineWeylGroup::translation(const std::vector<int>& mu) const {
    if (static_cast<int>(mu.size()) != rs_.rank())
        throw domain_error("cocharacter has wrong rank");
    Element e = identity();
    e.tr = mu;
    return e;
}

AffineWeylGroup::Element AffineWeylGroup::from_word(const std::vector<int>& word) const {
    Element e = identity();
    for (int i : word) e = mul(e, generator(i));
    return e;
}

bool AffineWeylGroup::is_identity(const Element& e) const {
    return is_zero(e.tr) && e.cr_act == IMat::identity(rs_.rank());
}

// Affine roots are pairs (alpha, k) standing for alpha + k delta; negative
// iff k < 0 or (k == 0 and alpha < 0).
bool AffineWeylGroup::left_descent(int i, const Element& e) const {
    const int n = rs_.rank();
    // simple affine root a_i
    std::vector<int> alpha(n, 0);
    int k = 0;
    if (i == 0) {
        for (int j = 0; j < n; ++j) alpha[j] = -rs_.highest_root().sr[j];
        k = 1;
    } else {
        alpha[i - 1] = 1;
    }
    // e^{-1}(alpha + k delta) = w^{-1} alpha + (k + <alpha, mu>) delta
    const Weight alpha_fw = rs_.fw_of_root(Root{alpha});
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += alpha_fw.fw[j] * e.tr[j];
    const int k2 = k + pairing;
    if (k2 != 0) return k2 < 0;
    const std::vector<int> moved = apply(e.root_act_inv, alpha);
    return !all_nonneg(moved);
}

bool AffineWeylGroup::right_descent_finite(int i, const Element& e) const {
    const int n = rs_.rank();
    // e(alpha_i + 0 delta) = w alpha_i - <w alpha_i, mu> delta
    std::vector<int> alpha(n, 0);
    alpha[i - 1] = 1;
    const std::vector<int> moved = apply(e.root_act, alpha);
    const Weight moved_fw = rs_.fw_of_root(Root{moved});
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += moved_fw.fw[j] * e.tr[j];
    const int k2 = -pairing;
    if (k2 != 0) return k2 < 0;
    return !all_nonneg(moved);
}

long AffineWeylGroup::length(const Element& e) const {
    long len = 0;
    Element cur = e;
    while (!is_identity(cur)) {
        bool found = false;
        for (int i = 1; i <= rs_.rank() + 1; ++i) {
            const int gen = i % (rs_.rank() + 1);  // scan 1..rank then 0
            if (left_descent(gen, cur)) {
                cur = mul(generator(gen), cur);
                ++len;
                found = true;
                break;
            }
        }
        if (!found) throw domain_error("non-identity element without a descent");
    }
    return len;
}

std::vector<int> AffineWeylGroup::reduced_word(const Element& e) const {
    std::vector<int> word;
    Element cur = e;
    while (!is_identity(cur)) {
        bool found = false;
        for (int i = 1; i <= rs_.rank() + 1; ++i) {
            const int gen = i % (rs_.rank() + 1);
            if (left_descent(gen, cur)) {
                word.push_back(gen);
                cur = mul(generator(gen), cur);
                found = true;
                break;
            }
        }
        if (!found) throw domain_error("non-identity element without a descent");
    }
    return word;
}

bool AffineWeylGroup::bruhat_leq(const Element& u, const Element& v) const {
    long lu = length(u), lv = length(v);
    Element uu = u, vv = v;
    // Lifting recursion: with s v < v,
    //   u <= v  iff  s u <= s v (when s u < u)  iff  u <= s v (when s u > u).
    while (true) {
        if (lu > lv) return false;
        if (lu == 0) return true;
        int s = -1;
        for (int i = 1; i <= rs_.rank() + 1; ++i) {
            const int gen = i % (rs_.rank() + 1);
            if (left_descent(gen, vv)) {
                s = gen;
                break;
            }
        }
        vv = mul(generator(s), vv);
        --lv;
        if (left_descent(s, uu)) {
            uu = mul(generator(s), uu);
            --lu;
        }
    }
}

AffineWeylGroup::Element AffineWeylGroup::min_coset_representative(
    const std::vector<int>& mu) const {
    Element e = translation(mu);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= rs_.rank(); ++i)
            if (right_descent_finite(i, e)) {
                e = mul(e, generator(i));
                moved = true;
                break;
            }
    }
    return e;
}

AffineWeylGroup::Coset AffineWeylGroup::coset(const std::vector<int>& mu) const {
    const Element rep = min_coset_representative(mu);
    Coset c;
    c.cocharacter = mu;
    c.min_word = reduced_word(rep);
    c.min_length = static_cast<long>(c.min_word.size());
    return c;
}

bool AffineWeylGroup::bruhat_leq_coset(const Coset& u, const Coset& v) const {
    const Element urep = from_word(u.min_word);
    const Element vrep = from_word(v.min_word);
    for (const Element& w : finite_weyl())
        if (bruhat_leq(urep, mul(vrep, w))) return true;
    return false;
}

std::vector<AffineWeylGroup::Coset> AffineWeylGroup::cosets_upto(long n) const {
    std::map<std::vector<int>, Coset> seen;
    std::queue<std::vector<int>> todo;
    if (n < 0) return {};
    seen.emplace(std::vector<int>(rs_.rank(), 0), coset(std::vector<int>(rs_.rank(), 0)));
    todo.push(std::vector<int>(rs_.rank(), 0));
    while (!todo.empty()) {
        const auto label = todo.front();
        todo.pop();
        const Coset& cur = seen.at(label);
        if (cur.min_length == n) continue;  // neighbors would exceed n
        const Element rep = from_word(cur.min_word);
        for (int g = 0; g <= rs_.rank(); ++g) {
            const Element next = mul(generator(g), rep);
            if (seen.count(next.tr)) continue;
            Coset c = coset(next.tr);
            if (c.min_length <= n) {
                todo.push(next.tr);
                seen.emplace(next.tr, std::move(c));
            }
        }
    }
    std::vector<Coset> out;
    out.reserve(seen.size());
    for (auto& [label, c] : seen) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const Coset& a, const Coset& b) {
        return a.min_length != b.min_length ? a.min_length < b.min_length
                                            : a.cocharacter < b.cocharacter;
    });
    return out;
}

std::vector<Int> AffineWeylGroup::poincare_coefficients(const Coset& w) const {
    std::vector<Int> coeffs(w.min_length + 1, 0);
    for (const Coset& v : cosets_upto(w.min_length))
        if (bruhat_leq_coset(v, w)) coeffs[v.min_length] += 1;
    return coeffs;
}

const std::vector<AffineWeylGroup::Element>& AffineWeylGroup::finite_weyl() const {
    if (!finite_weyl_.empty()) return finite_weyl_;
    std::vector<Element> all{identity()};
    std::map<std::vector<int>, bool> seen;  // keyed by flattened cr_act
    auto key = [&](const Element& e) {
        std::vector<int> k;
        for (std::size_t i = 0; i < e.cr_act.rows(); ++i)
            for (std::size_t j = 0; j < e.cr_act.cols(); ++j) k.push_back(e.cr_act(i, j));
        return k;
    };
    seen[key(all[0])] = true;
    std::size_t head = 0;
    constexpr std::size_t kMaxFiniteWeyl = 2'000'000;
    while (head < all.size()) {
        const Element cur = all[head++];
        for (int i = 1; i <= rs_.rank(); ++i) {
            Element next = mul(cur, generator(i));
            if (!seen.emplace(key(next), true).second) continue;
            all.push_back(std::move(next));
            if (all.size() > kMaxFiniteWeyl)
                throw domain_error("finite Weyl group too large to enumerate");
        }
    }
    std::vector<std::pair<long, std::size_t>> order(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) order[i] = {length(all[i]), i};
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : key(all[a.second]) < key(all[b.second]);
    });
    finite_weyl_.reserve(all.size());
    for (const auto& [len, idx] : order) finite_weyl_.push_back(all[idx]);
    return finite_weyl_;
}

std::vector<int> AffineWeylGroup::cocharacter_tuple(const Coset& c) const {
    if (rs_.type() != TypeLabel::A)
        throw domain_error("cocharacter tuples are defined for type A only");
    const int n = rs_.rank();
    std::vector<int> tuple(n + 1, 0);
    // coroot basis alpha_i^vee = e_i - e_{i+1}
    tuple[0] = c.cocharacter[0];
    for (int i = 1; i < n; ++i) tuple[i] = c.cocharacter[i] - c.cocharacter[i - 1];
    tuple[n] = -c.cocharacter[n - 1];
    return tuple;
}

int AffineWeylGroup::min_lattice_level(const Coset& c) const {
    int level = 0;
    for (int v : cocharacter_tuple(c)) level = std::max(level, std::abs(v));
    return level;
}

}  // namespace kmx
