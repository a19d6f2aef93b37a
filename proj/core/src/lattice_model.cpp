#include "kmx/lattice_model.hpp"

#include <algorithm>
#include <thread>

namespace kmx {

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw domain_error("division by zero mod p");
    Elem r = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

namespace {

// Incremental reduced column echelon form: pivot = first nonzero row from the
// top, pivots normalized to 1 and cleared across all other columns.
template <class F>
class Echelon {
public:
    Echelon(const F& f, int rows) : f_(f), rows_(rows) {}

    void insert(std::vector<typename F::Elem> v) {
        for (;;) {
            int lead = -1;
            for (int r = 0; r < rows_; ++r)
                if (!F::is_zero(v[r])) { lead = r; break; }
            if (lead < 0) return;  // dependent column
            int slot = -1;
            for (std::size_t c = 0; c < cols_.size(); ++c)
                if (pivots_[c] == lead) { slot = static_cast<int>(c); break; }
            if (slot < 0) {
                const auto inv = f_.inv(v[lead]);
                for (auto& x : v) x = f_.mul(x, inv);
                // clear this pivot row in the existing columns
                for (std::size_t c = 0; c < cols_.size(); ++c) {
                    const auto coef = cols_[c][lead];
                    if (F::is_zero(coef)) continue;
                    for (int r = 0; r < rows_; ++r)
                        cols_[c][r] = f_.sub(cols_[c][r], f_.mul(coef, v[r]));
                }
                cols_.push_back(std::move(v));
                pivots_.push_back(lead);
                return;
            }
            const auto coef = v[lead];
            for (int r = 0; r < rows_; ++r)
                v[r] = f_.sub(v[r], f_.mul(coef, cols_[slot][r]));
        }
    }

    /// Reduce v against the basis; true iff the remainder is zero.
    bool contains(std::vector<typename F::Elem> v) const {
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            const auto coef = v[pivots_[c]];
            if (F::is_zero(coef)) continue;
            for (int r = 0; r < rows_; ++r)
                v[r] = f_.sub(v[r], f_.mul(coef, cols_[c][r]));
        }
        for (const auto& x : v)
            if (!F::is_zero(x)) return false;
        return true;
    }

    Mat<typename F::Elem> matrix() const {
        std::vector<std::size_t> order(cols_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        Mat<typename F::Elem> m(rows_, cols_.size());
        for (std::size_t c = 0; c < order.size(); ++c)
            for (int r = 0; r < rows_; ++r) m(r, c) = cols_[order[c]][r];
        return m;
    }

private:
    F f_;
    int rows_;
    std::vector<std::vector<typename F::Elem>> cols_;
    std::vector<int> pivots_;
};

template <class F>
LatticeSubspace<F> make_subspace_impl(const TruncWindow& w, const F& f,
                                      const Mat<typename F::Elem>& columns) {
    if (static_cast<int>(columns.rows()) != w.dim())
        throw domain_error("basis has wrong ambient dimension for this window");
    Echelon<F> ech(f, w.dim());
    for (std::size_t c = 0; c < columns.cols(); ++c) {
        std::vector<typename F::Elem> v(w.dim());
        for (int r = 0; r < w.dim(); ++r) v[r] = columns(r, c);
        ech.insert(std::move(v));
    }
    return LatticeSubspace<F>{w, ech.matrix()};
}

template <class F>
std::vector<typename F::Elem> shift_column(const TruncWindow& w,
                                           const Mat<typename F::Elem>& m, int col) {
    std::vector<typename F::Elem> s(w.dim(), typename F::Elem{});
    for (int r = 0; r + w.N < w.dim(); ++r) s[r + w.N] = m(r, col);
    return s;
}

template <class F>
bool is_lattice_point_impl(const F& f, const LatticeSubspace<F>& sub) {
    const TruncWindow& w = sub.window;
    if (static_cast<int>(sub.basis.rows()) != w.dim())
        throw domain_error("basis has wrong ambient dimension for this window");
    if (sub.dim() != w.n * w.N) return false;
    Echelon<F> ech(f, w.dim());
    for (int c = 0; c < sub.dim(); ++c) {
        std::vector<typename F::Elem> v(w.dim());
        for (int r = 0; r < w.dim(); ++r) v[r] = sub.basis(r, c);
        ech.insert(std::move(v));
    }
    for (int c = 0; c < sub.dim(); ++c)
        if (!ech.contains(shift_column<F>(w, sub.basis, c))) return false;
    return true;
}

template <class F>
LatticeSubspace<F> cocharacter_point_impl(const std::vector<int>& mu, const TruncWindow& w,
                                          const F& f) {
    if (static_cast<int>(mu.size()) != w.N)
        throw domain_error("cocharacter has wrong length for this window");
    long sum = 0;
    int depth = 0;
    for (int v : mu) {
        sum += v;
        depth = std::max(depth, std::abs(v));
    }
    if (sum != 0) throw domain_error("cocharacter entries must sum to zero");
    if (depth > w.n)
        throw out_of_window_error("cocharacter point does not fit in this window", depth);

    std::vector<std::pair<int, int>> gens;  // (degree, index)
    for (int i = 0; i < w.N; ++i)
        for (int j = mu[i]; j <= w.n - 1; ++j) gens.emplace_back(j, i);
    Mat<typename F::Elem> cols(w.dim(), gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
        cols(w.row_of(gens[c].first, gens[c].second), c) = f.one();
    return make_subspace_impl(w, f, cols);
}

template <class F>
LatticeSubspace<F> embed_next_impl(const F& f, const LatticeSubspace<F>& sub) {
    if (!is_lattice_point_impl(f, sub))
        throw domain_error("embed_next requires a lattice point");
    const TruncWindow from = sub.window;
    const TruncWindow to{from.N, from.n + 1};
    Mat<typename F::Elem> cols(to.dim(), sub.dim() + from.N);
    for (int c = 0; c < sub.dim(); ++c)
        for (int r = 0; r < from.dim(); ++r)
            cols(r + from.N, c) = sub.basis(r, c);  // degree j keeps degree j
    for (int i = 0; i < from.N; ++i)
        cols(to.row_of(from.n, i), sub.dim() + i) = f.one();
    return make_subspace_impl(to, f, cols);
}

}  // namespace

LatticeSubspaceQ make_subspace(const TruncWindow& w, const RMat& columns) {
    return make_subspace_impl(w, RationalField{}, columns);
}

LatticeSubspaceP make_subspace_mod_p(const TruncWindow& w, const PrimeField& f,
                                     const Mat<std::uint32_t>& columns) {
    return make_subspace_impl(w, f, columns);
}

bool is_lattice_point(const LatticeSubspaceQ& w) {
    return is_lattice_point_impl(RationalField{}, w);
}

bool is_lattice_point(const PrimeField& f, const LatticeSubspaceP& w) {
    return is_lattice_point_impl(f, w);
}

LatticeSubspaceQ cocharacter_point(const std::vector<int>& mu, const TruncWindow& w) {
    return cocharacter_point_impl(mu, w, RationalField{});
}

LatticeSubspaceP cocharacter_point_mod_p(const std::vector<int>& mu, const TruncWindow& w,
                                         const PrimeField& f) {
    return cocharacter_point_impl(mu, w, f);
}

LatticeSubspaceQ embed_next(const LatticeSubspaceQ& w) {
    return embed_next_impl(RationalField{}, w);
}

LatticeSubspaceP embed_next(const PrimeField& f, const LatticeSubspaceP& w) {
    return embed_next_impl(f, w);
}

LoopMatrix LoopMatrix::identity(int n) {
    LoopMatrix g(n);
    for (int i = 0; i < n; ++i) g.at(i, i) = LaurentPoly::constant(1);
    return g;
}

LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b) {
    if (a.N != b.N) throw domain_error("loop matrix size mismatch");
    LoopMatrix r(a.N);
    for (int i = 0; i < a.N; ++i)
        for (int k = 0; k < a.N; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.N; ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

namespace {

LaurentPoly minor_det(const LoopMatrix& g, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return g.at(rows[0], cols[0]);
    LaurentPoly det;
    const int top = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (g.at(top, cols[j]).is_zero()) continue;
        std::vector<int> sub_cols;
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        const LaurentPoly term = g.at(top, cols[j]) * minor_det(g, sub_rows, sub_cols);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

LaurentPoly loop_determinant(const LoopMatrix& g) {
    if (g.N == 0) return LaurentPoly::constant(1);
    return minor_det(g, iota_vec(g.N), iota_vec(g.N));
}

LoopMatrix normalize_determinant(const LoopMatrix& g, int trunc_order) {
    const LaurentPoly det = loop_determinant(g);
    if (det.is_zero()) throw domain_error("singular matrix is not a loop-group element");
    const int k = det.min_exponent();

    // u = t^{-k} det has u(0) != 0; invert it as a power series.
    std::vector<Rat> u(trunc_order + 1, Rat(0));
    for (const auto& [e, c] : det.terms())
        if (e - k <= trunc_order) u[e - k] = c;
    std::vector<Rat> v(trunc_order + 1, Rat(0));
    v[0] = 1 / u[0];
    for (int m = 1; m <= trunc_order; ++m) {
        Rat s = 0;
        for (int j = 1; j <= m; ++j) s += u[j] * v[m - j];
        v[m] = -s / u[0];
    }
    LaurentPoly scale;
    for (int m = 0; m <= trunc_order; ++m) scale.add_term(m - k, v[m]);

    LoopMatrix corrector = LoopMatrix::identity(g.N);
    corrector.at(g.N - 1, g.N - 1) = scale;
    return g * corrector;
}

int min_window_depth(const LoopMatrix& g) {
    if (!(loop_determinant(g) == LaurentPoly::constant(1)))
        throw domain_error("window depth is defined for determinant-one elements");
    // adjugate = inverse when det = 1
    LoopMatrix adj(g.N);
    const auto all = iota_vec(g.N);
    for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < g.N; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < g.N; ++c)
                if (c != i) cols.push_back(c);
            LaurentPoly m = g.N == 1 ? LaurentPoly::constant(1) : minor_det(g, rows, cols);
            adj.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
        }
    int depth = 0;
    for (const LoopMatrix* m : {&g, &adj})
        for (const auto& p : m->entries)
            if (!p.is_zero()) depth = std::max(depth, -p.min_exponent());
    return depth;
}

LatticeSubspaceQ lattice_from_group(const LoopMatrix& g, const TruncWindow& w) {
    if (g.N != w.N) throw domain_error("loop matrix size does not match the window");
    if (!(loop_determinant(g) == LaurentPoly::constant(1)))
        throw domain_error("lattice_from_group requires determinant one");
    const int needed = min_window_depth(g);
    if (needed > w.n)
        throw out_of_window_error("group element does not fit in this window", needed);

    // Classes of t^j g(e_i) for 0 <= j < 2n span g L_0 / t^n L_0.
    std::vector<std::vector<Rat>> cols;
    for (int i = 0; i < w.N; ++i)
        for (int j = 0; j < 2 * w.n; ++j) {
            std::vector<Rat> v(w.dim(), Rat(0));
            bool nonzero = false;
            for (int r = 0; r < w.N; ++r)
                for (const auto& [e, c] : g.at(r, i).terms()) {
                    const int deg = e + j;
                    if (deg >= -w.n && deg <= w.n - 1) {
                        v[w.row_of(deg, r)] = c;
                        nonzero = true;
                    }
                }
            if (nonzero) cols.push_back(std::move(v));
        }
    RMat m(w.dim(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < w.dim(); ++r) m(r, c) = cols[c][r];
    LatticeSubspaceQ sub = make_subspace(w, m);
    if (sub.dim() != w.n * w.N || !is_lattice_point(sub))
        throw domain_error("column span is not a window point (window too small?)");
    return sub;
}

namespace {

struct PivotPattern {
    std::vector<int> pivots;                 // sorted pivot rows
    std::vector<std::pair<int, int>> free_;  // (col, row) slots
};

// Pivot patterns surviving the stability constraint: a pivot at row p with
// p + N < dim forces a pivot at p + N (the shifted basis vector leads there).
std::vector<PivotPattern> stable_patterns(const TruncWindow& w) {
    const int dim = w.dim(), d = w.n * w.N;
    std::vector<PivotPattern> out;
    std::vector<int> comb(d);
    for (int i = 0; i < d; ++i) comb[i] = i;
    for (;;) {
        bool closed = true;
        for (int p : comb)
            if (p + w.N < dim && !std::binary_search(comb.begin(), comb.end(), p + w.N)) {
                closed = false;
                break;
            }
        if (closed) {
            PivotPattern pat;
            pat.pivots = comb;
            for (int c = 0; c < d; ++c)
                for (int r = comb[c] + 1; r < dim; ++r)
                    if (!std::binary_search(comb.begin(), comb.end(), r))
                        pat.free_.emplace_back(c, r);
            out.push_back(std::move(pat));
        }
        // next combination
        int i = d - 1;
        while (i >= 0 && comb[i] == dim - d + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

Int pattern_workload(const PivotPattern& p, std::uint32_t q) {
    Int total = 1;
    for (std::size_t i = 0; i < p.free_.size(); ++i) total *= q;
    return total;
}

// Scan one pattern: odometer over the free entries, count stable subspaces.
std::uint64_t scan_pattern(const TruncWindow& w, const PrimeField& f, const PivotPattern& pat) {
    const int dim = w.dim(), d = w.n * w.N;
    std::vector<std::uint32_t> m(static_cast<std::size_t>(dim) * d, 0);  // column-major
    auto at = [&](int r, int c) -> std::uint32_t& {
        return m[static_cast<std::size_t>(c) * dim + r];
    };
    for (int c = 0; c < d; ++c) at(pat.pivots[c], c) = 1;

    std::vector<bool> is_pivot_row(dim, false);
    for (int p : pat.pivots) is_pivot_row[p] = true;
    std::vector<int> check_rows;
    for (int r = 0; r < dim; ++r)
        if (!is_pivot_row[r]) check_rows.push_back(r);

    std::vector<std::uint32_t> vals(pat.free_.size(), 0);
    std::vector<std::uint32_t> shifted(dim);
    std::uint64_t count = 0;
    for (;;) {
        // stability: each shifted column must reduce to zero against the basis
        bool stable = true;
        for (int c = 0; c < d && stable; ++c) {
            std::fill(shifted.begin(), shifted.end(), 0);
            for (int r = 0; r + w.N < dim; ++r) shifted[r + w.N] = at(r, c);
            for (int r : check_rows) {
                std::uint64_t acc = shifted[r];
                for (int t = 0; t < d; ++t) {
                    const std::uint32_t coef = shifted[pat.pivots[t]];
                    if (coef) acc += static_cast<std::uint64_t>(f.p - 1) * coef % f.p * at(r, t);
                }
                if (acc % f.p != 0) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable) ++count;

        // odometer
        std::size_t k = 0;
        while (k < vals.size() && vals[k] == f.p - 1) {
            vals[k] = 0;
            at(pat.free_[k].second, pat.free_[k].first) = 0;
            ++k;
        }
        if (k == vals.size()) break;
        ++vals[k];
        at(pat.free_[k].second, pat.free_[k].first) = vals[k];
    }
    return count;
}

bool is_small_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Int count_points_workload(int N, int n, std::uint32_t q) {
    const TruncWindow w{N, n};
    Int total = 0;
    for (const auto& pat : stable_patterns(w)) total += pattern_workload(pat, q);
    return total;
}

Int count_points(int N, int n, std::uint32_t q, Int budget, int jobs) {
    if (N < 1 || n < 0) throw domain_error("window parameters must satisfy N >= 1, n >= 0");
    if (!is_small_prime(q)) throw domain_error("q must be prime");
    const TruncWindow w{N, n};
    if (n == 0) return 1;  // the zero window has a unique subspace

    // binomial(dim, d) bounds the pattern enumeration itself
    if (binomial(w.dim(), w.n * w.N) > Int(10'000'000))
        throw domain_error("pattern enumeration exceeds the configured budget");
    const auto patterns = stable_patterns(w);
    Int workload = 0;
    for (const auto& pat : patterns) workload += pattern_workload(pat, q);
    if (workload > budget)
        throw domain_error("scan of " + workload.str() + " candidates exceeds budget " +
                           budget.str());

    const PrimeField f{q};
    if (jobs <= 1 || patterns.size() <= 1) {
        Int total = 0;
        for (const auto& pat : patterns) total += scan_pattern(w, f, pat);
        return total;
    }
    std::vector<std::uint64_t> partial(patterns.size(), 0);
    std::vector<std::thread> pool;
    std::size_t next = 0;
    const std::size_t stride = std::max<std::size_t>(1, (patterns.size() + jobs - 1) / jobs);
    for (int t = 0; t < jobs && next < patterns.size(); ++t) {
        const std::size_t lo = next, hi = std::min(patterns.size(), next + stride);
        next = hi;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) partial[i] = scan_pattern(w, f, patterns[i]);
        });
    }
    for (auto& th : pool) th.join();
    Int total = 0;
    for (auto c : partial) total += c;
    return total;
}

}  // namespace kmx
