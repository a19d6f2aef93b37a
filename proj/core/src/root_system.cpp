#include "kmx/root_system.hpp"

#include <algorithm>
#include <set>

namespace kmx {

TypeLabel type_label_from_char(char c) {
    switch (c) {
        case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
            return static_cast<TypeLabel>(c);
        default:
            throw domain_error(std::string("unknown simple type: ") + c);
    }
}

namespace {

// Bourbaki Dynkin diagrams as edge lists. A double/triple edge (i, j) with
// alpha_i long and alpha_j short contributes cartan(i,j) = -1 and
// cartan(j,i) = -(squared length ratio).
struct Edge {
    int from, to;   // 0-based node indices, from = long end for multi-edges
    int mult;       // 1 single, 2 double, 3 triple
};

std::vector<Edge> diagram_edges(TypeLabel t, int n) {
    std::vector<Edge> e;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) e.push_back({i, i + 1, 1});
    };
    switch (t) {
        case TypeLabel::A:
            if (n < 1) throw domain_error("type A requires rank >= 1");
            chain(n);
            break;
        case TypeLabel::B:
            if (n < 2) throw domain_error("type B requires rank >= 2");
            chain(n - 1);
            e.push_back({n - 2, n - 1, 2});  // alpha_n short
            break;
        case TypeLabel::C:
            if (n < 2) throw domain_error("type C requires rank >= 2");
            chain(n - 1);
            e.push_back({n - 1, n - 2, 2});  // alpha_n long
            break;
        case TypeLabel::D:
            if (n < 3) throw domain_error("type D requires rank >= 3");
            chain(n - 2);
            e.push_back({n - 3, n - 2, 1});
            e.push_back({n - 3, n - 1, 1});
            break;
        case TypeLabel::E: {
            if (n < 6 || n > 8) throw domain_error("type E requires rank in {6,7,8}");
            // Bourbaki: node 2 hangs off node 4; the rest chain 1-3-4-5-...-n.
            e.push_back({0, 2, 1});
            e.push_back({2, 3, 1});
            e.push_back({1, 3, 1});
            for (int i = 3; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
            break;
        }
        case TypeLabel::F:
            if (n != 4) throw domain_error("type F requires rank 4");
            e = {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}};  // alpha_3, alpha_4 short
            break;
        case TypeLabel::G:
            if (n != 2) throw domain_error("type G requires rank 2");
            e = {{1, 0, 3}};  // alpha_1 short, alpha_2 long
            break;
    }
    return e;
}

}  // namespace

RootSystem RootSystem::build(TypeLabel type, int rank) {
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;

    const auto edges = diagram_edges(type, rank);
    IMat a(rank, rank);
    for (int i = 0; i < rank; ++i) a(i, i) = 2;
    for (const auto& e : edges) {
        a(e.from, e.to) = -1;
        a(e.to, e.from) = -e.mult;
    }
    rs.cartan_ = a;
    rs.inv_cartan_ = inverse(to_rational(a));

    // Relative symmetrizer: d_i a_ij = d_j a_ji, propagated over the tree.
    std::vector<Rat> d(rank, 0);
    d[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : edges) {
            if (d[e.from] != 0 && d[e.to] == 0) {
                d[e.to] = d[e.from] * a(e.from, e.to) / a(e.to, e.from);
                changed = true;
            } else if (d[e.to] != 0 && d[e.from] == 0) {
                d[e.from] = d[e.to] * a(e.to, e.from) / a(e.from, e.to);
                changed = true;
            }
        }
    }
    if (rank == 1) d[0] = 1;
    rs.sym_ = d;

    // Positive roots by closure under simple reflections.
    std::set<std::vector<int>> seen;
    std::vector<Root> frontier;
    for (int i = 0; i < rank; ++i) {
        Root simple{std::vector<int>(rank, 0)};
        simple.sr[i] = 1;
        seen.insert(simple.sr);
        frontier.push_back(simple);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < rank; ++i) {
                Root s = rs.reflect(i, r);
                if (seen.insert(s.sr).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    for (const auto& c : seen) {
        bool pos = true;
        for (int v : c)
            if (v < 0) { pos = false; break; }
        if (pos) rs.positive_roots_.push_back(Root{c});
    }
    std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
              [](const Root& x, const Root& y) {
                  const int hx = x.height(), hy = y.height();
                  return hx != hy ? hx < hy : x.sr < y.sr;
              });

    // Highest root: unique height maximum, dominating every positive root.
    rs.highest_root_ = rs.positive_roots_.back();
    for (const auto& r : rs.positive_roots_) {
        for (int i = 0; i < rank; ++i)
            if (rs.highest_root_.sr[i] < r.sr[i])
                throw domain_error("root poset has no unique maximum (broken Cartan data)");
    }

    // Rescale the symmetrizer so <theta, theta> = 2 exactly.
    const Rat tt = rs.form(rs.highest_root_, rs.highest_root_);
    for (auto& v : rs.sym_) v *= Rat(2) / tt;

    return rs;
}

Weight RootSystem::fw_of_root(const Root& r) const {
    Weight w{std::vector<int>(rank_, 0)};
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) w.fw[i] += cartan_(i, j) * r.sr[j];
    return w;
}

Rat RootSystem::form(const Root& x, const Root& y) const {
    // (x, y) = sr(x)^T diag(d) A sr(y)
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x.sr[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < rank_; ++j) row += Rat(cartan_(i, j)) * y.sr[j];
        s += Rat(x.sr[i]) * sym_[i] * row;
    }
    return s;
}

Rat RootSystem::form(const Weight& x, const Root& y) const {
    // (omega_i, alpha_j) = delta_ij d_j
    Rat s = 0;
    for (int j = 0; j < rank_; ++j) s += Rat(x.fw[j]) * sym_[j] * y.sr[j];
    return s;
}

Rat RootSystem::form(const Weight& x, const Weight& y) const {
    // Convert y to (rational) simple-root coordinates and pair.
    Rat s = 0;
    for (int j = 0; j < rank_; ++j) {
        Rat yj = 0;
        for (int k = 0; k < rank_; ++k) yj += inv_cartan_(j, k) * y.fw[k];
        s += Rat(x.fw[j]) * sym_[j] * yj;
    }
    return s;
}

Int RootSystem::pair_coroot(const Weight& lambda, const Root& alpha) const {
    return rat_to_int(2 * form(lambda, alpha) / form(alpha, alpha));
}

Int RootSystem::pair_coroot(const Root& beta, const Root& alpha) const {
    return rat_to_int(2 * form(beta, alpha) / form(alpha, alpha));
}

Int RootSystem::dual_coxeter() const {
    return 1 + pair_coroot(rho(), highest_root_);
}

std::vector<int> RootSystem::coroot_coords(const Root& alpha) const {
    // alpha^vee = (2 / (alpha, alpha)) * sum_j c_j d_j alpha_j^vee
    const Rat aa = form(alpha, alpha);
    std::vector<int> out(rank_);
    for (int j = 0; j < rank_; ++j)
        out[j] = static_cast<int>(rat_to_int(2 * Rat(alpha.sr[j]) * sym_[j] / aa));
    return out;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
    // s_i(w) = w - <w, alpha_i^vee> alpha_i; fw-coords of alpha_i = column i of A.
    Weight r = w;
    const int c = w.fw[i];
    for (int k = 0; k < rank_; ++k) r.fw[k] -= c * cartan_(k, i);
    return r;
}

Root RootSystem::reflect(int i, const Root& r) const {
    Root s = r;
    int pairing = 0;
    for (int j = 0; j < rank_; ++j) pairing += cartan_(i, j) * r.sr[j];
    s.sr[i] -= pairing;
    return s;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
    Weight v = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank_; ++i)
            if (v.fw[i] < 0) {
                v = reflect(i, v);
                moved = true;
            }
    }
    return v;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    std::set<std::vector<int>> seen{w.fw};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& v : frontier)
            for (int i = 0; i < rank_; ++i) {
                Weight s = reflect(i, v);
                if (seen.insert(s.fw).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<Weight> out;
    out.reserve(seen.size());
    for (auto& c : seen) out.push_back(Weight{c});
    return out;
}

}  // namespace kmx
