#include "grsobs/maximize.hpp"

#include "grsobs/error.hpp"

#include <algorithm>

namespace grsobs::dinv {

namespace {

// Normalization order: lexicographically smallest absolute coordinates,
// ties broken toward positive entries.
bool alpha_less(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int aa = abs(a[i]), ab = abs(b[i]);
        if (aa != ab) return aa < ab;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

CosetMaximizer::CosetMaximizer(IntMatrix g) : g_(std::move(g)) {
    if (!g_.is_symmetric())
        throw Error("validate", "form must be symmetric");
    adj_g_ = intlat::adjugate(g_);
    det_g_ = intlat::determinant(g_);
    a_ = g_.negated();
    const std::size_t r = rank();
    if (r > 0 && !intlat::is_negative_definite(g_))
        throw Error("validate", "form must be negative definite");

    // Rational LDL^T of A = -G.
    ldl_diag_.assign(r, Rational(0));
    ldl_l_.assign(r, std::vector<Rational>(r, Rational(0)));
    for (std::size_t j = 0; j < r; ++j) {
        Rational d = Rational(a_.at(j, j));
        for (std::size_t k = 0; k < j; ++k)
            d -= ldl_l_[j][k] * ldl_l_[j][k] * ldl_diag_[k];
        ldl_diag_[j] = d;
        ldl_l_[j][j] = 1;
        for (std::size_t i = j + 1; i < r; ++i) {
            Rational s = Rational(a_.at(i, j));
            for (std::size_t k = 0; k < j; ++k)
                s -= ldl_l_[i][k] * ldl_l_[j][k] * ldl_diag_[k];
            ldl_l_[i][j] = s / d;
        }
    }
}

Rational CosetMaximizer::square(const IntVector& alpha) const {
    if (rank() == 0) return 0;
    return make_rational(intlat::dot(alpha, adj_g_ * alpha), det_g_);
}

std::vector<Rational> CosetMaximizer::continuous_center(const IntVector& rep) const {
    // v* solves A v* = rep / 2; v* = adj(A) rep / (2 det A).
    const std::size_t r = rank();
    // adj(-G) = (-1)^(r-1) adj(G), det(-G) = (-1)^r det(G).
    Int det_a = (r % 2 == 0) ? det_g_ : Int(-det_g_);
    int adj_sign = (r % 2 == 1) ? +1 : -1;
    std::vector<Rational> center(r);
    for (std::size_t i = 0; i < r; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < r; ++j) s += adj_g_.at(i, j) * rep[j];
        if (adj_sign < 0) s = -s;
        center[i] = make_rational(s, 2 * det_a);
    }
    return center;
}

Rational CosetMaximizer::coset_distance(const std::vector<Rational>& center,
                                        const IntVector& v) const {
    // (v - v*)^T A (v - v*)
    const std::size_t r = rank();
    std::vector<Rational> d(r);
    for (std::size_t i = 0; i < r; ++i) d[i] = Rational(v[i]) - center[i];
    Rational q = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) q += d[i] * Rational(a_.at(i, j)) * d[j];
    return q;
}

MaximizeResult CosetMaximizer::pick_result(const IntVector& rep,
                                           const std::vector<IntVector>& arg_v) const {
    const std::size_t r = rank();
    IntVector best_alpha;
    bool have = false;
    for (const IntVector& v : arg_v) {
        IntVector alpha = rep;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) alpha[i] += 2 * g_.at(i, j) * v[j];
        if (!have || alpha_less(alpha, best_alpha)) {
            best_alpha = std::move(alpha);
            have = true;
        }
    }
    if (!have) throw Error("compute", "empty maximizer candidate set");
    return MaximizeResult{square(best_alpha), std::move(best_alpha)};
}

MaximizeResult CosetMaximizer::sphere(const IntVector& rep) const {
    const std::size_t r = rank();
    if (r == 0) return MaximizeResult{Rational(0), {}};

    std::vector<Rational> center = continuous_center(rep);

    // Feasible incumbent: the coset representative itself (v = 0), improved
    // by the rounded continuous center.
    IntVector zero(r, Int(0));
    IntVector babai(r);
    for (std::size_t i = 0; i < r; ++i) babai[i] = round_to_int(center[i]);
    Rational best = coset_distance(center, zero);
    std::vector<IntVector> argmin{zero};
    Rational q_babai = coset_distance(center, babai);
    if (q_babai < best) {
        best = q_babai;
        argmin = {babai};
    } else if (q_babai == best && babai != zero) {
        argmin.push_back(babai);
    }

    // Depth-first over levels r-1 .. 0. u[j] = v_j - v*_j; partial[j] is the
    // weighted tail sum over levels > j.
    IntVector v(r, Int(0));
    std::vector<Rational> u(r, Rational(0));

    struct Frame {
        Int lo, hi, cur;
        Rational partial;   // tail sum strictly above this level
        Rational eff_center;  // c_j
    };
    std::vector<Frame> stack(r);

    auto open_level = [&](std::size_t j, const Rational& partial) {
        // c_j = v*_j - sum_{i>j} L_ij u_i
        Rational c = center[j];
        for (std::size_t i = j + 1; i < r; ++i) c -= ldl_l_[i][j] * u[i];
        Rational budget = best - partial;
        Frame& f = stack[j];
        f.partial = partial;
        f.eff_center = c;
        if (budget < 0) {
            f.lo = 0;
            f.hi = -1;  // empty range
            f.cur = 0;
            return;
        }
        Int t = ceil_sqrt(budget / ldl_diag_[j]);
        f.lo = ceil_to_int(c) - t;
        f.hi = floor_to_int(c) + t;
        f.cur = f.lo;
    };

    std::size_t level = r - 1;
    open_level(level, Rational(0));
    while (true) {
        Frame& f = stack[level];
        if (f.cur > f.hi) {
            // exhausted: backtrack
            if (level == r - 1) break;
            ++level;
            ++stack[level].cur;
            continue;
        }
        Rational diff = Rational(f.cur) - f.eff_center;
        Rational q = f.partial + diff * diff * ldl_diag_[level];
        if (q > best) {
            ++f.cur;
            continue;
        }
        v[level] = f.cur;
        u[level] = Rational(f.cur) - center[level];
        if (level == 0) {
            if (q < best) {
                best = q;
                argmin.assign(1, v);
            } else if (std::find(argmin.begin(), argmin.end(), v) == argmin.end()) {
                argmin.push_back(v);
            }
            ++f.cur;
        } else {
            --level;
            open_level(level, q);
        }
    }

    return pick_result(rep, argmin);
}

MaximizeResult CosetMaximizer::box(const IntVector& rep, long box) const {
    const std::size_t r = rank();
    if (r == 0) return MaximizeResult{Rational(0), {}};
    if (box < 0) throw Error("validate", "box bound must be nonnegative");

    // alpha and w = adj(G) alpha are maintained incrementally: a step of
    // size s in v_k moves alpha by 2s G e_k and w by 2s det(G) e_k (since
    // adj(G) G = det(G) I). alpha^2 = <alpha, w> / det(G); det's sign is
    // fixed, so comparisons reduce to the integer numerator.
    IntVector v(r, Int(-box));
    IntVector alpha = rep;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) alpha[i] += 2 * g_.at(i, j) * v[j];
    IntVector w = adj_g_ * alpha;
    const bool det_positive = det_g_ > 0;

    auto step = [&](std::size_t k, const Int& delta) {
        for (std::size_t i = 0; i < r; ++i) alpha[i] += 2 * delta * g_.at(i, k);
        w[k] += 2 * delta * det_g_;
    };

    bool have = false;
    Int best_num;
    std::vector<IntVector> argmax;
    while (true) {
        Int num = intlat::dot(alpha, w);
        bool better = !have || (det_positive ? num > best_num : num < best_num);
        if (better) {
            best_num = num;
            argmax.assign(1, v);
            have = true;
        } else if (num == best_num) {
            argmax.push_back(v);
        }
        std::size_t k = 0;
        while (k < r && v[k] == box) {
            step(k, Int(-2 * box));
            v[k] = -box;
            ++k;
        }
        if (k == r) break;
        step(k, Int(1));
        ++v[k];
    }
    return pick_result(rep, argmax);
}

MaximizeResult CosetMaximizer::certified_box(const IntVector& rep) const {
    const std::size_t r = rank();
    if (r == 0) return MaximizeResult{Rational(0), {}};

    std::vector<Rational> center = continuous_center(rep);
    IntVector zero(r, Int(0));
    IntVector babai(r);
    for (std::size_t i = 0; i < r; ++i) babai[i] = round_to_int(center[i]);
    Rational incumbent = std::min(coset_distance(center, zero), coset_distance(center, babai));

    // Every optimal v satisfies (v_i - v*_i)^2 <= R (A^{-1})_ii.
    IntMatrix adj_a = intlat::adjugate(a_);
    Int det_a = intlat::determinant(a_);
    IntVector lo(r), hi(r);
    for (std::size_t i = 0; i < r; ++i) {
        Int t = ceil_sqrt(incumbent * make_rational(adj_a.at(i, i), det_a));
        lo[i] = ceil_to_int(center[i]) - t;
        hi[i] = floor_to_int(center[i]) + t;
    }

    IntVector v = lo;
    Rational best;
    bool have = false;
    std::vector<IntVector> argmin;
    while (true) {
        Rational q = coset_distance(center, v);
        if (!have || q < best) {
            best = q;
            argmin.assign(1, v);
            have = true;
        } else if (q == best) {
            argmin.push_back(v);
        }
        std::size_t k = 0;
        while (k < r && v[k] == hi[k]) {
            v[k] = lo[k];
            ++k;
        }
        if (k == r) break;
        ++v[k];
    }
    return pick_result(rep, argmin);
}

MaximizeResult CosetMaximizer::maximize(const IntVector& rep) const {
    if (rep.size() != rank())
        throw Error("validate", "representative length does not match the form");
    if (rank() == 0) return MaximizeResult{Rational(0), {}};
    if (rank() <= 2) return certified_box(rep);
    return sphere(rep);
}

MaximizeResult max_square_sphere(const IntMatrix& g, const IntVector& rep) {
    return CosetMaximizer(g).sphere(rep);
}
MaximizeResult max_square_box(const IntMatrix& g, const IntVector& rep, long box) {
    return CosetMaximizer(g).box(rep, box);
}
MaximizeResult max_square_certified_box(const IntMatrix& g, const IntVector& rep) {
    return CosetMaximizer(g).certified_box(rep);
}
MaximizeResult max_square(const IntMatrix& g, const IntVector& rep) {
    return CosetMaximizer(g).maximize(rep);
}

}  // namespace grsobs::dinv
