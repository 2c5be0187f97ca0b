#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "mmt/transforms.hpp"

namespace mmt {

struct NnzReport {
    long A = 0, B = 0, C = 0;

    long total() const { return A + B + C; }
    bool operator==(const NnzReport&) const = default;
    auto tuple() const { return std::tuple<long, long, long>(A, B, C); }
};

template <class T>
long nnz(const Mat<T>& m) {
    long count = 0;
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m(i, j) != T(0)) ++count;
    return count;
}

template <class T>
NnzReport nnz_report(const Factorization<T>& f) {
    return {nnz(f.A), nnz(f.B), nnz(f.C)};
}

// Upper/lower bases of one factor matrix: every rank-1 slice factors as
// l * u^T with l spanning the slice column space (length = slice rows) and u
// the row space (length = slice cols); l goes to L, u goes to U, deduplicated
// up to scale.  Columns of higher rank are skipped.
struct BasisPair {
    Mode mode;
    RatMat U;
    RatMat L;
    int processed = 0;  // number of rank-1 columns
    int skipped = 0;    // columns of higher (or zero) rank
};

namespace detail {

// Appends v (normalized to leading 1) if not already present up to scale.
inline void add_normalized(RatMat& pool, const RatVec& v) {
    const RatVec nv = normalize_leading(v);
    if (is_zero_vec(nv)) return;
    for (int j = 0; j < pool.cols(); ++j)
        if (pool.col(j) == nv) return;
    pool.conservativeResize(nv.size(), pool.cols() + 1);
    pool.col(pool.cols() - 1) = nv;
}

// (l, u) with slice = l u^T for a rank-1 slice; l normalized to leading 1.
inline std::pair<RatVec, RatVec> rank_one_factors(const RatMat& sl) {
    int j0 = -1;
    for (int j = 0; j < sl.cols() && j0 < 0; ++j)
        if (!is_zero_vec(sl.col(j))) j0 = j;
    RatVec l = normalize_leading(sl.col(j0));
    int i0 = -1;
    for (int i = 0; i < l.size() && i0 < 0; ++i)
        if (l(i) != 0) i0 = i;
    RatVec u(sl.cols());
    for (int j = 0; j < sl.cols(); ++j) u(j) = sl(i0, j) / l(i0);
    return {l, u};
}

}  // namespace detail

inline BasisPair extract_rank_one_bases(const RatFact& f, Mode mode) {
    check_shapes(f);
    BasisPair bp{mode, RatMat(0, 0), RatMat(0, 0), 0, 0};
    const RatMat first = slice(f, mode, 1);
    bp.U.resize(first.cols(), 0);
    bp.L.resize(first.rows(), 0);
    for (int r = 1; r <= f.rank(); ++r) {
        const RatMat sl = slice(f, mode, r);
        if (exact_rank(sl) != 1) {
            ++bp.skipped;
            continue;
        }
        auto [l, u] = detail::rank_one_factors(sl);
        detail::add_normalized(bp.L, l);
        detail::add_normalized(bp.U, u);
        ++bp.processed;
    }
    return bp;
}

// Verifies the BasisPair contract: each rank-1 slice equals l u^T for some
// column pair of (L, U) up to scale.
inline bool bases_reconstruct(const RatFact& f, const BasisPair& bp) {
    for (int r = 1; r <= f.rank(); ++r) {
        const RatMat sl = slice(f, bp.mode, r);
        if (exact_rank(sl) != 1) continue;
        bool found = false;
        for (int a = 0; a < bp.L.cols() && !found; ++a)
            for (int b = 0; b < bp.U.cols() && !found; ++b) {
                const RatMat outer = bp.L.col(a) * bp.U.col(b).transpose();
                // scale: match on the first nonzero of sl
                for (int j = 0; j < sl.cols() && !found; ++j)
                    for (int i = 0; i < sl.rows() && !found; ++i)
                        if (outer(i, j) != 0) {
                            const Rat scale = sl(i, j) / outer(i, j);
                            if (RatMat(scale * outer) == sl) found = true;
                        }
            }
        if (!found) return false;
    }
    return true;
}

// Pair scan of the sparsification heuristic.  Preconditions: every slice has
// full rank equal to the smaller slice dimension, and the slices are tall
// (column space is a proper subspace).  For each ordered pair (r, r') whose
// stacked slice [S_r, S_r'] has rank d+1, emits candidate vectors lying in
// colspace(slice r') but outside colspace(slice r):
//   - each column of slice r' that falls outside colspace(slice r), and
//   - one-dimensional intersections of the pairwise colspace intersections
//     through slice r' (canonical under De Groote transforms), kept when they
//     fall outside some partner's colspace.
// Candidates are deduplicated up to scale, in deterministic scan order.
inline RatMat pair_rank4_scan(const RatFact& f, Mode mode) {
    check_shapes(f);
    const int R = f.rank();
    std::vector<RatMat> slices, colbases;
    for (int r = 1; r <= R; ++r) slices.push_back(slice(f, mode, r));
    const int nrows = static_cast<int>(slices[0].rows());
    const int ncols = static_cast<int>(slices[0].cols());
    const int d = std::min(nrows, ncols);
    if (nrows <= d)
        throw std::invalid_argument("pair_rank4_scan: slices must be tall (rows > rank)");
    for (const RatMat& sl : slices) {
        if (exact_rank(sl) != d)
            throw std::invalid_argument("pair_rank4_scan: every slice must have full rank");
        colbases.push_back(columnspace_basis(sl));
    }
    // partner sets and pairwise colspace intersections for qualifying pairs
    std::vector<std::vector<int>> partners(R);
    std::map<std::pair<int, int>, RatMat> intersections;
    for (int r = 0; r < R; ++r)
        for (int rp = 0; rp < R; ++rp) {
            if (r == rp) continue;
            RatMat stacked(nrows, 2 * ncols);
            stacked << slices[r], slices[rp];
            if (exact_rank(stacked) != d + 1) continue;
            partners[rp].push_back(r);
            const auto key = std::minmax(r, rp);
            if (!intersections.count({key.first, key.second}))
                intersections[{key.first, key.second}] =
                    span_intersection(colbases[r], colbases[rp]);
        }
    RatMat cands(nrows, 0);
    for (int rp = 0; rp < R; ++rp)
        for (int r : partners[rp])
            for (int j = 0; j < ncols; ++j)
                if (!in_span(colbases[r], slices[rp].col(j)))
                    detail::add_normalized(cands, slices[rp].col(j));
    for (int rp = 0; rp < R; ++rp) {
        const auto& ps = partners[rp];
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                const auto k1 = std::minmax(ps[i], rp);
                const auto k2 = std::minmax(ps[j], rp);
                const RatMat line = span_intersection(intersections[{k1.first, k1.second}],
                                                      intersections[{k2.first, k2.second}]);
                if (line.cols() != 1) continue;
                for (int r3 : ps)
                    if (!in_span(colbases[r3], line.col(0))) {
                        detail::add_normalized(cands, line.col(0));
                        break;
                    }
            }
    }
    return cands;
}

struct SparsifyOptions {
    std::vector<Mode> pass_order = {Mode::B, Mode::A, Mode::C};
    int beam_width = 4;
    int rounds = 2;
    int candidate_cap = 12;  // exhaustive subsets up to this pool size
    int expansions_per_slot = 4;
};

struct SparsifyResult {
    RatFact fact;
    RatGroote transform;
    NnzReport before, after;
    bool improved = false;
    std::string diagnostic;
};

namespace detail {

// One closure step: lines arising as intersections of planes spanned by
// candidate pairs.  Only worthwhile (and affordable) for small slot dims.
inline RatMat closure_round(RatMat cands, int max_dim = 4, int max_pool = 12) {
    if (cands.cols() == 0 || cands.rows() > max_dim || cands.cols() > max_pool) return cands;
    std::vector<RatMat> planes;
    for (int i = 0; i < cands.cols(); ++i)
        for (int j = i + 1; j < cands.cols(); ++j)
            if (!in_span(cands.col(i), cands.col(j))) {
                RatMat plane(cands.rows(), 2);
                plane << cands.col(i), cands.col(j);
                planes.push_back(plane);
            }
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            const RatMat line = span_intersection(planes[i], planes[j]);
            if (line.cols() == 1) add_normalized(cands, line.col(0));
        }
    return cands;
}

struct CandidatePool {
    RatMat cands;               // candidate vectors as columns
    std::vector<RatMat> bases;  // per-slice spaces used for containment ranking
    bool upper = false;         // upper pools assemble X = W^T, lower pools X = V^-1
};

// Column-space-side candidates of `mode` (feed the left transform of its slices).
inline CandidatePool lower_pool(const RatFact& f, Mode mode) {
    CandidatePool pool;
    std::vector<RatMat> slices;
    for (int r = 1; r <= f.rank(); ++r) slices.push_back(slice(f, mode, r));
    const int nrows = static_cast<int>(slices[0].rows());
    const int d = std::min<int>(nrows, static_cast<int>(slices[0].cols()));
    bool full = nrows > d;
    for (const RatMat& sl : slices) full = full && exact_rank(sl) == d;
    if (full) {
        pool.cands = pair_rank4_scan(f, mode);
    } else {
        pool.cands.resize(nrows, 0);
        for (const RatMat& sl : slices)
            if (exact_rank(sl) == 1) add_normalized(pool.cands, rank_one_factors(sl).first);
    }
    pool.cands = closure_round(pool.cands);
    for (const RatMat& sl : slices) pool.bases.push_back(columnspace_basis(sl));
    return pool;
}

// Row-space-side candidates of `mode` (feed the right-sandwich transform slot):
// u-vectors of rank-1 slices plus 1-dim pairwise row-space intersections of
// rank-deficient slices.
inline CandidatePool upper_pool(const RatFact& f, Mode mode) {
    CandidatePool pool;
    pool.upper = true;
    std::vector<RatMat> rowbases;
    std::vector<int> ranks;
    std::vector<RatMat> slices;
    for (int r = 1; r <= f.rank(); ++r) {
        slices.push_back(slice(f, mode, r));
        rowbases.push_back(columnspace_basis(slices.back().transpose()));
        ranks.push_back(static_cast<int>(rowbases.back().cols()));
    }
    const int amb = static_cast<int>(slices[0].cols());
    pool.cands.resize(amb, 0);
    for (std::size_t i = 0; i < slices.size(); ++i)
        if (ranks[i] == 1) add_normalized(pool.cands, rank_one_factors(slices[i]).second);
    for (std::size_t i = 0; i < slices.size(); ++i)
        for (std::size_t j = i + 1; j < slices.size(); ++j) {
            if (ranks[i] <= 1 || ranks[i] >= amb || ranks[j] <= 1 || ranks[j] >= amb) continue;
            const RatMat line = span_intersection(rowbases[i], rowbases[j]);
            if (line.cols() == 1) add_normalized(pool.cands, line.col(0));
        }
    pool.cands = closure_round(pool.cands);
    pool.bases = std::move(rowbases);
    return pool;
}

inline int containment_count(const CandidatePool& pool, int cand) {
    int count = 0;
    for (const RatMat& basis : pool.bases)
        if (in_span(basis, pool.cands.col(cand))) ++count;
    return count;
}

// Slot -> (lower-source mode, upper-source mode).  X_A left-multiplies A-slices
// and right-sandwiches B-slices; X_B: B and C; X_C: C and A.
inline std::pair<Mode, Mode> slot_sources(Mode slot) {
    switch (slot) {
        case Mode::A: return {Mode::A, Mode::B};
        case Mode::B: return {Mode::B, Mode::C};
        default: return {Mode::C, Mode::A};
    }
}

inline int slot_dim(const Dims& d, Mode slot) {
    switch (slot) {
        case Mode::A: return d.Q;
        case Mode::B: return d.S;
        default: return d.P;
    }
}

inline RatGroote slot_transform(const Dims& d, Mode slot, const RatMat& X) {
    RatGroote gt = RatGroote::identity(d);
    (slot == Mode::A ? gt.XA : slot == Mode::B ? gt.XB : gt.XC) = X;
    return gt;
}

struct SearchState {
    RatFact fact;
    RatGroote gt;
    NnzReport score;
};

inline bool better(const NnzReport& a, const NnzReport& b) {
    return std::pair(a.total(), a.tuple()) < std::pair(b.total(), b.tuple());
}

// Candidate transforms for one slot of one state: all invertible n-subsets of
// the containment-ranked top `cap` candidates from both pools, keeping the
// best `expansions_per_slot` by resulting nonzero count.
inline std::vector<SearchState> expand_slot(const SearchState& state, Mode slot,
                                            const SparsifyOptions& opts) {
    const Dims& d = state.fact.dims;
    const int n = slot_dim(d, slot);
    auto [lmode, umode] = slot_sources(slot);
    std::vector<SearchState> options;
    for (CandidatePool pool : {lower_pool(state.fact, lmode), upper_pool(state.fact, umode)}) {
        if (pool.cands.cols() < n) continue;
        std::vector<int> order(pool.cands.cols());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::vector<int> score(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            score[i] = containment_count(pool, static_cast<int>(i));
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return score[a] > score[b]; });
        const int pool_size = std::min<int>(opts.candidate_cap, static_cast<int>(order.size()));
        // iterate all n-subsets of order[0..pool_size)
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        while (true) {
            RatMat V(n, n);
            for (int k = 0; k < n; ++k) V.col(k) = pool.cands.col(order[idx[k]]);
            std::optional<RatMat> X;
            if (pool.upper) {
                RatMat Xt = V.transpose();
                if (exact_det(Xt) != 0) X = Xt;
            } else {
                X = exact_inverse(V);
            }
            if (X) {
                const RatGroote gt = slot_transform(d, slot, *X);
                SearchState next{apply_groote(state.fact, gt), groote_compose(gt, state.gt), {}};
                next.score = nnz_report(next.fact);
                options.push_back(std::move(next));
            }
            // next combination
            int pos = n - 1;
            while (pos >= 0 && idx[pos] == pool_size - n + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int k = pos + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const SearchState& a, const SearchState& b) { return better(a.score, b.score); });
    if (static_cast<int>(options.size()) > opts.expansions_per_slot)
        options.resize(opts.expansions_per_slot);
    return options;
}

}  // namespace detail

// Searches the De Groote orbit for a sparser representative: per transform
// slot, candidate basis vectors are harvested from the factor slices (pair
// scan / rank-1 bases, on both the column-space and row-space sides), square
// invertible candidate subsets are scored by the resulting nonzero count, and
// a small beam of states is kept so one greedy misstep cannot lock in a bad
// frame.  Deterministic; the identity state always survives, so the result
// never has more nonzeros than the input.
inline SparsifyResult sparsify(const RatFact& f, const SparsifyOptions& opts = {}) {
    check_shapes(f);
    SparsifyResult result;
    result.before = nnz_report(f);
    std::vector<detail::SearchState> states{
        {f, RatGroote::identity(f.dims), result.before}};
    for (int round = 0; round < opts.rounds; ++round) {
        const NnzReport best_before = states.front().score;
        for (Mode slot : opts.pass_order) {
            std::vector<detail::SearchState> next = states;
            for (const auto& st : states)
                for (auto& opt : detail::expand_slot(st, slot, opts)) next.push_back(std::move(opt));
            std::stable_sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
                return detail::better(a.score, b.score);
            });
            // keep distinct nonzero profiles to preserve variety cheaply
            std::vector<detail::SearchState> pruned;
            for (auto& st : next) {
                bool dup = false;
                for (const auto& kept : pruned) dup = dup || kept.score == st.score;
                if (!dup) pruned.push_back(std::move(st));
                if (static_cast<int>(pruned.size()) >= opts.beam_width) break;
            }
            states = std::move(pruned);
        }
        if (!detail::better(states.front().score, best_before)) break;
    }
    result.fact = states.front().fact;
    result.transform = states.front().gt;
    result.after = states.front().score;
    result.improved = detail::better(result.after, result.before);
    if (!result.improved) {
        result.fact = f;
        result.transform = RatGroote::identity(f.dims);
        result.after = result.before;
        result.diagnostic = "no candidate transform reduced the nonzero count; identity returned";
    }
    return result;
}

}  // namespace mmt
