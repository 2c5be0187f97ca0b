#pragma once

#include <future>
#include <limits>

#include "mmt/metrics.hpp"

namespace mmt {

struct AlsOptions {
    int max_iters = 2000;
    double tol = 1e-8;          // stop when cost < tol
    double lambda = -1.0;       // ridge added to G's diagonal; negative = auto 1e-9*tr(G)/R
    int restarts = 1;
    std::uint64_t seed = 1;
    double init_scale = 1.0;    // i.i.d. uniform(-init_scale, init_scale) initialization
    double divergence_norm = 1e6;
    int threads = 1;
};

struct SignatureTarget {
    RealVec s0;  // target signature values
    RealVec w;   // nonnegative weights
};

struct RestartSummary {
    std::vector<double> costs;
    bool converged = false;
    bool diverged = false;
};

struct AlsTrace {
    std::vector<double> costs;  // per-iteration cost of the reported run
    RealFact fact;
    bool converged = false;
    int best_restart = -1;
    int diverged_restarts = 0;
    double final_signature_distance = 0.0;  // ||sqrt(w) * (s0 - s)||, signature runs only
    std::vector<RestartSummary> restarts;   // per-restart cost traces, in restart order
};

namespace detail {

inline double effective_lambda(const RealMat& G, double lambda) {
    if (lambda >= 0) return lambda;
    return 1e-9 * G.trace() / double(G.cols());
}

// Closed-form minimizer argmin_C phi(A,B,C) = F G^-1 with an optional ridge.
inline RealMat solve_update(const RealMat& F, const RealMat& G, double lambda) {
    const int R = static_cast<int>(G.cols());
    const double lam = effective_lambda(G, lambda);
    if (lam == 0.0) {
        Eigen::FullPivLU<RealMat> lu(G);
        if (!lu.isInvertible())
            throw std::runtime_error("update_mode: singular G with lambda=0; set lambda>0");
        return lu.solve(F.transpose()).transpose();
    }
    RealMat Greg = G + lam * RealMat::Identity(R, R);
    return Greg.ldlt().solve(F.transpose()).transpose();
}

}  // namespace detail

// One closed-form mode update (Lemma 3).  Modes A and B reuse the C-role
// formula through the cyclic rotation (A,B,C; P,Q,S) -> (B,C,A; Q,S,P):
// the mode-cycled MM tensor T_PQS is T_QSP, so [[B,C,A]] decomposes T_QSP and
// the A update is the C-role update for that tensor.
inline RealMat update_mode(const RealFact& f, Mode mode, double lambda = -1.0) {
    check_shapes(f);
    const Dims& d = f.dims;
    switch (mode) {
        case Mode::C:
            return detail::solve_update(compute_F(f.A, f.B, d), compute_G(f.A, f.B), lambda);
        case Mode::A:
            return detail::solve_update(compute_F(f.B, f.C, Dims{d.Q, d.S, d.P}),
                                        compute_G(f.B, f.C), lambda);
        default:
            return detail::solve_update(compute_F(f.C, f.A, Dims{d.S, d.P, d.Q}),
                                        compute_G(f.C, f.A), lambda);
    }
}

// Signature-penalized update (Lemma 4): minimizes
// phi + sum_r w_r (s_r - s0_r)^2 over the chosen mode's factor via the linear
// system [G (x) I + blockdiag(w_r f_r f_r^T)] vec(C) = vec(F (I + diag(s0*w))).
namespace detail {

inline RealMat lemma4_solve(const RealMat& F, const RealMat& G, const RealVec& s0,
                            const RealVec& w, double lambda) {
    const int n = static_cast<int>(F.rows());
    const int R = static_cast<int>(F.cols());
    if (s0.size() != R || w.size() != R)
        throw std::invalid_argument("signature target length != R");
    RealMat M = RealMat::Zero(n * R, n * R);
    for (int r = 0; r < R; ++r) {
        for (int r2 = 0; r2 < R; ++r2)
            M.block(r * n, r2 * n, n, n) = G(r, r2) * RealMat::Identity(n, n);
        M.block(r * n, r * n, n, n) += w(r) * (F.col(r) * F.col(r).transpose());
    }
    RealVec rhs(n * R);
    for (int r = 0; r < R; ++r) rhs.segment(r * n, n) = F.col(r) * (1.0 + s0(r) * w(r));
    const double lam = effective_lambda(G, lambda);
    if (lam == 0.0) {
        Eigen::FullPivLU<RealMat> lu(M);
        if (!lu.isInvertible())
            throw std::runtime_error(
                "update_mode_with_signature: singular system; add lambda*I regularization");
        RealVec vec = lu.solve(rhs);
        return Eigen::Map<RealMat>(vec.data(), n, R);
    }
    M += lam * RealMat::Identity(n * R, n * R);
    RealVec vec = M.ldlt().solve(rhs);
    return Eigen::Map<RealMat>(vec.data(), n, R);
}

}  // namespace detail

inline RealMat update_mode_with_signature(const RealFact& f, Mode mode,
                                          const SignatureTarget& target, double lambda = -1.0) {
    check_shapes(f);
    for (int r = 0; r < target.w.size(); ++r)
        if (!(target.w(r) >= 0.0))
            throw std::invalid_argument("signature weights must be nonnegative and finite");
    const Dims& d = f.dims;
    switch (mode) {
        case Mode::C:
            return detail::lemma4_solve(compute_F(f.A, f.B, d), compute_G(f.A, f.B), target.s0,
                                        target.w, lambda);
        case Mode::A:
            return detail::lemma4_solve(compute_F(f.B, f.C, Dims{d.Q, d.S, d.P}),
                                        compute_G(f.B, f.C), target.s0, target.w, lambda);
        default:
            return detail::lemma4_solve(compute_F(f.C, f.A, Dims{d.S, d.P, d.Q}),
                                        compute_G(f.C, f.A), target.s0, target.w, lambda);
    }
}

namespace detail {

inline RealFact random_init(const Dims& d, int R, double scale, Rng& rng) {
    RealFact f{d, RealMat(d.P * d.Q, R), RealMat(d.Q * d.S, R), RealMat(d.S * d.P, R)};
    for (int i = 0; i < f.A.size(); ++i) f.A(i) = rng.uniform_symmetric(scale);
    for (int i = 0; i < f.B.size(); ++i) f.B(i) = rng.uniform_symmetric(scale);
    for (int i = 0; i < f.C.size(); ++i) f.C(i) = rng.uniform_symmetric(scale);
    return f;
}

struct RestartResult {
    std::vector<double> costs;
    RealFact fact;
    bool converged = false;
    bool diverged = false;
    double final_cost = std::numeric_limits<double>::infinity();
    double final_signature_distance = 0.0;
};

// One restart; with target == nullptr this is plain ALS, otherwise the
// signature-penalized variant (identical trajectory when all weights are 0
// except for the penalty term, which then vanishes).
inline RestartResult run_one(const Dims& d, int R, const AlsOptions& opts, int restart,
                             const SignatureTarget* target, const RealFact* warm_start) {
    Rng rng(opts.seed, static_cast<std::uint64_t>(restart));
    RestartResult res;
    RealFact f = warm_start ? *warm_start : random_init(d, R, opts.init_scale, rng);
    for (int it = 0; it < opts.max_iters; ++it) {
        if (target) {
            f.A = update_mode_with_signature(f, Mode::A, *target, opts.lambda);
            f.B = update_mode_with_signature(f, Mode::B, *target, opts.lambda);
            f.C = update_mode_with_signature(f, Mode::C, *target, opts.lambda);
        } else {
            f.A = update_mode(f, Mode::A, opts.lambda);
            f.B = update_mode(f, Mode::B, opts.lambda);
            f.C = update_mode(f, Mode::C, opts.lambda);
        }
        if (f.A.norm() > opts.divergence_norm || f.B.norm() > opts.divergence_norm ||
            f.C.norm() > opts.divergence_norm) {
            res.diverged = true;
            break;
        }
        res.costs.push_back(cost(f));
        if (res.costs.back() < opts.tol) {
            res.converged = true;
            break;
        }
    }
    res.fact = f;
    if (!res.costs.empty()) res.final_cost = res.costs.back();
    if (target) {
        const RealMat F = compute_F(f.A, f.B, d);
        const RealVec s = F.cwiseProduct(f.C).colwise().sum().transpose();
        res.final_signature_distance =
            (target->w.cwiseSqrt().cwiseProduct(target->s0 - s)).norm();
    }
    return res;
}

inline AlsTrace best_of_restarts(const Dims& d, int R, const AlsOptions& opts,
                                 const SignatureTarget* target, const RealFact* warm_start) {
    check_dims(d);
    if (R < 1) throw std::invalid_argument("run_als: R must be >= 1");
    if (opts.restarts < 1 || opts.tol < 0)
        throw std::invalid_argument("run_als: need restarts >= 1 and tol >= 0");
    std::vector<RestartResult> results(opts.restarts);
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (int i = 0; i < opts.restarts; ++i) results[i] = run_one(d, R, opts, i, target, warm_start);
    } else {
        std::vector<std::future<void>> futures;
        for (int t = 0; t < threads; ++t)
            futures.push_back(std::async(std::launch::async, [&, t] {
                for (int i = t; i < opts.restarts; i += threads)
                    results[i] = run_one(d, R, opts, i, target, warm_start);
            }));
        for (auto& fu : futures) fu.get();
    }
    int best = 0;
    for (int i = 1; i < opts.restarts; ++i)
        if (results[i].final_cost < results[best].final_cost) best = i;
    AlsTrace trace;
    trace.costs = results[best].costs;
    trace.fact = results[best].fact;
    trace.converged = results[best].converged;
    trace.best_restart = best;
    trace.final_signature_distance = results[best].final_signature_distance;
    for (const auto& r : results) {
        trace.diverged_restarts += r.diverged ? 1 : 0;
        trace.restarts.push_back({r.costs, r.converged, r.diverged});
    }
    return trace;
}

}  // namespace detail

// Alternating closed-form updates A -> B -> C until cost < tol or max_iters;
// the best restart (by final cost) is returned.  Deterministic given the seed.
inline AlsTrace run_als(const Dims& d, int R, const AlsOptions& opts,
                        const RealFact* warm_start = nullptr) {
    return detail::best_of_restarts(d, R, opts, nullptr, warm_start);
}

inline AlsTrace run_signature_als(const Dims& d, int R, const SignatureTarget& target,
                                  const AlsOptions& opts, const RealFact* warm_start = nullptr) {
    return detail::best_of_restarts(d, R, opts, &target, warm_start);
}

}  // namespace mmt
