#pragma once

#include "boxlike/ifs.hpp"
#include "boxlike/projections.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace boxlike {

/// Projection dimensions feeding the modified singular value function.
struct PressureParams {
    double s1 = 0.0;
    double s2 = 0.0;
};

/// Which per-word weight the level sums use: the modified singular value
/// function (projection-aware) or the classical singular value function
/// (affinity dimension).
enum class ValueFunction : std::uint8_t { Modified, Singular };

inline constexpr std::size_t kDefaultStateGuard = 200'000'000;

/// Aggregation of all words of one length. Words are grouped by the exponent
/// vectors (u, v): u_i counts appearances of letter i while the prefix was in
/// class A, v_i while it was in class B. Side lengths of the image rectangle
/// depend only on these exponents, so each state stands for `count` words
/// sharing identical geometry. Counts are exact arbitrary-precision integers.
class LevelTable {
public:
    /// Level-0 table: the empty word (class A, all exponents zero, count 1).
    explicit LevelTable(std::size_t alphabet_size);

    int level() const { return k_; }
    std::size_t alphabet_size() const { return m_; }
    std::size_t state_count() const { return parts_[0].size() + parts_[1].size(); }
    mpz_class total_count() const;

    struct StateView {
        MapClass cls;
        std::span<const std::uint8_t> u, v;
        const mpz_class& count;
    };

    /// Visits states in canonical order: class A before class B, exponent
    /// keys ascending lexicographically.
    template <typename F>
    void for_each(F&& f) const {
        for (int c = 0; c < 2; ++c) {
            const Partition& p = parts_[c];
            for (std::size_t i = 0; i < p.size(); ++i) {
                const std::uint8_t* key = p.keys.data() + i * 2 * m_;
                f(StateView{static_cast<MapClass>(c),
                            std::span<const std::uint8_t>(key, m_),
                            std::span<const std::uint8_t>(key + m_, m_),
                            p.counts[i]});
            }
        }
    }

private:
    struct Partition {
        std::vector<std::uint8_t> keys;  // size() * 2m bytes, sorted
        std::vector<mpz_class> counts;
        std::size_t size() const { return counts.size(); }
    };

    int k_ = 0;
    std::size_t m_ = 0;
    std::array<Partition, 2> parts_;  // [class A], [class B]

    friend LevelTable advance_level(const LevelTable&, const BoxLikeIFS&, std::size_t);
};

/// Appends one letter to every word of the table: exact counts, states merged
/// by exponent key. Throws when the state count would exceed `state_guard` or
/// a single exponent would leave 8-bit range.
LevelTable advance_level(const LevelTable& table, const BoxLikeIFS& ifs,
                         std::size_t state_guard = kDefaultStateGuard);

/// log of the singular value function: s·log α1 for s ≤ 1, and
/// log α1 + (s-1)·log α2 for 1 < s ≤ 2. Rejects s outside [0,2].
double log_phi(double s, double log_alpha1, double log_alpha2);

/// The projection dimension attached to a word: s1 when the longer side of
/// the image rectangle projects to the horizontal axis, s2 otherwise. Ties
/// (base = height) take the base-major branch.
double selector(MapClass cls, double log_base, double log_height, const PressureParams& p);

/// log of the modified singular value function: sel·log α1 + (s-sel)·log α2.
double log_psi(double s, double log_alpha1, double log_alpha2, double sel);

/// Exact log side lengths of a state: log base and log height reconstructed
/// from the exponent vectors.
std::pair<double, double> state_logs(const LevelTable::StateView& state, const BoxLikeIFS& ifs);

/// Immutable per-level snapshot of (log count, log α1, log α2, selector)
/// rows, ready for repeated level-sum evaluations during root finding.
/// Evaluation is a deterministic blocked log-sum-exp: results are identical
/// for every thread count.
class LevelEvaluator {
public:
    LevelEvaluator(const LevelTable& table, const BoxLikeIFS& ifs, const PressureParams& params,
                   ValueFunction fn);

    int level() const { return k_; }
    ValueFunction function() const { return fn_; }
    std::size_t size() const { return c_hi_.size(); }

    /// log Ψ_k^s (or log Φ_k^s for the singular value function).
    double log_sum(double s, int threads = 1) const;

    /// max over states of (log α2 - log α1); 0 when some word is a square.
    double max_log_alpha_ratio() const { return max_log_ratio_; }

private:
    ValueFunction fn_;
    int k_;
    // term(s) = c + s*d; the Singular function switches pairs at s = 1
    std::vector<double> c_lo_, d_lo_;  // s ≤ 1 branch (Singular only)
    std::vector<double> c_hi_, d_hi_;
    double max_log_ratio_ = 0.0;
};

/// log Ψ_k^s over the table (one-shot convenience around LevelEvaluator).
double psi_sum_log(const LevelTable& table, const BoxLikeIFS& ifs, const PressureParams& params,
                   double s, int threads = 1);

struct LevelRoot {
    double value;
    bool clamped;  // Singular roots clamp at 2 (planar bound)
};

/// The unique s with Ψ_k^s = 1, found by bisection: the sum is strictly
/// decreasing in s because every α2 < 1. The bracket starts at s1+s2
/// (Modified) or 2 (Singular) and is widened upward when the sum is still
/// above 1 there.
LevelRoot solve_level_root(const LevelEvaluator& eval, const PressureParams& params,
                           double tol = 1e-10, int threads = 1);

struct EstimateOptions {
    std::vector<int> schedule{6, 12, 24, 48};
    double tol = 1e-10;
    int threads = 1;
    std::size_t state_guard = kDefaultStateGuard;
};

struct DimensionEstimate {
    std::vector<int> schedule;
    std::vector<double> roots;      // one level root per scheduled level
    double final_upper = 0.0;       // last root: a rigorous upper bound
    double extrapolated = 0.0;      // 1/k fit on the last two levels; heuristic
    bool any_clamped = false;
    std::vector<std::string> flags;
};

/// Upper-bound sequence for the root of the pressure equation, using the
/// modified singular value function with the given projection dimensions.
DimensionEstimate estimate_dimension(const BoxLikeIFS& ifs, const ProjectionDims& dims,
                                     const EstimateOptions& opts = {});

/// Same pipeline with the classical singular value function.
DimensionEstimate affinity_dimension(const BoxLikeIFS& ifs, const EstimateOptions& opts = {});

/// Probe for a gap between the computed dimension and the affinity dimension:
/// with ε = min(1, d̂) - max(s1,s2) > 0 and η̂ = max over level-k states of
/// (α2/α1)^(1/k), the pressure at d̂ is at most η̂^ε, so η̂^ε < 1 certifies
/// that the dimension lies strictly below the level-k affinity bound d̂.
struct GapReport {
    int k = 0;
    double d_hat = 0.0;    // level-k affinity upper bound
    double s_max = 0.0;    // max(s1, s2)
    double epsilon = 0.0;  // min(1, d_hat) - s_max
    double eta_hat = 1.0;  // only meaningful when epsilon > 0
    double bound = 1.0;    // η̂^ε
    bool certificate_valid = false;  // ε > 0 and d̂ within the submultiplicative range
    bool gap_detected = false;
};

GapReport gap_diagnostic(const BoxLikeIFS& ifs, const ProjectionDims& dims, int k,
                         const EstimateOptions& opts = {});

}  // namespace boxlike
