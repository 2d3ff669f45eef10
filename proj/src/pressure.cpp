#include "boxlike/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <thread>

namespace boxlike {

namespace {

constexpr std::size_t kBlock = 1 << 15;

double mpz_log(const mpz_class& z) {
    signed long e = 0;
    const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * M_LN2;
}

struct LetterLogs {
    std::vector<double> log_a, log_b;
    std::vector<bool> swaps;
};

LetterLogs letter_logs(const BoxLikeIFS& ifs) {
    LetterLogs out;
    out.log_a.reserve(ifs.size());
    out.log_b.reserve(ifs.size());
    out.swaps.reserve(ifs.size());
    for (const AffineMap& m : ifs.maps) {
        out.log_a.push_back(m.a.log());
        out.log_b.push_back(m.b.log());
        out.swaps.push_back(swaps_axes(m.iso));
    }
    return out;
}

// Runs kernel(j) for every block index, partitioned deterministically: the
// per-block results do not depend on which thread computes them.
template <typename Kernel>
void run_blocks(std::size_t blocks, int threads, Kernel&& kernel) {
    if (threads <= 1 || blocks <= 1) {
        for (std::size_t j = 0; j < blocks; ++j) kernel(j);
        return;
    }
    const int t_count = static_cast<int>(std::min<std::size_t>(threads, blocks));
    std::vector<std::thread> pool;
    pool.reserve(t_count);
    for (int t = 0; t < t_count; ++t) {
        pool.emplace_back([&kernel, t, t_count, blocks] {
            for (std::size_t j = t; j < blocks; j += t_count) kernel(j);
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace

LevelTable::LevelTable(std::size_t alphabet_size) : m_(alphabet_size) {
    if (m_ == 0) throw std::invalid_argument("LevelTable: empty alphabet");
    parts_[0].keys.assign(2 * m_, 0);
    parts_[0].counts.emplace_back(1);
}

mpz_class LevelTable::total_count() const {
    mpz_class total = 0;
    for (const Partition& p : parts_) {
        for (const mpz_class& c : p.counts) total += c;
    }
    return total;
}

LevelTable advance_level(const LevelTable& table, const BoxLikeIFS& ifs, std::size_t state_guard) {
    const std::size_t m = ifs.size();
    if (m != table.alphabet_size())
        throw std::invalid_argument("advance_level: table alphabet does not match the IFS");
    const std::size_t stride = 2 * m;

    LevelTable out(m);
    out.k_ = table.k_ + 1;
    out.parts_[0] = LevelTable::Partition{};
    out.parts_[1] = LevelTable::Partition{};

    // Appending letter l to a state of class `src` increments u_l (src = A)
    // or v_l (src = B) and lands in class src XOR swaps(l). Each (src, l)
    // pair therefore contributes one already-sorted stream to one target
    // partition: bumping a fixed key byte by one preserves the key order.
    struct Stream {
        const LevelTable::Partition* src;
        std::size_t inc;  // key byte to increment
        std::size_t idx = 0;
        std::vector<std::uint8_t> key;

        bool done() const { return idx >= src->size(); }
        void load(std::size_t stride) {
            const std::uint8_t* base = src->keys.data() + idx * stride;
            key.assign(base, base + stride);
            if (key[inc] == std::numeric_limits<std::uint8_t>::max())
                throw std::overflow_error("advance_level: exponent exceeds 8-bit range (level > 255)");
            ++key[inc];
        }
        const mpz_class& count() const { return src->counts[idx]; }
    };

    for (int tgt = 0; tgt < 2; ++tgt) {
        std::vector<Stream> streams;
        for (int src = 0; src < 2; ++src) {
            if (table.parts_[src].size() == 0) continue;
            for (std::size_t l = 0; l < m; ++l) {
                const bool swap = swaps_axes(ifs.maps[l].iso);
                const int target = swap ? 1 - src : src;
                if (target != tgt) continue;
                streams.push_back(Stream{&table.parts_[src], src == 0 ? l : m + l});
            }
        }
        for (Stream& s : streams) {
            if (!s.done()) s.load(stride);
        }

        LevelTable::Partition& op = out.parts_[tgt];
        const std::size_t other = out.parts_[1 - tgt].size();
        while (true) {
            int best = -1;
            for (int i = 0; i < static_cast<int>(streams.size()); ++i) {
                if (streams[i].done()) continue;
                if (best < 0 ||
                    std::memcmp(streams[i].key.data(), streams[best].key.data(), stride) < 0) {
                    best = i;
                }
            }
            if (best < 0) break;
            Stream& s = streams[best];
            const std::size_t n = op.size();
            if (n > 0 &&
                std::memcmp(op.keys.data() + (n - 1) * stride, s.key.data(), stride) == 0) {
                op.counts[n - 1] += s.count();
            } else {
                if (n + 1 + other > state_guard)
                    throw std::runtime_error(
                        "advance_level: state guard of " + std::to_string(state_guard) +
                        " states exceeded at level " + std::to_string(out.k_));
                op.keys.insert(op.keys.end(), s.key.begin(), s.key.end());
                op.counts.push_back(s.count());
            }
            ++s.idx;
            if (!s.done()) s.load(stride);
        }
    }
    return out;
}

double log_phi(double s, double log_alpha1, double log_alpha2) {
    if (s < 0.0 || s > 2.0)
        throw std::domain_error("log_phi: s must lie in [0,2] for a planar system");
    if (s <= 1.0) return s * log_alpha1;
    return log_alpha1 + (s - 1.0) * log_alpha2;
}

double selector(MapClass cls, double log_base, double log_height, const PressureParams& p) {
    const bool base_major = log_base >= log_height;
    if (cls == MapClass::A) return base_major ? p.s1 : p.s2;
    return base_major ? p.s2 : p.s1;
}

double log_psi(double s, double log_alpha1, double log_alpha2, double sel) {
    return sel * log_alpha1 + (s - sel) * log_alpha2;
}

std::pair<double, double> state_logs(const LevelTable::StateView& state, const BoxLikeIFS& ifs) {
    double log_base = 0.0, log_height = 0.0;
    for (std::size_t i = 0; i < state.u.size(); ++i) {
        const double la = ifs.maps[i].a.log();
        const double lb = ifs.maps[i].b.log();
        log_base += state.u[i] * la + state.v[i] * lb;
        log_height += state.u[i] * lb + state.v[i] * la;
    }
    return {log_base, log_height};
}

LevelEvaluator::LevelEvaluator(const LevelTable& table, const BoxLikeIFS& ifs,
                               const PressureParams& params, ValueFunction fn)
    : fn_(fn), k_(table.level()) {
    const LetterLogs logs = letter_logs(ifs);
    const std::size_t n = table.state_count();
    c_hi_.reserve(n);
    d_hi_.reserve(n);
    if (fn_ == ValueFunction::Singular) {
        c_lo_.reserve(n);
        d_lo_.reserve(n);
    }
    double max_ratio = -std::numeric_limits<double>::infinity();

    table.for_each([&](const LevelTable::StateView& state) {
        // diff = log base - log height through one linear form, so states
        // whose sides agree exactly (e.g. matched swap letters) give 0.0
        double log_base = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < state.u.size(); ++i) {
            log_base += state.u[i] * logs.log_a[i] + state.v[i] * logs.log_b[i];
            diff += (static_cast<double>(state.u[i]) - static_cast<double>(state.v[i])) *
                    (logs.log_a[i] - logs.log_b[i]);
        }
        const double log_height = log_base - diff;
        const double la1 = std::max(log_base, log_height);
        const double la2 = std::min(log_base, log_height);
        const double lc = mpz_log(state.count);
        max_ratio = std::max(max_ratio, la2 - la1);
        if (fn_ == ValueFunction::Modified) {
            const double sel = selector(state.cls, log_base, log_height, params);
            // term(s) = lc + sel*la1 + (s-sel)*la2
            c_hi_.push_back(lc + sel * (la1 - la2));
            d_hi_.push_back(la2);
        } else {
            // s ≤ 1: lc + s*la1 ; s > 1: lc + la1 + (s-1)*la2
            c_lo_.push_back(lc);
            d_lo_.push_back(la1);
            c_hi_.push_back(lc + la1 - la2);
            d_hi_.push_back(la2);
        }
    });
    max_log_ratio_ = max_ratio;
}

double LevelEvaluator::log_sum(double s, int threads) const {
    const bool lo_branch = fn_ == ValueFunction::Singular && s <= 1.0;
    const double* c = (lo_branch ? c_lo_ : c_hi_).data();
    const double* d = (lo_branch ? d_lo_ : d_hi_).data();
    const std::size_t n = c_hi_.size();
    if (n == 0) throw std::logic_error("LevelEvaluator: empty table");

    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(blocks);

    run_blocks(blocks, threads, [&](std::size_t j) {
        const std::size_t begin = j * kBlock;
        const std::size_t end = std::min(begin + kBlock, n);
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t i = begin; i < end; ++i) mx = std::max(mx, c[i] + s * d[i]);
        partial[j] = mx;
    });
    double peak = -std::numeric_limits<double>::infinity();
    for (double p : partial) peak = std::max(peak, p);

    run_blocks(blocks, threads, [&](std::size_t j) {
        const std::size_t begin = j * kBlock;
        const std::size_t end = std::min(begin + kBlock, n);
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += std::exp(c[i] + s * d[i] - peak);
        partial[j] = acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return peak + std::log(total);
}

double psi_sum_log(const LevelTable& table, const BoxLikeIFS& ifs, const PressureParams& params,
                   double s, int threads) {
    return LevelEvaluator(table, ifs, params, ValueFunction::Modified).log_sum(s, threads);
}

LevelRoot solve_level_root(const LevelEvaluator& eval, const PressureParams& params, double tol,
                           int threads) {
    if (tol <= 0) throw std::invalid_argument("solve_level_root: tolerance must be positive");
    const bool singular = eval.function() == ValueFunction::Singular;
    if (eval.log_sum(0.0, threads) <= 0.0) return {0.0, false};

    double hi = singular ? 2.0 : std::max(1.0, params.s1 + params.s2);
    while (eval.log_sum(hi, threads) > 0.0) {
        if (singular) return {2.0, true};  // affinity cannot exceed the plane
        hi += 0.5;
        if (hi > 64.0) throw std::logic_error("solve_level_root: no root below 64");
    }
    double lo = 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (eval.log_sum(mid, threads) > 0.0 ? lo : hi) = mid;
    }
    return {0.5 * (lo + hi), false};
}

namespace {

void validate_schedule(const std::vector<int>& schedule) {
    if (schedule.empty()) throw std::invalid_argument("schedule must be non-empty");
    int prev = 0;
    for (int k : schedule) {
        if (k <= prev)
            throw std::invalid_argument("schedule must be strictly ascending positive levels");
        prev = k;
    }
}

// s_k ≈ s + c/k fitted on the last two scheduled levels; equals 2*s_{2k} - s_k
// on a doubling schedule.
double extrapolate(const std::vector<int>& ks, const std::vector<double>& roots) {
    const std::size_t n = roots.size();
    if (n < 2) return roots.back();
    const double k1 = ks[n - 2], k2 = ks[n - 1];
    const double r1 = roots[n - 2], r2 = roots[n - 1];
    return (k2 * r2 - k1 * r1) / (k2 - k1);
}

DimensionEstimate run_levels(const BoxLikeIFS& ifs, const PressureParams& params, ValueFunction fn,
                             const EstimateOptions& opts) {
    validate_schedule(opts.schedule);
    if (auto err = validate_ifs(ifs)) throw std::invalid_argument(*err);

    DimensionEstimate est;
    est.schedule = opts.schedule;

    LevelTable table(ifs.size());
    int level = 0;
    for (int k : opts.schedule) {
        while (level < k) {
            table = advance_level(table, ifs, opts.state_guard);
            ++level;
        }
        const LevelEvaluator eval(table, ifs, params, fn);
        const LevelRoot root = solve_level_root(eval, params, opts.tol, opts.threads);
        est.roots.push_back(root.value);
        est.any_clamped = est.any_clamped || root.clamped;
    }
    est.final_upper = est.roots.back();
    est.extrapolated = extrapolate(est.schedule, est.roots);
    est.flags.push_back("extrapolation assumes s_k ~ s + c/k; heuristic, not a bound");
    if (est.any_clamped) est.flags.push_back("some level root was clamped at the planar bound 2");
    return est;
}

}  // namespace

DimensionEstimate estimate_dimension(const BoxLikeIFS& ifs, const ProjectionDims& dims,
                                     const EstimateOptions& opts) {
    DimensionEstimate est =
        run_levels(ifs, PressureParams{dims.s1, dims.s2}, ValueFunction::Modified, opts);
    for (const std::string& w : dims.warnings) est.flags.push_back("projections: " + w);
    if (!dims.rigorous)
        est.flags.push_back("projection dimensions not rigorous; roots are conditional upper bounds");
    return est;
}

DimensionEstimate affinity_dimension(const BoxLikeIFS& ifs, const EstimateOptions& opts) {
    return run_levels(ifs, PressureParams{}, ValueFunction::Singular, opts);
}

GapReport gap_diagnostic(const BoxLikeIFS& ifs, const ProjectionDims& dims, int k,
                         const EstimateOptions& opts) {
    if (k < 1) throw std::invalid_argument("gap_diagnostic: level must be at least 1");
    if (auto err = validate_ifs(ifs)) throw std::invalid_argument(*err);

    LevelTable table(ifs.size());
    for (int i = 0; i < k; ++i) table = advance_level(table, ifs, opts.state_guard);

    const LevelEvaluator affinity_eval(table, ifs, PressureParams{}, ValueFunction::Singular);
    const LevelRoot d_hat = solve_level_root(affinity_eval, PressureParams{}, opts.tol, opts.threads);

    GapReport report;
    report.k = k;
    report.d_hat = d_hat.value;
    report.s_max = std::max(dims.s1, dims.s2);
    report.epsilon = std::min(1.0, d_hat.value) - report.s_max;
    if (report.epsilon > 0.0) {
        // states with α1 = α2 force η̂ = 1; snap near-zero ratios so float
        // noise cannot fabricate a certificate
        double max_ratio = affinity_eval.max_log_alpha_ratio();
        if (max_ratio > -1e-12) max_ratio = 0.0;
        report.eta_hat = std::exp(max_ratio / k);
        report.bound = std::pow(report.eta_hat, report.epsilon);

        // Two sound routes below the affinity bound:
        //  (a) d̂ within the submultiplicative range: P(d̂) ≤ (Ψ_k^d̂)^(1/k) ≤ η̂^ε
        //  (b) d̂ above it: Ψ_1 at s1+s2 bounds the pressure root by s1+s2 < d̂
        const double s_star = dims.s1 + dims.s2;
        bool valid = false;
        if (!d_hat.clamped) {
            if (d_hat.value <= s_star) {
                valid = true;
            } else {
                const LevelTable level1 = advance_level(LevelTable(ifs.size()), ifs, opts.state_guard);
                const PressureParams p{dims.s1, dims.s2};
                valid = psi_sum_log(level1, ifs, p, s_star, opts.threads) <= 0.0;
            }
        }
        report.certificate_valid = valid;
        report.gap_detected = valid && report.epsilon > 1e-9 && report.bound < 1.0;
    }
    return report;
}

}  // namespace boxlike
