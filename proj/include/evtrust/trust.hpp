#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "evtrust/config.hpp"
#include "evtrust/types.hpp"

namespace evtrust {

// Per-pair first-hand evidence feeding the Bayesian direct-trust update.
struct TrustEvidence {
    std::uint32_t completions = 0;              // successfully completed tasks
    std::deque<ProviderStrategy> strategy_window; // last <= W observed strategies
    std::optional<double> last_rating;

    void observe_strategy(ProviderStrategy s, std::uint32_t window_cap) {
        strategy_window.push_back(s);
        while (strategy_window.size() > window_cap) strategy_window.pop_front();
    }
};

struct LikelihoodPair {
    double p_h = 0.5;  // P(evidence | trustworthy)
    double p_not = 0.5; // P(evidence | not trustworthy)
};

struct ChangeLikelihoods {
    double p_h = 0.5;
    double p_not = 0.5;
    double rho = 0.0; // strategy change rate over adjacent window pairs
};

struct Rating {
    double value = 0.0;
    AgentId issuer = 0;
    AgentId subject = 0;
    std::uint32_t round = 0;
};

// Experience channel: completions C make trustworthiness more likely.
LikelihoodPair experience_likelihoods(std::uint32_t completions, double k_exp);

// Change channel: the fraction of adjacent strategy flips in the window.
// Empty window carries no evidence; the caller substitutes (0.5, 0.5).
std::optional<ChangeLikelihoods> change_likelihoods(
    const std::deque<ProviderStrategy>& window);

// One Bayesian step combining both channels under naive independence.
// A channel with no usable evidence (zero completions; fewer than two
// window entries) contributes the neutral pair so it cannot erase the
// prior. Result is clamped into [eps, 1-eps].
double bayes_direct_update(double prior, const TrustEvidence& evidence,
                           const TrustParams& params);

// Exponential smoothing of a fresh rating into the running trust value.
double rating_blend(double trust, double rating, double lambda, double eps);

// Bayesian step followed by rating smoothing when a rating is present.
double direct_update(double prior, const TrustEvidence& evidence,
                     std::optional<double> rating, const TrustParams& params);

// Mean of (trust in neighbor) x (neighbor's opinion of the subject);
// falls back to t0 when no opinions exist.
double indirect_trust(const std::vector<std::pair<double, double>>& opinions,
                      double t0);

double combined_trust(double direct, double indirect, double omega);

// Score a provider's observed strategy (objective rule).
double rate_provider(ProviderStrategy strategy, double current_trust, double s_l);

// Score a requestor's evaluation conduct.
double rate_requestor(EvaluationBehavior behavior, double s_m);

inline double clamp_trust(double v, double eps) {
    if (v < eps) return eps;
    if (v > 1.0 - eps) return 1.0 - eps;
    return v;
}

// Directed pairwise trust store with the evidence behind each value.
class TrustLedger {
public:
    explicit TrustLedger(double t0 = 0.5, double eps = 1e-4)
        : t0_(t0), eps_(eps) {}

    struct Entry {
        double value;
        TrustEvidence evidence;
        std::uint32_t last_interaction_round = 0;
    };

    double value(AgentId src, AgentId dst) const {
        auto it = map_.find(key(src, dst));
        return it == map_.end() ? t0_ : it->second.value;
    }

    bool has(AgentId src, AgentId dst) const {
        return map_.find(key(src, dst)) != map_.end();
    }

    Entry& entry(AgentId src, AgentId dst) {
        auto [it, inserted] = map_.try_emplace(key(src, dst));
        if (inserted) it->second.value = clamp_trust(t0_, eps_);
        return it->second;
    }

    const Entry* find(AgentId src, AgentId dst) const {
        auto it = map_.find(key(src, dst));
        return it == map_.end() ? nullptr : &it->second;
    }

    void set_value(AgentId src, AgentId dst, double v) {
        entry(src, dst).value = clamp_trust(v, eps_);
    }

    std::size_t size() const { return map_.size(); }
    double t0() const { return t0_; }
    double eps() const { return eps_; }

    // Rows sorted by (src, dst) for reproducible exports.
    std::vector<std::pair<std::pair<AgentId, AgentId>, const Entry*>> sorted_rows() const;

    // CSV: round,src_id,dst_id,trust  (trust at 6 decimal places).
    std::string snapshot_csv(std::uint32_t round) const;

private:
    static std::uint64_t key(AgentId src, AgentId dst) {
        return (static_cast<std::uint64_t>(src) << 32) | dst;
    }

    double t0_;
    double eps_;
    std::unordered_map<std::uint64_t, Entry> map_;
};

} // namespace evtrust
