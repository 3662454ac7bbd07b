#include "evtrust/trust.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace evtrust {

LikelihoodPair experience_likelihoods(std::uint32_t completions, double k_exp) {
    const double p_not = std::exp(-k_exp * static_cast<double>(completions));
    return {1.0 - p_not, p_not};
}

std::optional<ChangeLikelihoods> change_likelihoods(
    const std::deque<ProviderStrategy>& window) {
    if (window.empty()) return std::nullopt;
    if (window.size() == 1) return ChangeLikelihoods{1.0, 0.0, 0.0};
    std::size_t changes = 0;
    for (std::size_t i = 0; i + 1 < window.size(); ++i)
        if (window[i] != window[i + 1]) ++changes;
    const double rho =
        static_cast<double>(changes) / static_cast<double>(window.size() - 1);
    return ChangeLikelihoods{1.0 - rho, rho, rho};
}

double bayes_direct_update(double prior, const TrustEvidence& evidence,
                           const TrustParams& params) {
    // Zero completions would force p_h = 0 and annihilate the prior, so the
    // experience channel only participates once a task has completed.
    LikelihoodPair exp_pair{0.5, 0.5};
    if (evidence.completions > 0)
        exp_pair = experience_likelihoods(evidence.completions, params.k_exp);

    // A single observation exposes no change behaviour; require at least
    // one adjacent pair before the channel carries evidence.
    LikelihoodPair change_pair{0.5, 0.5};
    if (evidence.strategy_window.size() >= 2) {
        const auto ch = change_likelihoods(evidence.strategy_window);
        change_pair = {ch->p_h, ch->p_not};
    }

    const double joint_h = exp_pair.p_h * change_pair.p_h;
    const double joint_not = exp_pair.p_not * change_pair.p_not;
    const double denom = joint_h * prior + joint_not * (1.0 - prior);
    if (denom == 0.0) return prior; // degenerate evidence
    return clamp_trust(joint_h * prior / denom, params.epsilon_clamp);
}

double rating_blend(double trust, double rating, double lambda, double eps) {
    return clamp_trust(lambda * trust + (1.0 - lambda) * rating, eps);
}

double direct_update(double prior, const TrustEvidence& evidence,
                     std::optional<double> rating, const TrustParams& params) {
    const double posterior = bayes_direct_update(prior, evidence, params);
    if (!rating) return posterior;
    return rating_blend(posterior, *rating, params.lambda, params.epsilon_clamp);
}

double indirect_trust(const std::vector<std::pair<double, double>>& opinions,
                      double t0) {
    if (opinions.empty()) return t0;
    double sum = 0.0;
    for (const auto& [link, opinion] : opinions) sum += link * opinion;
    return sum / static_cast<double>(opinions.size());
}

double combined_trust(double direct, double indirect, double omega) {
    return omega * direct + (1.0 - omega) * indirect;
}

double rate_provider(ProviderStrategy strategy, double current_trust, double s_l) {
    switch (strategy) {
        case ProviderStrategy::HQ: return 1.0;
        case ProviderStrategy::LQ: return s_l;
        case ProviderStrategy::F: return 0.0;
        case ProviderStrategy::D: return current_trust;
    }
    return current_trust;
}

double rate_requestor(EvaluationBehavior behavior, double s_m) {
    switch (behavior) {
        case EvaluationBehavior::Objective: return 1.0;
        case EvaluationBehavior::Misleading: return s_m;
        case EvaluationBehavior::SpitefulLow: return 0.0;
    }
    return 0.0;
}

std::vector<std::pair<std::pair<AgentId, AgentId>, const TrustLedger::Entry*>>
TrustLedger::sorted_rows() const {
    std::vector<std::pair<std::pair<AgentId, AgentId>, const Entry*>> rows;
    rows.reserve(map_.size());
    for (const auto& [k, entry] : map_)
        rows.push_back({{static_cast<AgentId>(k >> 32),
                         static_cast<AgentId>(k & 0xFFFFFFFFu)},
                        &entry});
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rows;
}

std::string TrustLedger::snapshot_csv(std::uint32_t round) const {
    std::string out = "round,src_id,dst_id,trust\n";
    char line[96];
    for (const auto& [pair, entry] : sorted_rows()) {
        std::snprintf(line, sizeof(line), "%u,%u,%u,%.6f\n", round, pair.first,
                      pair.second, entry->value);
        out += line;
    }
    return out;
}

} // namespace evtrust
