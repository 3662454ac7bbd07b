#pragma once

#include "evtrust/config.hpp"
#include "evtrust/types.hpp"

namespace evtrust {

struct RoundPayoff {
    double provider_payoff = 0.0;
    double requestor_payoff = 0.0;
    double payment = 0.0; // amount actually transferred: 0, r_l or r_h
};

struct CollaborativeOutcome {
    bool success = false;
    double reward1 = 0.0;
    double reward2 = 0.0;
};

// Payment tier unlocked by a trust level; ties map to the low tier.
PaymentTier payment_tier(double trust, double theta_pay);

inline double tier_amount(PaymentTier t, const PayoffParams& p) {
    return t == PaymentTier::High ? p.r_h : p.r_l;
}

// One cell of the stage-game matrix.
RoundPayoff immediate_payoffs(ProviderStrategy p, RequestorStrategy r,
                              const PayoffParams& params);

// Two-provider joint task: completes only when both play HQ or both play
// LQ; the pooled reward is tiered by mean trust and split in proportion to
// each provider's trust. A fraudulent participant bears the fraud cost on
// failure.
CollaborativeOutcome collaborative_outcome(ProviderStrategy s1, ProviderStrategy s2,
                                           double trust1, double trust2,
                                           const PayoffParams& params);

// Sigmoid probability of being selected given a trust level.
double selection_probability(double trust, double k_psi, double theta_pay);

// Future-reward value of holding a trust level: alpha * psi(T) * r_T.
double trust_influence(double trust, const PayoffParams& params);

// Discounted immediate stream over the horizon plus the trust term.
double expected_revenue(double immediate_per_round, double trust,
                        const PayoffParams& params);

} // namespace evtrust
