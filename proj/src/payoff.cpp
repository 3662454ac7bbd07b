#include "evtrust/payoff.hpp"

#include <cmath>

namespace evtrust {

PaymentTier payment_tier(double trust, double theta_pay) {
    return trust > theta_pay ? PaymentTier::High : PaymentTier::Low;
}

RoundPayoff immediate_payoffs(ProviderStrategy p, RequestorStrategy r,
                              const PayoffParams& params) {
    if (!r.select || p == ProviderStrategy::D) return {0.0, 0.0, 0.0};
    const double r_t = tier_amount(r.tier, params);
    switch (p) {
        case ProviderStrategy::HQ:
            return {r_t - params.c_h, params.u_h - r_t, r_t};
        case ProviderStrategy::LQ:
            return {r_t - params.c_l, params.u_l - r_t, r_t};
        case ProviderStrategy::F:
            return {r_t - params.delta, -r_t, r_t};
        case ProviderStrategy::D:
            break;
    }
    return {0.0, 0.0, 0.0};
}

CollaborativeOutcome collaborative_outcome(ProviderStrategy s1, ProviderStrategy s2,
                                           double trust1, double trust2,
                                           const PayoffParams& params) {
    CollaborativeOutcome out;
    out.success = (s1 == ProviderStrategy::HQ && s2 == ProviderStrategy::HQ) ||
                  (s1 == ProviderStrategy::LQ && s2 == ProviderStrategy::LQ);
    if (!out.success) {
        if (s1 == ProviderStrategy::F) out.reward1 = -params.delta;
        if (s2 == ProviderStrategy::F) out.reward2 = -params.delta;
        return out;
    }
    const double mean_trust = 0.5 * (trust1 + trust2);
    const double total = tier_amount(payment_tier(mean_trust, params.theta_pay), params);
    const double mass = trust1 + trust2;
    if (mass <= 0.0) {
        out.reward1 = out.reward2 = 0.5 * total;
    } else {
        out.reward1 = total * trust1 / mass;
        out.reward2 = total * trust2 / mass;
    }
    return out;
}

double selection_probability(double trust, double k_psi, double theta_pay) {
    return 1.0 / (1.0 + std::exp(-k_psi * (trust - theta_pay)));
}

double trust_influence(double trust, const PayoffParams& params) {
    const double r_t = tier_amount(payment_tier(trust, params.theta_pay), params);
    return params.alpha * selection_probability(trust, params.k_psi, params.theta_pay) * r_t;
}

double expected_revenue(double immediate_per_round, double trust,
                        const PayoffParams& params) {
    double stream = 0.0;
    double discount = 1.0;
    for (std::uint32_t t = 0; t < params.horizon; ++t) {
        stream += discount * immediate_per_round;
        discount *= params.gamma;
    }
    return stream + trust_influence(trust, params);
}

} // namespace evtrust
