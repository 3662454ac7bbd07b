#pragma once

#include <map>
#include <optional>
#include <string>

#include "evtrust/config.hpp"
#include "evtrust/payoff.hpp"
#include "evtrust/types.hpp"

namespace evtrust {

// Everything a policy may look at for one decision. Policies are pure:
// all randomness comes in through the two engine-supplied draws, so a
// decision is a deterministic function of this context.
struct DecisionContext {
    AgentDescriptor self;
    AgentDescriptor counterpart;
    double trust_in_counterpart = 0.5;
    double counterpart_trust_in_self = 0.5;
    double offered_payment = 0.0;
    PaymentTier offered_tier = PaymentTier::Low;
    std::map<std::string, double> expected_revenue_by_strategy;
    std::uint32_t round = 1;
    double rng_draw = 0.0;
    double rng_draw_aux = 0.0;
};

struct RequestorDecision {
    RequestorStrategy strategy;
    EvaluationBehavior evaluation = EvaluationBehavior::Objective;
};

RequestorDecision decide_requestor(AgentKind kind, const DecisionContext& ctx,
                                   const PolicyParams& params);

ProviderStrategy decide_provider(AgentKind kind, const DecisionContext& ctx,
                                 const PolicyParams& params, double tau,
                                 std::uint32_t completed_with_counterpart);

// The rating a requestor of the given kind actually issues after observing
// the provider's strategy. `disposition` is the evaluation conduct chosen
// at decision time (only consulted for R_m2, whose conduct is drawn).
double issued_provider_rating(AgentKind requestor_kind,
                              EvaluationBehavior disposition,
                              ProviderStrategy observed, double current_trust,
                              const PayoffParams& payoff);

// How a counterpart labels an issued rating relative to the objective one.
EvaluationBehavior classify_evaluation(double issued, double objective);

// --- external decision service -------------------------------------------
// The simulator can delegate strategy choices to a local HTTP endpoint.
// Request/reply are JSON; an unusable reply falls back to the rule policy.

std::string external_decision_request(const DecisionContext& ctx);

// Accepts a reply body; returns the chosen strategy token when it is one
// of the legal strategies for the context's role, otherwise nullopt.
std::optional<std::string> parse_decision_reply(const std::string& body,
                                                const DecisionContext& ctx);

class DecisionServiceClient {
public:
    DecisionServiceClient(std::string url, std::uint32_t timeout_ms);

    // Returns the validated strategy token, or nullopt on timeout,
    // transport failure or an illegal reply (caller falls back).
    std::optional<std::string> request_decision(const DecisionContext& ctx) const;

    bool configured() const { return !host_.empty(); }

private:
    std::string host_;
    int port_ = 0;
    std::string path_ = "/decide";
    std::uint32_t timeout_ms_ = 5000;
};

} // namespace evtrust
