#include "evtrust/policy.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#define CPPHTTPLIB_NO_EXCEPTIONS
#include <httplib.h>

namespace evtrust {

using nlohmann::json;

namespace {

double revenue_of(const DecisionContext& ctx, const char* key) {
    auto it = ctx.expected_revenue_by_strategy.find(key);
    return it == ctx.expected_revenue_by_strategy.end() ? 0.0 : it->second;
}

EvaluationBehavior draw_behavior(double u) {
    if (u < 1.0 / 3.0) return EvaluationBehavior::Objective;
    if (u < 2.0 / 3.0) return EvaluationBehavior::Misleading;
    return EvaluationBehavior::SpitefulLow;
}

} // namespace

RequestorDecision decide_requestor(AgentKind kind, const DecisionContext& ctx,
                                   const PolicyParams& params) {
    (void)params;
    if (role_of(kind) != Role::Requestor)
        throw std::invalid_argument("decide_requestor: provider kind");

    RequestorDecision out;
    const double select_value = revenue_of(ctx, "Select");
    const PaymentTier tier = ctx.offered_tier;

    switch (kind) {
        case AgentKind::R_n:
            out.strategy = select_value > 0.0 ? RequestorStrategy::Select(tier)
                                              : RequestorStrategy::NotSelect();
            out.evaluation = EvaluationBehavior::Objective;
            break;
        case AgentKind::R_m1:
            // Same selection calculus; scoring inverts once the outcome is seen.
            out.strategy = select_value > 0.0 ? RequestorStrategy::Select(tier)
                                              : RequestorStrategy::NotSelect();
            out.evaluation = EvaluationBehavior::SpitefulLow;
            break;
        case AgentKind::R_m2:
            out.strategy = ctx.rng_draw < 0.5 ? RequestorStrategy::Select(tier)
                                              : RequestorStrategy::NotSelect();
            out.evaluation = draw_behavior(ctx.rng_draw_aux);
            break;
        default:
            break;
    }
    return out;
}

ProviderStrategy decide_provider(AgentKind kind, const DecisionContext& ctx,
                                 const PolicyParams& params, double tau,
                                 std::uint32_t completed_with_counterpart) {
    if (role_of(kind) != Role::Provider)
        throw std::invalid_argument("decide_provider: requestor kind");

    switch (kind) {
        case AgentKind::P_n: {
            if (ctx.trust_in_counterpart <= tau) return ProviderStrategy::D;
            return revenue_of(ctx, "HQ") >= revenue_of(ctx, "LQ")
                       ? ProviderStrategy::HQ
                       : ProviderStrategy::LQ;
        }
        case AgentKind::P_m1: {
            if (completed_with_counterpart < params.pm1_honest_streak)
                return ProviderStrategy::HQ;
            return ctx.rng_draw < params.pm1_fraud_prob ? ProviderStrategy::F
                                                        : ProviderStrategy::HQ;
        }
        case AgentKind::P_m2: {
            if (ctx.trust_in_counterpart <= tau) return ProviderStrategy::D;
            if (revenue_of(ctx, "F") > revenue_of(ctx, "LQ") && ctx.rng_draw < 0.5)
                return ProviderStrategy::F;
            return ProviderStrategy::LQ;
        }
        case AgentKind::P_m3: {
            if (ctx.rng_draw < 0.25) return ProviderStrategy::HQ;
            if (ctx.rng_draw < 0.50) return ProviderStrategy::LQ;
            if (ctx.rng_draw < 0.75) return ProviderStrategy::F;
            return ProviderStrategy::D;
        }
        default:
            break;
    }
    return ProviderStrategy::D;
}

double issued_provider_rating(AgentKind requestor_kind,
                              EvaluationBehavior disposition,
                              ProviderStrategy observed, double current_trust,
                              const PayoffParams& payoff) {
    const double objective = rate_provider(observed, current_trust, payoff.s_l);
    switch (requestor_kind) {
        case AgentKind::R_n:
            return objective;
        case AgentKind::R_m1:
            // Reverse scoring; a decline leaves nothing to invert.
            if (observed == ProviderStrategy::D) return current_trust;
            return 1.0 - objective;
        case AgentKind::R_m2:
            switch (disposition) {
                case EvaluationBehavior::Objective: return objective;
                case EvaluationBehavior::Misleading: return payoff.s_m;
                case EvaluationBehavior::SpitefulLow: return 0.0;
            }
            return objective;
        default:
            return objective;
    }
}

EvaluationBehavior classify_evaluation(double issued, double objective) {
    if (std::abs(issued - objective) <= 1e-9) return EvaluationBehavior::Objective;
    return issued < objective ? EvaluationBehavior::SpitefulLow
                              : EvaluationBehavior::Misleading;
}

std::string external_decision_request(const DecisionContext& ctx) {
    json msg;
    msg["agent_kind"] = std::string(to_string(ctx.self.kind));
    msg["service_type"] = ctx.self.service_type;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", ctx.counterpart_trust_in_self);
    msg["trust_to_requester"] = std::stod(buf);
    msg["reward_amount"] = ctx.offered_payment;
    json analysis = json::object();
    for (const auto& [k, v] : ctx.expected_revenue_by_strategy) analysis[k] = v;
    msg["utility_analysis"] = analysis;
    json legal = json::array();
    if (ctx.self.role == Role::Provider)
        for (const char* s : {"HQ", "LQ", "F", "D"}) legal.push_back(s);
    else
        for (const char* s : {"Select", "NotSelect"}) legal.push_back(s);
    msg["legal_strategies"] = legal;
    return msg.dump();
}

std::optional<std::string> parse_decision_reply(const std::string& body,
                                                const DecisionContext& ctx) {
    json j = json::parse(body, nullptr, /*allow_exceptions=*/false);
    std::string token;
    if (j.is_object() && j.contains("strategy") && j["strategy"].is_string())
        token = j["strategy"].get<std::string>();
    else if (j.is_string())
        token = j.get<std::string>();
    else
        return std::nullopt;

    if (ctx.self.role == Role::Provider) {
        if (parse_provider_strategy(token)) return token;
    } else {
        if (token == "Select" || token == "NotSelect") return token;
    }
    return std::nullopt;
}

DecisionServiceClient::DecisionServiceClient(std::string url,
                                             std::uint32_t timeout_ms)
    : timeout_ms_(timeout_ms) {
    // Accepts http://host:port[/path]
    const std::string scheme = "http://";
    if (url.rfind(scheme, 0) != 0) return;
    std::string rest = url.substr(scheme.size());
    const auto slash = rest.find('/');
    if (slash != std::string::npos) {
        path_ = rest.substr(slash);
        rest = rest.substr(0, slash);
    }
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
        host_ = rest;
        port_ = 80;
    } else {
        host_ = rest.substr(0, colon);
        port_ = std::atoi(rest.c_str() + colon + 1);
    }
}

std::optional<std::string> DecisionServiceClient::request_decision(
    const DecisionContext& ctx) const {
    if (!configured()) return std::nullopt;
    httplib::Client cli(host_, port_);
    cli.set_connection_timeout(0, timeout_ms_ * 1000);
    cli.set_read_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);
    auto res = cli.Post(path_, external_decision_request(ctx), "application/json");
    if (!res || res->status != 200) {
        std::fprintf(stderr,
                     "warning: decision service unavailable for agent %u; "
                     "falling back to rule policy\n",
                     ctx.self.id);
        return std::nullopt;
    }
    auto token = parse_decision_reply(res->body, ctx);
    if (!token)
        std::fprintf(stderr,
                     "warning: illegal decision reply for agent %u; "
                     "falling back to rule policy\n",
                     ctx.self.id);
    return token;
}

} // namespace evtrust
