#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace evtrust {

using AgentId = std::uint32_t;
using GroupId = std::uint32_t;

enum class Role { Requestor, Provider };

// The seven behavioural archetypes a market participant can have.
enum class AgentKind {
    R_n,   // rational requestor, objective evaluations
    R_m1,  // malicious evaluator: reverse scoring
    R_m2,  // irrational requestor: random selection and scoring
    P_n,   // honest provider
    P_m1,  // fraudulent provider: honest streak, then fraud
    P_m2,  // self-interested provider: low quality by default
    P_m3,  // irrational provider: random strategy
};

enum class ProviderStrategy { HQ, LQ, F, D };

enum class PaymentTier { High, Low };

struct RequestorStrategy {
    bool select = false;
    PaymentTier tier = PaymentTier::Low; // meaningful only when select

    static RequestorStrategy Select(PaymentTier t) { return {true, t}; }
    static RequestorStrategy NotSelect() { return {false, PaymentTier::Low}; }
};

// How a requestor's issued evaluation relates to the objective score.
enum class EvaluationBehavior { Objective, Misleading, SpitefulLow };

enum class MechanismKind { EvTrust, EigenTrust, BRS, ICFP };

struct AgentDescriptor {
    AgentId id = 0;
    Role role = Role::Requestor;
    AgentKind kind = AgentKind::R_n;
    std::uint32_t service_type = 0;
    std::optional<GroupId> group;
    std::uint32_t joined_round = 1;
    bool active = true;
};

constexpr Role role_of(AgentKind k) {
    switch (k) {
        case AgentKind::R_n:
        case AgentKind::R_m1:
        case AgentKind::R_m2: return Role::Requestor;
        default: return Role::Provider;
    }
}

constexpr bool is_malicious(AgentKind k) {
    return k != AgentKind::R_n && k != AgentKind::P_n;
}

std::string_view to_string(AgentKind k);
std::string_view to_string(ProviderStrategy s);
std::string_view to_string(Role r);
std::string_view to_string(EvaluationBehavior b);
std::string_view to_string(MechanismKind m);
std::string_view to_string(PaymentTier t);

std::optional<AgentKind> parse_agent_kind(std::string_view s);
std::optional<ProviderStrategy> parse_provider_strategy(std::string_view s);
std::optional<MechanismKind> parse_mechanism(std::string_view s);
std::optional<EvaluationBehavior> parse_evaluation_behavior(std::string_view s);

inline constexpr AgentKind kAllKinds[] = {
    AgentKind::R_n, AgentKind::R_m1, AgentKind::R_m2,
    AgentKind::P_n, AgentKind::P_m1, AgentKind::P_m2, AgentKind::P_m3,
};

inline constexpr AgentKind kMaliciousKinds[] = {
    AgentKind::R_m1, AgentKind::R_m2,
    AgentKind::P_m1, AgentKind::P_m2, AgentKind::P_m3,
};

} // namespace evtrust
