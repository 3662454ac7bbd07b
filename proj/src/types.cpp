#include "evtrust/types.hpp"

namespace evtrust {

std::string_view to_string(AgentKind k) {
    switch (k) {
        case AgentKind::R_n: return "R_n";
        case AgentKind::R_m1: return "R_m1";
        case AgentKind::R_m2: return "R_m2";
        case AgentKind::P_n: return "P_n";
        case AgentKind::P_m1: return "P_m1";
        case AgentKind::P_m2: return "P_m2";
        case AgentKind::P_m3: return "P_m3";
    }
    return "?";
}

std::string_view to_string(ProviderStrategy s) {
    switch (s) {
        case ProviderStrategy::HQ: return "HQ";
        case ProviderStrategy::LQ: return "LQ";
        case ProviderStrategy::F: return "F";
        case ProviderStrategy::D: return "D";
    }
    return "?";
}

std::string_view to_string(Role r) {
    return r == Role::Requestor ? "requestor" : "provider";
}

std::string_view to_string(EvaluationBehavior b) {
    switch (b) {
        case EvaluationBehavior::Objective: return "Objective";
        case EvaluationBehavior::Misleading: return "Misleading";
        case EvaluationBehavior::SpitefulLow: return "SpitefulLow";
    }
    return "?";
}

std::string_view to_string(MechanismKind m) {
    switch (m) {
        case MechanismKind::EvTrust: return "EvTrust";
        case MechanismKind::EigenTrust: return "EigenTrust";
        case MechanismKind::BRS: return "BRS";
        case MechanismKind::ICFP: return "ICFP";
    }
    return "?";
}

std::string_view to_string(PaymentTier t) {
    return t == PaymentTier::High ? "High" : "Low";
}

std::optional<AgentKind> parse_agent_kind(std::string_view s) {
    for (AgentKind k : kAllKinds)
        if (s == to_string(k)) return k;
    return std::nullopt;
}

std::optional<ProviderStrategy> parse_provider_strategy(std::string_view s) {
    for (ProviderStrategy v : {ProviderStrategy::HQ, ProviderStrategy::LQ,
                               ProviderStrategy::F, ProviderStrategy::D})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

std::optional<MechanismKind> parse_mechanism(std::string_view s) {
    for (MechanismKind v : {MechanismKind::EvTrust, MechanismKind::EigenTrust,
                            MechanismKind::BRS, MechanismKind::ICFP})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

std::optional<EvaluationBehavior> parse_evaluation_behavior(std::string_view s) {
    for (EvaluationBehavior v :
         {EvaluationBehavior::Objective, EvaluationBehavior::Misleading,
          EvaluationBehavior::SpitefulLow})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

} // namespace evtrust
