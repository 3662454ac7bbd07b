#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evtrust/types.hpp"

namespace evtrust {

struct TrustParams {
    double omega = 0.7;          // direct/indirect weight
    double k_exp = 0.2;          // experience rate
    std::uint32_t window_length = 5; // strategy window W
    double lambda = 0.9;         // rating smoothing
    double t0 = 0.5;             // initial trust, mirrored from SimConfig
    double epsilon_clamp = 1e-4; // interior clamp for stored trust
    double tau = 0.3;            // provider's minimum trust in a requestor
};

struct PayoffParams {
    double r_h = 10.0;      // high payment
    double r_l = 6.0;       // low payment
    double c_h = 4.0;       // high-quality cost
    double c_l = 2.0;       // low-quality cost
    double delta = 1.0;     // fraud cost
    double u_h = 14.0;      // requestor utility of high quality
    double u_l = 7.0;       // requestor utility of low quality
    double s_l = 0.5;       // rating for low-quality service
    double s_m = 0.5;       // rating for misleading evaluation
    double alpha = 1.0;     // future-reward weight
    double gamma = 0.9;     // discount
    double k_psi = 10.0;    // selection sigmoid steepness
    double theta_pay = 0.5; // payment/selection trust threshold
    std::uint32_t horizon = 1;
};

struct PolicyParams {
    double exploration_eps = 0.05;
    std::uint32_t pm1_honest_streak = 3;
    double pm1_fraud_prob = 0.8;
    std::string decision_service_url; // empty = rule policies only
    std::uint32_t decision_timeout_ms = 5000;
};

struct MobilityParams {
    std::uint32_t revenue_window = 10;
    double leave_threshold = 0.0;
    std::uint32_t max_idle = 10;
    std::uint32_t removal_idle = 20;
    double churn_rate = 0.02;
};

struct ReplicatorSettings {
    double t_h = 0.9;  // representative trust of high-quality providers
    double t_y = 0.3;  // representative trust of alternative providers
    double t_sh = 0.9; // representative trust seen by honest selectors
    double t_sl = 0.3; // representative trust seen by low-paying selectors
    std::array<double, 3> provider_alt_weights = {1.0, 0.0, 0.0}; // LQ, F, D
};

struct SimConfig {
    std::uint32_t n_agents = 200;
    std::uint32_t rounds = 100;
    std::uint32_t service_type_count = 3;
    double t0 = 0.5;
    double malicious_ratio = 0.25;
    std::optional<std::uint32_t> mutation_round = 60;
    double mutation_fraction = 0.30;
    double noise_sigma = 0.05;
    std::uint64_t seed = 42;
    bool collaborative_tasks = false;
    MechanismKind mechanism = MechanismKind::EvTrust;
    TrustParams trust_params;
    PayoffParams payoff_params;
    PolicyParams policy_params;
    MobilityParams mobility_params;
    ReplicatorSettings replicator_params;
};

struct ValidationIssue {
    std::string field;
    std::string message;
};

// Returns every violated invariant and cross-field constraint; an accepted
// config is returned unchanged by construction (validation never mutates).
std::vector<ValidationIssue> validate_config(const SimConfig& cfg);

// Parses the JSON config document. Unknown keys at any level are reported
// as issues; parse errors surface the offending key/position.
struct ConfigLoadResult {
    SimConfig config;
    std::vector<ValidationIssue> issues; // parse + validation, empty on success
};
ConfigLoadResult load_config_json(const std::string& text);
ConfigLoadResult load_config_file(const std::string& path);

// Serializes the effective config back to JSON (stable key order).
std::string config_to_json(const SimConfig& cfg);

} // namespace evtrust
