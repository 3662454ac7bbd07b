#include "evtrust/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace evtrust {

using nlohmann::json;

namespace {

void check(std::vector<ValidationIssue>& out, bool ok, const char* field,
           const char* message) {
    if (!ok) out.push_back({field, message});
}

bool in01(double v) { return v >= 0.0 && v <= 1.0; }

} // namespace

std::vector<ValidationIssue> validate_config(const SimConfig& cfg) {
    std::vector<ValidationIssue> out;

    check(out, cfg.n_agents >= 2, "n_agents", "must be >= 2");
    check(out, cfg.rounds >= 1, "rounds", "must be >= 1");
    check(out, cfg.service_type_count >= 1, "service_type_count", "must be >= 1");
    check(out, in01(cfg.t0), "t0", "must lie in [0,1]");
    check(out, in01(cfg.malicious_ratio), "malicious_ratio", "must lie in [0,1]");
    check(out, in01(cfg.mutation_fraction), "mutation_fraction", "must lie in [0,1]");
    check(out, cfg.noise_sigma >= 0.0, "noise_sigma", "must be >= 0");

    const TrustParams& t = cfg.trust_params;
    check(out, in01(t.omega), "trust_params.omega", "must lie in [0,1]");
    check(out, t.k_exp > 0.0, "trust_params.k_exp", "must be > 0");
    check(out, t.window_length >= 2, "trust_params.window_length", "must be >= 2");
    check(out, in01(t.lambda), "trust_params.lambda", "must lie in [0,1]");
    check(out, t.epsilon_clamp > 0.0 && t.epsilon_clamp < 0.5,
          "trust_params.epsilon_clamp", "must lie in (0, 0.5)");
    check(out, in01(t.tau), "trust_params.tau", "must lie in [0,1]");

    const PayoffParams& p = cfg.payoff_params;
    check(out, p.r_h > p.r_l && p.r_l > 0.0, "payoff_params.r_h",
          "payments must satisfy r_h > r_l > 0");
    check(out, p.c_h > p.c_l && p.c_l >= 0.0, "payoff_params.c_h",
          "costs must satisfy c_h > c_l >= 0");
    check(out, p.u_h > p.u_l && p.u_l > 0.0, "payoff_params.u_h",
          "utilities must satisfy u_h > u_l > 0");
    check(out, p.u_h > p.c_h, "payoff_params.u_h", "must exceed c_h");
    check(out, p.u_h > p.r_h, "payoff_params.u_h", "must exceed r_h");
    check(out, p.u_l > p.r_l, "payoff_params.u_l", "must exceed r_l");
    check(out, p.delta >= 0.0, "payoff_params.delta", "must be >= 0");
    check(out, p.s_l > 0.0 && p.s_l < 1.0, "payoff_params.s_l", "must lie in (0,1)");
    check(out, p.s_m > 0.0 && p.s_m < 1.0, "payoff_params.s_m", "must lie in (0,1)");
    check(out, p.alpha >= 0.0, "payoff_params.alpha", "must be >= 0");
    check(out, p.gamma >= 0.0 && p.gamma < 1.0, "payoff_params.gamma",
          "must lie in [0,1)");
    check(out, p.k_psi > 0.0, "payoff_params.k_psi", "must be > 0");
    check(out, p.theta_pay > 0.0 && p.theta_pay < 1.0, "payoff_params.theta_pay",
          "must lie in (0,1)");
    check(out, p.horizon >= 1, "payoff_params.horizon", "must be >= 1");

    const PolicyParams& pol = cfg.policy_params;
    check(out, in01(pol.exploration_eps), "policy_params.exploration_eps",
          "must lie in [0,1]");
    check(out, in01(pol.pm1_fraud_prob), "policy_params.pm1_fraud_prob",
          "must lie in [0,1]");

    const MobilityParams& m = cfg.mobility_params;
    check(out, m.max_idle >= 1, "mobility_params.max_idle", "must be >= 1");
    check(out, m.removal_idle > m.max_idle, "mobility_params.removal_idle",
          "must exceed max_idle");
    check(out, m.revenue_window >= 1, "mobility_params.revenue_window",
          "must be >= 1");
    check(out, in01(m.churn_rate), "mobility_params.churn_rate",
          "must lie in [0,1]");

    const ReplicatorSettings& r = cfg.replicator_params;
    check(out, in01(r.t_h) && in01(r.t_y) && in01(r.t_sh) && in01(r.t_sl),
          "replicator_params", "trust levels must lie in [0,1]");
    const double wsum =
        r.provider_alt_weights[0] + r.provider_alt_weights[1] + r.provider_alt_weights[2];
    const bool wok = r.provider_alt_weights[0] >= 0.0 &&
                     r.provider_alt_weights[1] >= 0.0 &&
                     r.provider_alt_weights[2] >= 0.0 &&
                     std::abs(wsum - 1.0) < 1e-9;
    check(out, wok, "replicator_params.provider_alt_weights",
          "must be nonnegative and sum to 1");

    return out;
}

namespace {

// Tracks which keys were consumed so leftovers can be reported as unknown.
class ObjectReader {
public:
    ObjectReader(const json& obj, std::string prefix,
                 std::vector<ValidationIssue>& issues)
        : obj_(obj), prefix_(std::move(prefix)), issues_(issues) {}

    ~ObjectReader() {
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (!consumed(it.key()))
                issues_.push_back({prefix_ + it.key(), "unknown key"});
        }
    }

    template <typename T>
    void get(const char* key, T& out) {
        auto it = obj_.find(key);
        if (it == obj_.end()) return;
        seen_.push_back(key);
        try {
            out = it->get<T>();
        } catch (const json::exception&) {
            issues_.push_back({prefix_ + key, "wrong type"});
        }
    }

    const json* sub(const char* key) {
        auto it = obj_.find(key);
        if (it == obj_.end()) return nullptr;
        seen_.push_back(key);
        if (!it->is_object()) {
            issues_.push_back({prefix_ + key, "must be an object"});
            return nullptr;
        }
        return &*it;
    }

    const json* raw(const char* key) {
        auto it = obj_.find(key);
        if (it == obj_.end()) return nullptr;
        seen_.push_back(key);
        return &*it;
    }

private:
    bool consumed(const std::string& k) const {
        for (const auto& s : seen_)
            if (s == k) return true;
        return false;
    }

    const json& obj_;
    std::string prefix_;
    std::vector<ValidationIssue>& issues_;
    std::vector<std::string> seen_;
};

void read_trust(const json& j, TrustParams& t, std::vector<ValidationIssue>& issues) {
    ObjectReader r(j, "trust_params.", issues);
    r.get("omega", t.omega);
    r.get("k_exp", t.k_exp);
    r.get("window_length", t.window_length);
    r.get("lambda", t.lambda);
    r.get("epsilon_clamp", t.epsilon_clamp);
    r.get("tau", t.tau);
}

void read_payoff(const json& j, PayoffParams& p, std::vector<ValidationIssue>& issues) {
    ObjectReader r(j, "payoff_params.", issues);
    r.get("r_h", p.r_h);
    r.get("r_l", p.r_l);
    r.get("c_h", p.c_h);
    r.get("c_l", p.c_l);
    r.get("delta", p.delta);
    r.get("u_h", p.u_h);
    r.get("u_l", p.u_l);
    r.get("s_l", p.s_l);
    r.get("s_m", p.s_m);
    r.get("alpha", p.alpha);
    r.get("gamma", p.gamma);
    r.get("k_psi", p.k_psi);
    r.get("theta_pay", p.theta_pay);
    r.get("horizon", p.horizon);
}

void read_policy(const json& j, PolicyParams& p, std::vector<ValidationIssue>& issues) {
    ObjectReader r(j, "policy_params.", issues);
    r.get("exploration_eps", p.exploration_eps);
    r.get("pm1_honest_streak", p.pm1_honest_streak);
    r.get("pm1_fraud_prob", p.pm1_fraud_prob);
    r.get("decision_service_url", p.decision_service_url);
    r.get("decision_timeout_ms", p.decision_timeout_ms);
}

void read_mobility(const json& j, MobilityParams& m, std::vector<ValidationIssue>& issues) {
    ObjectReader r(j, "mobility_params.", issues);
    r.get("revenue_window", m.revenue_window);
    r.get("leave_threshold", m.leave_threshold);
    r.get("max_idle", m.max_idle);
    r.get("removal_idle", m.removal_idle);
    r.get("churn_rate", m.churn_rate);
}

void read_replicator(const json& j, ReplicatorSettings& s,
                     std::vector<ValidationIssue>& issues) {
    ObjectReader r(j, "replicator_params.", issues);
    r.get("t_h", s.t_h);
    r.get("t_y", s.t_y);
    r.get("t_sh", s.t_sh);
    r.get("t_sl", s.t_sl);
    if (const json* w = r.raw("provider_alt_weights")) {
        if (w->is_array() && w->size() == 3) {
            try {
                for (int i = 0; i < 3; ++i)
                    s.provider_alt_weights[static_cast<std::size_t>(i)] =
                        (*w)[static_cast<std::size_t>(i)].get<double>();
            } catch (const json::exception&) {
                issues.push_back({"replicator_params.provider_alt_weights", "wrong type"});
            }
        } else {
            issues.push_back({"replicator_params.provider_alt_weights",
                              "must be an array of 3 numbers"});
        }
    }
}

} // namespace

ConfigLoadResult load_config_json(const std::string& text) {
    ConfigLoadResult res;
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        res.issues.push_back({"<document>", "not valid JSON"});
        return res;
    }
    if (!j.is_object()) {
        res.issues.push_back({"<document>", "top level must be a JSON object"});
        return res;
    }

    SimConfig& c = res.config;
    {
        ObjectReader r(j, "", res.issues);
        r.get("n_agents", c.n_agents);
        r.get("rounds", c.rounds);
        r.get("service_type_count", c.service_type_count);
        r.get("t0", c.t0);
        r.get("malicious_ratio", c.malicious_ratio);
        if (const json* mr = r.raw("mutation_round")) {
            if (mr->is_null())
                c.mutation_round.reset();
            else if (mr->is_number_unsigned())
                c.mutation_round = mr->get<std::uint32_t>();
            else
                res.issues.push_back({"mutation_round", "must be a round index or null"});
        }
        r.get("mutation_fraction", c.mutation_fraction);
        r.get("noise_sigma", c.noise_sigma);
        r.get("seed", c.seed);
        r.get("collaborative_tasks", c.collaborative_tasks);
        if (const json* m = r.raw("mechanism")) {
            if (m->is_string()) {
                if (auto parsed = parse_mechanism(m->get<std::string>()))
                    c.mechanism = *parsed;
                else
                    res.issues.push_back(
                        {"mechanism", "must be one of EvTrust, EigenTrust, BRS, ICFP"});
            } else {
                res.issues.push_back({"mechanism", "must be a string"});
            }
        }
        if (const json* s = r.sub("trust_params")) read_trust(*s, c.trust_params, res.issues);
        if (const json* s = r.sub("payoff_params")) read_payoff(*s, c.payoff_params, res.issues);
        if (const json* s = r.sub("policy_params")) read_policy(*s, c.policy_params, res.issues);
        if (const json* s = r.sub("mobility_params"))
            read_mobility(*s, c.mobility_params, res.issues);
        if (const json* s = r.sub("replicator_params"))
            read_replicator(*s, c.replicator_params, res.issues);
    }

    c.trust_params.t0 = c.t0;
    if (res.issues.empty()) res.issues = validate_config(c);
    return res;
}

ConfigLoadResult load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ConfigLoadResult res;
        res.issues.push_back({"<file>", "cannot open " + path});
        return res;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return load_config_json(ss.str());
}

std::string config_to_json(const SimConfig& c) {
    json j;
    j["n_agents"] = c.n_agents;
    j["rounds"] = c.rounds;
    j["service_type_count"] = c.service_type_count;
    j["t0"] = c.t0;
    j["malicious_ratio"] = c.malicious_ratio;
    if (c.mutation_round)
        j["mutation_round"] = *c.mutation_round;
    else
        j["mutation_round"] = nullptr;
    j["mutation_fraction"] = c.mutation_fraction;
    j["noise_sigma"] = c.noise_sigma;
    j["seed"] = c.seed;
    j["collaborative_tasks"] = c.collaborative_tasks;
    j["mechanism"] = std::string(to_string(c.mechanism));

    const TrustParams& t = c.trust_params;
    j["trust_params"] = {
        {"omega", t.omega},         {"k_exp", t.k_exp},
        {"window_length", t.window_length}, {"lambda", t.lambda},
        {"epsilon_clamp", t.epsilon_clamp}, {"tau", t.tau},
    };
    const PayoffParams& p = c.payoff_params;
    j["payoff_params"] = {
        {"r_h", p.r_h},   {"r_l", p.r_l},   {"c_h", p.c_h},
        {"c_l", p.c_l},   {"delta", p.delta}, {"u_h", p.u_h},
        {"u_l", p.u_l},   {"s_l", p.s_l},   {"s_m", p.s_m},
        {"alpha", p.alpha}, {"gamma", p.gamma}, {"k_psi", p.k_psi},
        {"theta_pay", p.theta_pay}, {"horizon", p.horizon},
    };
    const PolicyParams& pol = c.policy_params;
    j["policy_params"] = {
        {"exploration_eps", pol.exploration_eps},
        {"pm1_honest_streak", pol.pm1_honest_streak},
        {"pm1_fraud_prob", pol.pm1_fraud_prob},
        {"decision_service_url", pol.decision_service_url},
        {"decision_timeout_ms", pol.decision_timeout_ms},
    };
    const MobilityParams& m = c.mobility_params;
    j["mobility_params"] = {
        {"revenue_window", m.revenue_window},
        {"leave_threshold", m.leave_threshold},
        {"max_idle", m.max_idle},
        {"removal_idle", m.removal_idle},
        {"churn_rate", m.churn_rate},
    };
    const ReplicatorSettings& r = c.replicator_params;
    j["replicator_params"] = {
        {"t_h", r.t_h}, {"t_y", r.t_y}, {"t_sh", r.t_sh}, {"t_sl", r.t_sl},
        {"provider_alt_weights", r.provider_alt_weights},
    };
    return j.dump(2) + "\n";
}

} // namespace evtrust
