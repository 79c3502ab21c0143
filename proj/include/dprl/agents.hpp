#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dprl/aggregates.hpp"
#include "dprl/counts.hpp"
#include "dprl/environments.hpp"
#include "dprl/mdp.hpp"
#include "dprl/multigroup.hpp"
#include "dprl/radii.hpp"
#include "dprl/rng.hpp"

namespace dprl {

// Exploration-noise family injected into the backward recursion.
//   UcbConstant       w = min(H-h, L * eps_V(n)) applied optimistically
//   GaussianTs        w = eps_V(n) * xi, xi ~ N(0, ts_variance) (default SH)
//   CaseStudyGaussian w ~ N(0, sigma^2 / max(1, n(h,.,a))) per (h,a) pair
struct PerturbationSpec {
    enum class Kind { UcbConstant, GaussianTs, CaseStudyGaussian };
    Kind kind = Kind::GaussianTs;
    double ucb_multiplier = 1.0;      // L(H,S,A)
    double ts_variance = 0.0;         // 0 -> S*H
    double explore_sigma = 0.1;       // case-study sigma
    std::optional<double> clip;       // |xi| <= W_bar when set
    bool per_patient = false;         // contextual agents: redraw per patient
};

enum class AgentMode { Theoretical, CaseStudy };

struct AgentConfig {
    std::string algorithm = "personalized";
    RadiusParams radius;              // delta, H, S, A, T, Delta (fixed), gamma
    PerturbationSpec perturbation;
    AgentMode mode = AgentMode::Theoretical;
    double cluster_c = 0.5;           // clustering radius constant C
    double ridge = 1e-6;              // contextual fits
    double p_floor = 1e-4;            // fitted-probability clamp
    double cost_intervention = 0.13;  // contextual agents rebuild cost MDPs
    double cost_readmission = 10.0;
    Objective objective = Objective::MinimizeCost;
    std::optional<int> absorbing_state;  // structural knowledge: value-0 terminal
    int initial_state = 0;
};

// One learning agent per (target class, replication). The harness asks for
// the iteration policy, simulates arrivals under it, and feeds the episodes
// back through absorb(). Instances are single-threaded.
class Agent {
public:
    explicit Agent(const AgentConfig& config);
    virtual ~Agent() = default;

    virtual DeterministicPolicy policy_for_iteration(int t, Rng& rng) = 0;

    // Contextual agents plan per patient; everyone else returns the
    // iteration policy.
    virtual bool per_patient() const { return false; }
    virtual DeterministicPolicy policy_for_patient(double feature, Rng& rng);

    virtual void absorb(const std::vector<Trajectory>& trajectories);

    const TrajectoryCounts& counts() const { return counts_; }
    const AgentConfig& config() const { return config_; }
    int completed_iterations() const { return iteration_; }

protected:
    int horizon() const { return config_.radius.horizon; }
    int num_states() const { return config_.radius.num_states; }
    int num_actions() const { return config_.radius.num_actions; }
    bool maximize() const { return config_.objective == Objective::MaximizeReward; }
    bool is_absorbing(int s) const {
        return config_.absorbing_state && *config_.absorbing_state == s;
    }

    // Shared perturbed backward recursion. `estimate` supplies the cell
    // estimate given the next-layer values (JS needs them); noise is drawn
    // in a fixed (h desc, s asc, a asc) order so agents sharing a stream
    // consume it identically. `eps_v` scales theoretical-mode noise.
    template <typename EstimateFn, typename EpsVFn>
    DeterministicPolicy perturbed_recursion(EstimateFn&& estimate, EpsVFn&& eps_v, Rng& rng);

    double draw_cell_noise(double eps_v, Rng& rng);  // theoretical kinds

    AgentConfig config_;
    TrajectoryCounts counts_;
    int iteration_ = 0;
    DeterministicPolicy last_policy_;
};

// Factory for every tabular algorithm tag: personalized, data-pooling,
// complete, js, clustering. Contextual tags live in agents_contextual.
// `historical` may be null (personalized) and must outlive the agent.
std::unique_ptr<Agent> make_agent(const AgentConfig& config, const HistoricalDataset* historical);

// Exposed for the perturbation-ordering property test: the value-radius
// scale the data-pooling agent uses at one cell.
double data_pooling_eps_v(const AgentConfig& config, long long n, long long historical_n);

}  // namespace dprl
