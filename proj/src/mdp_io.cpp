#include "dprl/mdp_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dprl {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw std::invalid_argument(name + ":" + std::to_string(line) + ": " + msg);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

FiniteHorizonMdp load_mdp(std::istream& in, const std::string& name) {
    int horizon = -1, states = -1, actions = -1, initial = 0;
    int absorbing = -1;
    Objective objective = Objective::MaximizeReward;
    RewardModel model = RewardModel::DeterministicMean;
    struct Entry {
        int line, h, s, a, sp;
        double v;
    };
    std::vector<Entry> rewards, transitions, events;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "horizon") {
            if (!(ls >> horizon)) fail(name, lineno, "expected integer horizon");
        } else if (key == "states") {
            if (!(ls >> states)) fail(name, lineno, "expected integer state count");
        } else if (key == "actions") {
            if (!(ls >> actions)) fail(name, lineno, "expected integer action count");
        } else if (key == "initial") {
            if (!(ls >> initial)) fail(name, lineno, "expected initial state index");
        } else if (key == "absorbing") {
            if (!(ls >> absorbing)) fail(name, lineno, "expected absorbing state index");
        } else if (key == "objective") {
            std::string v;
            ls >> v;
            if (v == "maximize")
                objective = Objective::MaximizeReward;
            else if (v == "minimize")
                objective = Objective::MinimizeCost;
            else
                fail(name, lineno, "objective must be maximize or minimize");
        } else if (key == "reward_model") {
            std::string v;
            ls >> v;
            if (v == "mean")
                model = RewardModel::DeterministicMean;
            else if (v == "bernoulli")
                model = RewardModel::BernoulliMean;
            else if (v == "event")
                model = RewardModel::TransitionEvent;
            else
                fail(name, lineno, "reward_model must be mean, bernoulli, or event");
        } else if (key == "reward") {
            Entry e{lineno, 0, 0, 0, 0, 0.0};
            if (!(ls >> e.h >> e.s >> e.a >> e.v)) fail(name, lineno, "reward needs h s a value");
            rewards.push_back(e);
        } else if (key == "transition") {
            Entry e{lineno, 0, 0, 0, 0, 0.0};
            if (!(ls >> e.h >> e.s >> e.a >> e.sp >> e.v))
                fail(name, lineno, "transition needs h s a s' prob");
            transitions.push_back(e);
        } else if (key == "event") {
            Entry e{lineno, 0, 0, 0, 0, 0.0};
            if (!(ls >> e.h >> e.s >> e.a >> e.sp >> e.v))
                fail(name, lineno, "event needs h s a s' value");
            events.push_back(e);
        } else {
            fail(name, lineno, "unknown key '" + key + "'");
        }
    }
    if (horizon < 1 || states < 1 || actions < 1)
        throw std::invalid_argument(name + ": horizon/states/actions missing or invalid");

    FiniteHorizonMdp mdp = make_mdp(horizon, states, actions, objective);
    mdp.initial_state = initial;
    if (absorbing >= 0) mdp.absorbing_state = absorbing;
    mdp.reward_model = model;
    if (model == RewardModel::TransitionEvent)
        mdp.event_payoff = Grid4<double>(horizon, states, actions, states, 0.0);

    auto check = [&](const Entry& e, bool with_sp) {
        if (e.h < 1 || e.h > horizon) fail(name, e.line, "epoch out of range");
        if (e.s < 0 || e.s >= states) fail(name, e.line, "state out of range");
        if (e.a < 0 || e.a >= actions) fail(name, e.line, "action out of range");
        if (with_sp && (e.sp < 0 || e.sp >= states)) fail(name, e.line, "next state out of range");
    };
    for (const auto& e : rewards) {
        check(e, false);
        mdp.reward(e.h - 1, e.s, e.a) = e.v;
    }
    for (const auto& e : transitions) {
        check(e, true);
        mdp.transition(e.h - 1, e.s, e.a, e.sp) = e.v;
    }
    for (const auto& e : events) {
        check(e, true);
        mdp.event_payoff(e.h - 1, e.s, e.a, e.sp) = e.v;
    }
    mdp.validate();
    return mdp;
}

FiniteHorizonMdp load_mdp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open MDP file: " + path);
    return load_mdp(in, path);
}

void save_mdp(const FiniteHorizonMdp& mdp, std::ostream& out) {
    out << "horizon " << mdp.horizon << "\n";
    out << "states " << mdp.num_states << "\n";
    out << "actions " << mdp.num_actions << "\n";
    out << "objective " << (mdp.maximize() ? "maximize" : "minimize") << "\n";
    out << "initial " << mdp.initial_state << "\n";
    if (mdp.absorbing_state) out << "absorbing " << *mdp.absorbing_state << "\n";
    switch (mdp.reward_model) {
        case RewardModel::BernoulliMean: out << "reward_model bernoulli\n"; break;
        case RewardModel::TransitionEvent: out << "reward_model event\n"; break;
        default: out << "reward_model mean\n";
    }
    for (int h = 0; h < mdp.horizon; ++h)
        for (int s = 0; s < mdp.num_states; ++s)
            for (int a = 0; a < mdp.num_actions; ++a)
                if (mdp.reward(h, s, a) != 0.0)
                    out << "reward " << h + 1 << " " << s << " " << a << " "
                        << fmt(mdp.reward(h, s, a)) << "\n";
    for (int h = 0; h < mdp.horizon; ++h)
        for (int s = 0; s < mdp.num_states; ++s)
            for (int a = 0; a < mdp.num_actions; ++a)
                for (int sp = 0; sp < mdp.num_states; ++sp)
                    if (mdp.transition(h, s, a, sp) != 0.0)
                        out << "transition " << h + 1 << " " << s << " " << a << " " << sp << " "
                            << fmt(mdp.transition(h, s, a, sp)) << "\n";
    if (mdp.reward_model == RewardModel::TransitionEvent)
        for (int h = 0; h < mdp.horizon; ++h)
            for (int s = 0; s < mdp.num_states; ++s)
                for (int a = 0; a < mdp.num_actions; ++a)
                    for (int sp = 0; sp < mdp.num_states; ++sp)
                        if (mdp.event_payoff(h, s, a, sp) != 0.0)
                            out << "event " << h + 1 << " " << s << " " << a << " " << sp << " "
                                << fmt(mdp.event_payoff(h, s, a, sp)) << "\n";
}

void save_mdp_file(const FiniteHorizonMdp& mdp, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write MDP file: " + path);
    save_mdp(mdp, out);
}

}  // namespace dprl
