#include "dprl/env_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
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

EnvironmentConfig load_environment(std::istream& in, const std::string& name) {
    EnvironmentConfig cfg;
    cfg.name = name;
    bool have_type = false;
    int horizon = 4;
    double ca = 0.13, cr = 10.0;
    int default_arrivals = 1;
    std::map<std::string, int> class_index;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key)) continue;

        if (key == "type") {
            std::string v;
            ls >> v;
            if (v == "readmission")
                cfg.kind = EnvironmentConfig::Kind::Readmission;
            else if (v == "synthetic")
                cfg.kind = EnvironmentConfig::Kind::Synthetic;
            else
                fail(name, lineno, "type must be readmission or synthetic");
            have_type = true;
        } else if (key == "name") {
            ls >> cfg.name;
        } else if (key == "horizon") {
            if (!(ls >> horizon)) fail(name, lineno, "expected integer horizon");
        } else if (key == "cost_intervention") {
            if (!(ls >> ca)) fail(name, lineno, "expected cost value");
        } else if (key == "cost_readmission") {
            if (!(ls >> cr)) fail(name, lineno, "expected cost value");
        } else if (key == "arrivals") {
            if (!(ls >> default_arrivals)) fail(name, lineno, "expected arrival count");
        } else if (key == "behavior") {
            std::string v;
            ls >> v;
            if (v == "all-zero")
                cfg.behavior.kind = BehaviorPolicy::Kind::AllZero;
            else if (v == "uniform")
                cfg.behavior.kind = BehaviorPolicy::Kind::UniformRandom;
            else
                fail(name, lineno, "behavior must be all-zero or uniform");
        } else if (key == "historical_exact") {
            std::string v;
            ls >> v;
            cfg.historical_exact = v == "true" || v == "1";
        } else if (key == "class") {
            if (!have_type) fail(name, lineno, "type line must precede class lines");
            std::string cls_name, role;
            if (!(ls >> cls_name >> role)) fail(name, lineno, "class needs name and role");
            bool is_target = role == "target";
            if (!is_target && role != "historical")
                fail(name, lineno, "class role must be target or historical");
            if (class_index.count(cls_name)) fail(name, lineno, "duplicate class " + cls_name);
            if (cfg.kind == EnvironmentConfig::Kind::Readmission) {
                class_index[cls_name] = static_cast<int>(cfg.readmission.classes.size());
                cfg.readmission.classes.emplace_back();
                cfg.readmission.classes.back().p.assign(horizon, {0.0, 0.0});
                cfg.readmission.class_names.push_back(cls_name);
                cfg.readm_is_target.push_back(is_target);
                cfg.readm_hist_sizes.push_back(2000);
                int arr = default_arrivals;
                std::string tok;
                if (ls >> tok) {
                    if (tok != "arrivals") fail(name, lineno, "expected 'arrivals <n>'");
                    if (!(ls >> arr)) fail(name, lineno, "expected arrival count");
                }
                cfg.readmission.weekly_arrivals.push_back(arr);
            } else {
                SyntheticClass cls;
                cls.name = cls_name;
                cls.is_target = is_target;
                if (!(ls >> cls.c1 >> cls.c2 >> cls.c3 >> cls.feature_mean >> cls.feature_std >>
                      cls.mixture_prob))
                    fail(name, lineno, "synthetic class needs c1 c2 c3 mu sigma mix");
                class_index[cls_name] = static_cast<int>(cfg.synthetic.classes.size());
                cfg.synthetic.classes.push_back(cls);
            }
        } else if (key == "risk") {
            std::string cls_name;
            int h;
            double p0, p1;
            if (!(ls >> cls_name >> h >> p0 >> p1)) fail(name, lineno, "risk needs class h p0 p1");
            auto it = class_index.find(cls_name);
            if (it == class_index.end()) fail(name, lineno, "unknown class " + cls_name);
            if (cfg.kind != EnvironmentConfig::Kind::Readmission)
                fail(name, lineno, "risk rows only apply to readmission environments");
            if (h < 1 || h > horizon) fail(name, lineno, "risk epoch out of range");
            cfg.readmission.classes[it->second].p[h - 1] = {p0, p1};
        } else if (key == "alpha") {
            std::string cls_name;
            if (!(ls >> cls_name)) fail(name, lineno, "alpha needs class name");
            auto it = class_index.find(cls_name);
            if (it == class_index.end()) fail(name, lineno, "unknown class " + cls_name);
            auto& cls = cfg.synthetic.classes[it->second];
            cls.alpha.clear();
            double a;
            while (ls >> a) cls.alpha.push_back(a);
            if (static_cast<int>(cls.alpha.size()) != horizon)
                fail(name, lineno, "alpha row needs one share per epoch");
        } else if (key == "avg") {
            std::string cls_name;
            double a0, a1;
            if (!(ls >> cls_name >> a0 >> a1)) fail(name, lineno, "avg needs class p0 p1");
            auto it = class_index.find(cls_name);
            if (it == class_index.end()) fail(name, lineno, "unknown class " + cls_name);
            cfg.synthetic.classes[it->second].avg_prob_untreated = a0;
            cfg.synthetic.classes[it->second].avg_prob_treated = a1;
        } else if (key == "hist_size") {
            std::string cls_name;
            long long n;
            if (!(ls >> cls_name >> n)) fail(name, lineno, "hist_size needs class count");
            auto it = class_index.find(cls_name);
            if (it == class_index.end()) fail(name, lineno, "unknown class " + cls_name);
            if (cfg.kind == EnvironmentConfig::Kind::Readmission)
                cfg.readm_hist_sizes[it->second] = n;
            else {
                // Indexed by class position while parsing; compressed to
                // historical order once all classes are known.
                if (cfg.synth_hist_sizes.size() < cfg.synthetic.classes.size())
                    cfg.synth_hist_sizes.resize(cfg.synthetic.classes.size(), 2000);
                cfg.synth_hist_sizes[it->second] = n;
            }
        } else {
            fail(name, lineno, "unknown key '" + key + "'");
        }
    }
    if (!have_type) throw std::invalid_argument(name + ": missing type line");

    if (cfg.kind == EnvironmentConfig::Kind::Readmission) {
        cfg.readmission.horizon = horizon;
        cfg.readmission.cost_intervention = ca;
        cfg.readmission.cost_readmission = cr;
        cfg.readmission.validate(&cfg.warnings);
    } else {
        cfg.synthetic.horizon = horizon;
        cfg.synthetic.cost_intervention = ca;
        cfg.synthetic.cost_readmission = cr;
        cfg.synthetic.arrivals_per_iteration = default_arrivals;
        cfg.synthetic.validate();
        cfg.synth_hist_sizes.resize(cfg.synthetic.classes.size(), 2000);
        // Keep only historical-class entries, in historical order.
        std::vector<long long> sizes;
        for (int idx : cfg.synthetic.historical_indices())
            sizes.push_back(cfg.synth_hist_sizes[idx]);
        cfg.synth_hist_sizes = sizes;
    }
    return cfg;
}

EnvironmentConfig load_environment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open environment file: " + path);
    return load_environment(in, path);
}

void save_environment(const EnvironmentConfig& cfg, std::ostream& out) {
    if (cfg.kind == EnvironmentConfig::Kind::Readmission) {
        out << "type readmission\n";
        out << "horizon " << cfg.readmission.horizon << "\n";
        out << "cost_intervention " << fmt(cfg.readmission.cost_intervention) << "\n";
        out << "cost_readmission " << fmt(cfg.readmission.cost_readmission) << "\n";
        for (std::size_t c = 0; c < cfg.readmission.classes.size(); ++c) {
            out << "class " << cfg.readmission.class_names[c] << " "
                << (cfg.readm_is_target[c] ? "target" : "historical") << " arrivals "
                << cfg.readmission.weekly_arrivals[c] << "\n";
            if (!cfg.readm_is_target[c])
                out << "hist_size " << cfg.readmission.class_names[c] << " "
                    << cfg.readm_hist_sizes[c] << "\n";
            for (int h = 0; h < cfg.readmission.horizon; ++h)
                out << "risk " << cfg.readmission.class_names[c] << " " << h + 1 << " "
                    << fmt(cfg.readmission.classes[c].p[h][0]) << " "
                    << fmt(cfg.readmission.classes[c].p[h][1]) << "\n";
        }
    } else {
        out << "type synthetic\n";
        out << "horizon " << cfg.synthetic.horizon << "\n";
        out << "cost_intervention " << fmt(cfg.synthetic.cost_intervention) << "\n";
        out << "cost_readmission " << fmt(cfg.synthetic.cost_readmission) << "\n";
        out << "arrivals " << cfg.synthetic.arrivals_per_iteration << "\n";
        int hist_seen = 0;
        for (const auto& cls : cfg.synthetic.classes) {
            out << "class " << cls.name << " " << (cls.is_target ? "target" : "historical") << " "
                << fmt(cls.c1) << " " << fmt(cls.c2) << " " << fmt(cls.c3) << " "
                << fmt(cls.feature_mean) << " " << fmt(cls.feature_std) << " "
                << fmt(cls.mixture_prob) << "\n";
            out << "alpha " << cls.name;
            for (double a : cls.alpha) out << " " << fmt(a);
            out << "\n";
            if (cls.avg_prob_untreated && cls.avg_prob_treated)
                out << "avg " << cls.name << " " << fmt(*cls.avg_prob_untreated) << " "
                    << fmt(*cls.avg_prob_treated) << "\n";
            if (!cls.is_target)
                out << "hist_size " << cls.name << " " << cfg.synth_hist_sizes[hist_seen++] << "\n";
        }
    }
    out << "behavior "
        << (cfg.behavior.kind == BehaviorPolicy::Kind::UniformRandom ? "uniform" : "all-zero")
        << "\n";
    if (cfg.historical_exact) out << "historical_exact true\n";
}

AggregateStats exact_aggregates(const std::vector<FiniteHorizonMdp>& group_mdps,
                                long long n_per_cell) {
    if (group_mdps.empty()) throw std::invalid_argument("exact_aggregates: no groups");
    const auto& first = group_mdps.front();
    AggregateStats stats;
    stats.horizon = first.horizon;
    stats.num_states = first.num_states;
    stats.num_actions = first.num_actions;
    for (const auto& mdp : group_mdps) {
        GroupStats g;
        g.n = Grid3<long long>(stats.horizon, stats.num_states, stats.num_actions, 0);
        g.mean_reward = Grid3<double>(stats.horizon, stats.num_states, stats.num_actions, 0.0);
        g.transition =
            Grid4<double>(stats.horizon, stats.num_states, stats.num_actions, stats.num_states, 0.0);
        for (int h = 0; h < stats.horizon; ++h)
            for (int s = 0; s < stats.num_states; ++s) {
                if (mdp.absorbing_state && s == *mdp.absorbing_state) continue;
                for (int a = 0; a < stats.num_actions; ++a) {
                    g.n(h, s, a) = n_per_cell;
                    g.mean_reward(h, s, a) = mdp.reward(h, s, a);
                    for (int sp = 0; sp < stats.num_states; ++sp)
                        g.transition(h, s, a, sp) = mdp.transition(h, s, a, sp);
                }
            }
        stats.groups.push_back(std::move(g));
    }
    return stats;
}

}  // namespace dprl
