#include "dprl/aggregates.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dprl/mdp.hpp"

namespace dprl {

long long GroupStats::n_ha(int h, int a) const {
    long long total = 0;
    for (int s = 0; s < n.dim1(); ++s) total += n(h, s, a);
    return total;
}

long long AggregateStats::total_n(int h, int s, int a) const {
    long long total = 0;
    for (const auto& g : groups) total += g.n(h, s, a);
    return total;
}

GroupStats AggregateStats::merged() const {
    GroupStats out;
    out.n = Grid3<long long>(horizon, num_states, num_actions, 0);
    out.mean_reward = Grid3<double>(horizon, num_states, num_actions, 0.0);
    out.transition = Grid4<double>(horizon, num_states, num_actions, num_states, 0.0);
    for (int h = 0; h < horizon; ++h) {
        for (int s = 0; s < num_states; ++s) {
            for (int a = 0; a < num_actions; ++a) {
                long long total = total_n(h, s, a);
                out.n(h, s, a) = total;
                if (total == 0) continue;
                double r = 0.0;
                for (const auto& g : groups) r += g.mean_reward(h, s, a) * g.n(h, s, a);
                out.mean_reward(h, s, a) = r / static_cast<double>(total);
                for (int sp = 0; sp < num_states; ++sp) {
                    double p = 0.0;
                    for (const auto& g : groups) p += g.transition(h, s, a, sp) * g.n(h, s, a);
                    out.transition(h, s, a, sp) = p / static_cast<double>(total);
                }
            }
        }
    }
    return out;
}

void AggregateStats::validate() const {
    for (int k = 0; k < num_groups(); ++k) {
        const auto& g = groups[k];
        for (int h = 0; h < horizon; ++h)
            for (int s = 0; s < num_states; ++s)
                for (int a = 0; a < num_actions; ++a) {
                    double sum = 0.0;
                    for (int sp = 0; sp < num_states; ++sp) {
                        double p = g.transition(h, s, a, sp);
                        if (!(p >= 0.0))
                            throw std::invalid_argument("aggregates: negative transition estimate");
                        sum += p;
                    }
                    double want = g.n(h, s, a) > 0 ? 1.0 : 0.0;
                    if (std::abs(sum - want) > kRowSumTol)
                        throw std::invalid_argument(
                            "aggregates: group " + std::to_string(k + 1) + " row (" +
                            std::to_string(h + 1) + "," + std::to_string(s) + "," +
                            std::to_string(a) + ") sums to " + std::to_string(sum));
                }
    }
}

AggregateStats aggregate_samples(const std::vector<SampleRecord>& samples, int num_groups,
                                 int horizon, int num_states, int num_actions) {
    AggregateStats out;
    out.horizon = horizon;
    out.num_states = num_states;
    out.num_actions = num_actions;
    out.groups.resize(num_groups);
    std::vector<Grid3<double>> reward_sums(num_groups);
    std::vector<Grid4<long long>> trans_counts(num_groups);
    for (int k = 0; k < num_groups; ++k) {
        out.groups[k].n = Grid3<long long>(horizon, num_states, num_actions, 0);
        out.groups[k].mean_reward = Grid3<double>(horizon, num_states, num_actions, 0.0);
        out.groups[k].transition = Grid4<double>(horizon, num_states, num_actions, num_states, 0.0);
        reward_sums[k] = Grid3<double>(horizon, num_states, num_actions, 0.0);
        trans_counts[k] = Grid4<long long>(horizon, num_states, num_actions, num_states, 0);
    }
    for (const auto& rec : samples) {
        if (rec.group < 0 || rec.group >= num_groups)
            throw std::invalid_argument("aggregate_samples: group index out of range");
        out.groups[rec.group].n(rec.h, rec.state, rec.action) += 1;
        reward_sums[rec.group](rec.h, rec.state, rec.action) += rec.reward;
        trans_counts[rec.group](rec.h, rec.state, rec.action, rec.next_state) += 1;
    }
    for (int k = 0; k < num_groups; ++k)
        for (int h = 0; h < horizon; ++h)
            for (int s = 0; s < num_states; ++s)
                for (int a = 0; a < num_actions; ++a) {
                    long long n = out.groups[k].n(h, s, a);
                    if (n == 0) continue;
                    out.groups[k].mean_reward(h, s, a) =
                        reward_sums[k](h, s, a) / static_cast<double>(n);
                    for (int sp = 0; sp < num_states; ++sp)
                        out.groups[k].transition(h, s, a, sp) =
                            static_cast<double>(trans_counts[k](h, s, a, sp)) /
                            static_cast<double>(n);
                }
    return out;
}

namespace {
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace

void save_aggregates(const AggregateStats& stats, std::ostream& out) {
    out << "dims " << stats.horizon << " " << stats.num_states << " " << stats.num_actions << " "
        << stats.num_groups() << "\n";
    for (int k = 0; k < stats.num_groups(); ++k) {
        const auto& g = stats.groups[k];
        for (int h = 0; h < stats.horizon; ++h)
            for (int s = 0; s < stats.num_states; ++s)
                for (int a = 0; a < stats.num_actions; ++a) {
                    if (g.n(h, s, a) == 0) continue;
                    out << k + 1 << " " << h + 1 << " " << s << " " << a << " " << g.n(h, s, a)
                        << " " << fmt(g.mean_reward(h, s, a));
                    for (int sp = 0; sp < stats.num_states; ++sp)
                        out << " " << fmt(g.transition(h, s, a, sp));
                    out << "\n";
                }
    }
}

void save_aggregates_file(const AggregateStats& stats, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write aggregates file: " + path);
    save_aggregates(stats, out);
}

AggregateStats load_aggregates(std::istream& in, const std::string& name) {
    std::string raw;
    int lineno = 0;
    AggregateStats stats;
    bool have_dims = false;
    int num_groups = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "dims") {
            if (!(ls >> stats.horizon >> stats.num_states >> stats.num_actions >> num_groups))
                throw std::invalid_argument(name + ":" + std::to_string(lineno) +
                                            ": dims needs H S A G");
            stats.groups.resize(num_groups);
            for (auto& g : stats.groups) {
                g.n = Grid3<long long>(stats.horizon, stats.num_states, stats.num_actions, 0);
                g.mean_reward =
                    Grid3<double>(stats.horizon, stats.num_states, stats.num_actions, 0.0);
                g.transition = Grid4<double>(stats.horizon, stats.num_states, stats.num_actions,
                                             stats.num_states, 0.0);
            }
            have_dims = true;
            continue;
        }
        if (!have_dims)
            throw std::invalid_argument(name + ":" + std::to_string(lineno) +
                                        ": dims line must come first");
        int group = std::stoi(first), h, s, a;
        long long n;
        double r;
        if (!(ls >> h >> s >> a >> n >> r))
            throw std::invalid_argument(name + ":" + std::to_string(lineno) +
                                        ": row needs group h s a N rbar P...");
        if (group < 1 || group > num_groups || h < 1 || h > stats.horizon || s < 0 ||
            s >= stats.num_states || a < 0 || a >= stats.num_actions || n < 0)
            throw std::invalid_argument(name + ":" + std::to_string(lineno) +
                                        ": index out of range");
        auto& g = stats.groups[group - 1];
        g.n(h - 1, s, a) = n;
        g.mean_reward(h - 1, s, a) = r;
        for (int sp = 0; sp < stats.num_states; ++sp) {
            double p;
            if (!(ls >> p))
                throw std::invalid_argument(name + ":" + std::to_string(lineno) +
                                            ": transition row incomplete");
            g.transition(h - 1, s, a, sp) = p;
        }
    }
    if (!have_dims) throw std::invalid_argument(name + ": missing dims line");
    stats.validate();
    return stats;
}

AggregateStats load_aggregates_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open aggregates file: " + path);
    return load_aggregates(in, path);
}

}  // namespace dprl
