#pragma once

#include <iosfwd>
#include <string>

#include "dprl/mdp.hpp"

namespace dprl {

// Plain-text MDP definition. Lines are whitespace-separated records; '#'
// starts a comment. Epochs are 1-based in the file.
//
//   horizon H
//   states S
//   actions A
//   objective maximize|minimize
//   initial s
//   absorbing s                      (optional)
//   reward_model mean|bernoulli|event (optional, default mean)
//   reward h s a value               (omitted cells are 0)
//   transition h s a s' prob         (every (h,s,a) row must sum to 1)
//   event h s a s' value             (only with reward_model event)
//
// The loader validates all FiniteHorizonMdp invariants and reports the
// offending line on parse errors.
FiniteHorizonMdp load_mdp(std::istream& in, const std::string& name = "<stream>");
FiniteHorizonMdp load_mdp_file(const std::string& path);

void save_mdp(const FiniteHorizonMdp& mdp, std::ostream& out);
void save_mdp_file(const FiniteHorizonMdp& mdp, const std::string& path);

}  // namespace dprl
