#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rkp/catalogue.hpp"
#include "rkp/toric.hpp"
#include "rkp/tree.hpp"
#include "rkp/types.hpp"

namespace rkp {

/// Shortest round-trip-exact decimal rendering (17 significant digits).
std::string format_full(double v);

/// Header `t,q1,q2,p1,p2,H,L,K`, one row per recorded step; optional
/// comment lines are emitted first, prefixed with '#'.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<std::string>& comments = {});

/// Header `t,g,component,c`; the first and last sample of each profile
/// carry a corner-flagged component label.
void write_profile_csv(std::ostream& os, const std::vector<DomainProfile>& profiles);

/// Header `k,l,c_kl,L_kl,c_minus,c_plus,class`; a trailing in_window
/// column is appended when an energy filter is supplied.
void write_catalogue_csv(std::ostream& os, const std::vector<ResonanceLabel>& labels,
                         const double* window_energy = nullptr);

/// Header `depth,index,path,k,l,value`: one row per node of the mediant
/// tree up to the given depth, with the transformed label in `value`.
void write_tree_csv(std::ostream& os, int depth);

/// Both trees level by level, matching the breadth-first figure layout.
void write_tree_text(std::ostream& os, int depth);

}  // namespace rkp
