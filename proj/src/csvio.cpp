#include "rkp/csvio.hpp"

#include <cstdio>

#include "rkp/dynamics.hpp"

namespace rkp {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<std::string>& comments) {
    for (const auto& c : comments) os << "# " << c << "\n";
    os << "t,q1,q2,p1,p2,H,L,K\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const PhasePoint& s = traj.states[i];
        EnergyBundle e = energies(s);
        os << format_full(traj.times[i]) << ',' << format_full(s.q.x) << ','
           << format_full(s.q.y) << ',' << format_full(s.p.x) << ',' << format_full(s.p.y)
           << ',' << format_full(e.H) << ',' << format_full(e.L) << ',' << format_full(e.K)
           << "\n";
    }
    if (traj.status == TrajectoryStatus::TruncatedNearCollision)
        os << "# truncated: trajectory entered the collision guard radius\n";
}

namespace {

const char* component_tag(ProfileComponent c) {
    switch (c) {
        case ProfileComponent::Bounded: return "bounded";
        case ProfileComponent::Unbounded: return "unbounded";
        case ProfileComponent::Connected: return "connected";
    }
    return "?";
}

}  // namespace

void write_profile_csv(std::ostream& os, const std::vector<DomainProfile>& profiles) {
    os << "t,g,component,c\n";
    for (const auto& pr : profiles) {
        std::string tag = component_tag(pr.component);
        for (std::size_t i = 0; i < pr.samples.size(); ++i) {
            std::string label = tag;
            if (i == 0) label += ":corner";
            if (i + 1 == pr.samples.size() && pr.component == ProfileComponent::Bounded)
                label += ":corner";
            os << format_full(pr.samples[i].first) << ',' << format_full(pr.samples[i].second)
               << ',' << label << ',' << format_full(pr.c) << "\n";
        }
    }
}

void write_catalogue_csv(std::ostream& os, const std::vector<ResonanceLabel>& labels,
                         const double* window_energy) {
    os << "k,l,c_kl,L_kl,c_minus,c_plus,class";
    if (window_energy) os << ",in_window";
    os << "\n";
    for (const auto& label : labels) {
        ResonanceData rd = resonance_data(label);
        const char* cls = rd.classification == OrbitClass::Critical  ? "critical"
                          : rd.classification == OrbitClass::Interior ? "interior"
                                                                      : "exterior";
        os << label.k << ',' << label.l << ',' << format_full(rd.c_kl) << ','
           << format_full(rd.L_kl) << ',' << format_full(rd.c_minus) << ','
           << format_full(rd.c_plus) << ',' << cls;
        if (window_energy) {
            bool in = *window_energy > rd.c_minus && *window_energy < rd.c_plus;
            os << ',' << (in ? 1 : 0);
        }
        os << "\n";
    }
}

void write_tree_csv(std::ostream& os, int depth) {
    os << "depth,index,path,k,l,value\n";
    for (int d = 0; d <= depth; ++d) {
        TreeLevel level = stern_brocot_level(d);
        for (std::size_t i = 0; i < level.nodes.size(); ++i) {
            std::string path;
            for (int bit = d - 1; bit >= 0; --bit) path += ((i >> bit) & 1) ? '1' : '0';
            const Fraction& f = level.nodes[i];
            os << d << ',' << i << ',' << path << ',' << f.num << ',' << f.den << ','
               << to_string(transform_node(f.num, f.den)) << "\n";
        }
    }
}

void write_tree_text(std::ostream& os, int depth) {
    os << "mediant tree\n";
    for (int d = 0; d <= depth; ++d) {
        TreeLevel level = stern_brocot_level(d);
        os << "  level " << d << ":";
        for (const Fraction& f : level.nodes) os << ' ' << to_string(f);
        os << "\n";
    }
    os << "slope tree\n";
    for (int d = 0; d <= depth; ++d) {
        TreeLevel level = new_tree_level(d);
        os << "  level " << d << ":";
        for (const Fraction& f : level.nodes) os << ' ' << to_string(f);
        os << "\n";
    }
}

}  // namespace rkp
