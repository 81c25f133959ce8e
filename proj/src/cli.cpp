#include "rkp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "rkp/catalogue.hpp"
#include "rkp/csvio.hpp"
#include "rkp/dynamics.hpp"
#include "rkp/svg.hpp"
#include "rkp/toric.hpp"
#include "rkp/verify.hpp"

namespace rkp::cli {

namespace {

// "-" routes to stdout
void emit(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << payload;
}

Vec2 parse_pair(const std::string& text, const char* what) {
    double a = 0.0, b = 0.0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> a >> comma >> b) || comma != ',')
        throw std::domain_error(std::string("expected '<x>,<y>' for ") + what);
    return {a, b};
}

std::string trimmed(const std::string& s) {
    auto lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return "";
    auto hi = s.find_last_not_of(" \t\r");
    return s.substr(lo, hi - lo + 1);
}

// plain key=value config; command-line flags always win, so only keys that
// are absent from the arguments are injected
std::vector<std::string> apply_config_file(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot read config file " + path);
    for (std::string line; std::getline(in, line);) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trimmed(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config line is not key=value: " + line);
        std::string flag = "--" + trimmed(line.substr(0, eq));
        bool present = false;
        for (const auto& arg : args)
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) present = true;
        if (!present) args.push_back(flag + "=" + trimmed(line.substr(eq + 1)));
    }
    return args;
}

std::vector<ResonanceLabel> coprime_labels(int max_sum) {
    std::vector<ResonanceLabel> labels;
    for (int sum = 2; sum <= max_sum; ++sum)
        for (int k = 1; k < sum; ++k)
            if (std::gcd(k, sum - k) == 1) labels.push_back({k, sum - k});
    return labels;
}

struct ProfileArgs {
    double energy = 0.0;
    int samples = 201;
    std::string format = "csv";
    std::string output = "-";
    double t_max = 0.0;  // 0 = automatic
};

int run_profile(const ProfileArgs& a) {
    std::vector<DomainProfile> profiles;
    if (a.energy <= -1.5) {
        Corners cr = corners(a.energy);
        double t_max = a.t_max > 0.0 ? a.t_max : 1.2 * cr.b_u;
        profiles.push_back(profile(a.energy, a.samples));
        profiles.push_back(unbounded_profile(a.energy, t_max, a.samples));
    } else {
        profiles.push_back(connected_profile(a.energy, a.t_max, a.samples));
    }

    std::ostringstream csv;
    write_profile_csv(csv, profiles);
    if (a.format == "csv") {
        emit(a.output, csv.str());
    } else if (a.format == "svg") {
        if (a.output == "-")
            throw std::domain_error("svg output needs --output so the sample CSV "
                                    "can be written alongside");
        std::ostringstream svg;
        write_profile_svg(svg, profiles);
        emit(a.output, svg.str());
        std::string twin = a.output;
        auto dotpos = twin.rfind('.');
        twin = (dotpos == std::string::npos ? twin : twin.substr(0, dotpos)) + ".csv";
        emit(twin, csv.str());
    } else {
        throw std::domain_error("profile supports --format csv or svg");
    }
    return 0;
}

struct OrbitsArgs {
    int max_sum = 4;
    double energy = 0.0;
    bool has_energy = false;
    std::string output = "-";
};

int run_orbits(const OrbitsArgs& a) {
    std::ostringstream csv;
    write_catalogue_csv(csv, coprime_labels(a.max_sum), a.has_energy ? &a.energy : nullptr);
    emit(a.output, csv.str());
    return 0;
}

struct TreeArgs {
    int depth = 4;
    std::string format = "csv";
    std::string output = "-";
};

int run_tree(const TreeArgs& a) {
    if (a.depth < 0 || a.depth > 30)
        throw std::domain_error("tree depth must lie in [0, 30]");
    std::ostringstream out;
    if (a.format == "csv")
        write_tree_csv(out, a.depth);
    else if (a.format == "text")
        write_tree_text(out, a.depth);
    else
        throw std::domain_error("tree supports --format csv or text");
    emit(a.output, out.str());
    return 0;
}

struct VerifyArgs {
    std::uint64_t seed = 42;
    std::vector<std::string> tols;
    std::string only;
    std::string output = "-";
};

int run_verify(const VerifyArgs& a) {
    verify::TolOverrides overrides;
    for (const std::string& spec : a.tols) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("--tol expects <check-prefix>=<value>");
        overrides.emplace_back(spec.substr(0, eq), std::stod(spec.substr(eq + 1)));
    }
    auto results = verify::run_all(a.seed, overrides, a.only);
    if (results.empty()) throw std::domain_error("no checks match --only " + a.only);
    std::ostringstream csv;
    verify::write_checks_csv(csv, results);
    emit(a.output, csv.str());
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    return all ? 0 : 1;
}

struct FlowArgs {
    std::string field = "H";
    std::string q = "1,0";
    std::string p = "0,1";
    double T = 6.2832;
    double dt = 0.0;  // 0 = automatic
    std::string orbit;
    bool rotating = false;
    double eccentricity = 0.3;
    int samples = 201;
    std::string output = "-";
};

int run_flow(const FlowArgs& a) {
    std::ostringstream csv;
    if (!a.orbit.empty()) {
        Vec2 kl = parse_pair(a.orbit, "--orbit");
        ResonanceLabel label{static_cast<long long>(kl.x), static_cast<long long>(kl.y)};
        SecondKindOrbit sk = second_kind_orbit(label, a.eccentricity, a.samples);
        if (a.rotating) {
            write_trajectory_csv(csv, sk.trajectory,
                                 {"symmetry_residual=" + format_full(sk.symmetry_residual),
                                  "orbit=" + std::to_string(label.k) + ":" +
                                      std::to_string(label.l) + " frame=rotating"});
        } else {
            KeplerOrbit orbit = kepler_ellipse(resonance_data(label).c_kl, a.eccentricity);
            Trajectory traj;
            for (std::size_t i = 0; i < sk.trajectory.times.size(); ++i) {
                double t = sk.trajectory.times[i];
                traj.times.push_back(t);
                traj.states.push_back(orbit.at(t));
            }
            write_trajectory_csv(csv, traj,
                                 {"orbit=" + std::to_string(label.k) + ":" +
                                  std::to_string(label.l) + " frame=inertial"});
        }
        emit(a.output, csv.str());
        return 0;
    }

    VectorField field;
    if (a.field == "H") field = VectorField::Kepler;
    else if (a.field == "K") field = VectorField::Rotating;
    else if (a.field == "delaunay") field = VectorField::DelaunayChart;
    else if (a.field == "rkp-chart") field = VectorField::RotatingChart;
    else throw std::domain_error("--field must be one of H, K, delaunay, rkp-chart");

    PhasePoint start{parse_pair(a.q, "--q"), parse_pair(a.p, "--p")};
    double dt = a.dt;
    if (dt <= 0.0) {
        double H = energies(start).H;
        double ref = (field == VectorField::Kepler || field == VectorField::Rotating) &&
                             H < 0.0
                         ? 2.0 * kPi * std::pow(-2.0 * H, -1.5)
                         : 2.0 * kPi;
        dt = ref / 2000.0;
    }
    Trajectory traj = flow(field, start, a.T, dt);
    write_trajectory_csv(csv, traj, {"field=" + a.field});
    emit(a.output, csv.str());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"rotating Kepler problem toolkit"};
    app.require_subcommand(1);

    ProfileArgs pa;
    auto* profile_cmd = app.add_subcommand(
        "profile", "moment-map boundary of the energy sublevel set");
    profile_cmd->add_option("--energy", pa.energy, "energy value c")->required();
    profile_cmd->add_option("--samples", pa.samples, "boundary sample count")->capture_default_str();
    profile_cmd->add_option("--format", pa.format, "csv or svg")->capture_default_str();
    profile_cmd->add_option("--output", pa.output, "output path ('-' = stdout)")->capture_default_str();
    profile_cmd->add_option("--tmax", pa.t_max, "right edge of the unbounded samples");
    std::string cfg_profile;
    profile_cmd->add_option("--config", cfg_profile, "key=value defaults file");

    OrbitsArgs oa;
    auto* orbits_cmd = app.add_subcommand("orbits", "resonance catalogue");
    orbits_cmd->add_option("--max-sum", oa.max_sum, "bound on k + l")->capture_default_str();
    auto* energy_opt = orbits_cmd->add_option("--energy", oa.energy,
                                              "flag each row's window against this energy");
    orbits_cmd->add_option("--output", oa.output, "output path")->capture_default_str();
    std::string cfg_orbits;
    orbits_cmd->add_option("--config", cfg_orbits, "key=value defaults file");

    TreeArgs ta;
    auto* tree_cmd = app.add_subcommand("tree", "mediant tree and its slope relabeling");
    tree_cmd->add_option("--depth", ta.depth, "deepest level")->capture_default_str();
    tree_cmd->add_option("--format", ta.format, "csv or text")->capture_default_str();
    tree_cmd->add_option("--output", ta.output, "output path")->capture_default_str();
    std::string cfg_tree;
    tree_cmd->add_option("--config", cfg_tree, "key=value defaults file");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "run the numeric verification suite");
    verify_cmd->add_option("--seed", va.seed, "sampling seed")->capture_default_str();
    verify_cmd->add_option("--tol", va.tols, "override: <check-prefix>=<tolerance>");
    verify_cmd->add_option("--only", va.only, "run checks whose name contains this");
    verify_cmd->add_option("--output", va.output, "report path")->capture_default_str();
    std::string cfg_verify;
    verify_cmd->add_option("--config", cfg_verify, "key=value defaults file");

    FlowArgs fa;
    auto* flow_cmd = app.add_subcommand("flow", "integrate a field or sample an orbit");
    flow_cmd->add_option("--field", fa.field, "H, K, delaunay or rkp-chart")->capture_default_str();
    flow_cmd->add_option("--q", fa.q, "initial position 'x,y'")->capture_default_str();
    flow_cmd->add_option("--p", fa.p, "initial momentum 'x,y'")->capture_default_str();
    flow_cmd->add_option("--T", fa.T, "integration time")->capture_default_str();
    flow_cmd->add_option("--dt", fa.dt, "step (0 = period/2000)");
    flow_cmd->add_option("--orbit", fa.orbit, "sample the second-kind orbit 'k,l' instead");
    flow_cmd->add_flag("--rotating", fa.rotating, "emit co-rotating frame states");
    flow_cmd->add_option("--e", fa.eccentricity, "orbit eccentricity")->capture_default_str();
    flow_cmd->add_option("--samples", fa.samples, "orbit sample count")->capture_default_str();
    flow_cmd->add_option("--output", fa.output, "output path")->capture_default_str();
    std::string cfg_flow;
    flow_cmd->add_option("--config", cfg_flow, "key=value defaults file");

    std::vector<std::string> effective;
    try {
        effective = apply_config_file(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::vector<const char*> argv;
    argv.push_back("rkp");
    for (const auto& s : effective) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (profile_cmd->parsed()) return run_profile(pa);
        if (orbits_cmd->parsed()) {
            oa.has_energy = energy_opt->count() > 0;
            return run_orbits(oa);
        }
        if (tree_cmd->parsed()) return run_tree(ta);
        if (verify_cmd->parsed()) return run_verify(va);
        if (flow_cmd->parsed()) return run_flow(fa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rkp::cli
