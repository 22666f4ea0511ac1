// relkin: reciprocity-rotation kinematics calculator and verifier.
//
// Exit codes: 0 success / all checks pass, 1 a gated residual exceeded its
// tolerance, 2 usage or precondition error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "relkin/kinematics_3d.hpp"
#include "relkin/oracle.hpp"
#include "relkin/sweep.hpp"

namespace {

using relkin::Beta;
using relkin::ComplexScalar;
using relkin::Event1D;
using relkin::ReciprocityAxis;
using relkin::ReciprocityRotation;
using relkin::Sign;
using relkin::Vec3;
namespace oracle = relkin::oracle;
namespace sweep = relkin::sweep;

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) { return sweep::format_double(v); }

std::string fmt(const ComplexScalar& z) {
    const std::string im = fmt(std::abs(z.imag()));
    return fmt(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + im + "i";
}

std::string fmt_exact(const oracle::BigRational& v) {
    return oracle::to_fraction_string(v) + " = " + fmt(oracle::to_double(v));
}

std::string fmt_exact(const oracle::ComplexRational& z) {
    return oracle::to_fraction_string(z) + " = " +
           fmt(ComplexScalar(oracle::to_double(z.re), oracle::to_double(z.im)));
}

double parse_double(const std::string& text) {
    if (text.find('/') != std::string::npos)
        return oracle::to_double(oracle::parse_rational(text));
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == nullptr || *end != '\0' || end == text.c_str())
        throw relkin::InvalidParameters("cannot parse '" + text + "' as a number");
    return v;
}

struct Triple {
    std::string x = "0", y = "0", z = "0";
};

Triple split_triple(const std::string& text) {
    std::stringstream in(text);
    Triple out;
    if (!std::getline(in, out.x, ',') || !std::getline(in, out.y, ',') ||
        !std::getline(in, out.z))
        throw relkin::InvalidParameters("expected X,Y,Z but got '" + text + "'");
    return out;
}

Vec3 parse_vec3(const std::string& text) {
    const Triple t = split_triple(text);
    return {parse_double(t.x), parse_double(t.y), parse_double(t.z)};
}

oracle::RVec3 parse_rvec3(const std::string& text) {
    const Triple t = split_triple(text);
    return {oracle::parse_rational(t.x), oracle::parse_rational(t.y),
            oracle::parse_rational(t.z)};
}

// --phi accepts radians plus the literals that must stay exact. The pole is
// reachable only through the literal (or --phi-deg 180): no finite decimal
// equals pi.
ReciprocityRotation parse_phi(const std::string& text) {
    if (text == "pi") return ReciprocityRotation::pole();
    if (text == "pi/2") return ReciprocityRotation::from_angle(kPi / 2.0);
    if (text == "-pi/2") return ReciprocityRotation::from_angle(-kPi / 2.0);
    if (text == "2pi" || text == "0") return ReciprocityRotation::identity();
    return ReciprocityRotation::from_angle(parse_double(text));
}

oracle::RotationParam parse_phi_exact(const std::string& text) {
    if (text == "pi") return oracle::RotationParam::pole();
    if (text == "pi/2") return oracle::RotationParam::from_r(1);
    if (text == "-pi/2") return oracle::RotationParam::from_r(-1);
    if (text == "2pi" || text == "0") return oracle::RotationParam::identity();
    throw relkin::InvalidParameters(
        "exact mode accepts --phi 0, pi/2, -pi/2 or pi (tan(phi/2) must be "
        "rational)");
}

struct CommonArgs {
    std::string format = "plain";  // plain | json
    bool exact = false;
};

void print_result(const CommonArgs& args,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
    if (args.format == "json") {
        std::cout << "{";
        bool first = true;
        for (const auto& [key, value] : fields) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << "\"" << key << "\":\"" << value << "\"";
        }
        std::cout << "}\n";
    } else {
        for (const auto& [key, value] : fields)
            std::cout << key << " = " << value << "\n";
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RELKIN_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw relkin::InvalidParameters(
                "RELKIN_SEED must be an unsigned integer");
        return v;
    }
    return 42;
}

struct SweepArgs {
    sweep::SweepConfig config;
    std::string format = "json";  // json | csv
    std::string out_path;
    std::string mode = "float";
    std::string family = "general";
    bool exact_alias = false;
    double tol = 0.0;
    CLI::Option* tol_opt = nullptr;
};

void add_sweep_flags(CLI::App* cmd, SweepArgs& args, bool with_family) {
    cmd->add_option("--phi-grid", args.config.phi_count,
                    "phi grid size (positive multiple of 4)");
    cmd->add_option("--samples", args.config.sample_count, "samples per check row");
    cmd->add_option("--seed", args.config.seed, "RNG seed (default: RELKIN_SEED or 42)");
    args.tol_opt = cmd->add_option("--tol,--tolerance", args.tol,
                                   "override every gated tolerance");
    cmd->add_option("--mode", args.mode, "float|exact")
        ->check(CLI::IsMember({"float", "exact"}));
    cmd->add_flag("--exact", args.exact_alias, "alias for --mode exact");
    cmd->add_option("--format", args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", args.out_path, "write the report to a file");
    if (with_family)
        cmd->add_option("--family", args.family,
                        "3D input family for the sweep: general|collinear")
            ->check(CLI::IsMember({"general", "collinear"}));
}

int emit_report(const sweep::Report& report, const SweepArgs& args) {
    std::ostringstream body;
    if (args.format == "csv")
        sweep::write_csv(report, body);
    else
        sweep::write_json(report, body);
    if (args.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream file(args.out_path, std::ios::binary);
        if (!file)
            throw relkin::InvalidParameters("cannot open '" + args.out_path +
                                            "' for writing");
        file << body.str();
    }
    sweep::write_summary_lines(report, std::cerr);
    return report.all_gating_pass() ? 0 : 1;
}

sweep::SweepConfig finish_config(SweepArgs& args) {
    if (args.exact_alias) args.mode = "exact";
    args.config.mode =
        (args.mode == "exact") ? sweep::Mode::exact : sweep::Mode::floating;
    args.config.family = (args.family == "collinear") ? sweep::Family::collinear
                                                      : sweep::Family::general;
    if (args.tol_opt != nullptr && args.tol_opt->count() > 0)
        args.config.tolerance = args.tol;
    sweep::validate(args.config);
    return args.config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "relkin: slowness, reciprocity rotations and generalized Lorentz "
        "transforms, with float and exact-rational evaluation"};
    app.require_subcommand(1);

    CommonArgs common;

    // ---- compose ----
    auto* cmd_compose = app.add_subcommand(
        "compose", "relativistic velocity composition (u +/- v)/(1 +/- u v)");
    std::string arg_u, arg_v, arg_sign = "+";
    cmd_compose->add_option("--u", arg_u, "first velocity (v/c)")->required();
    cmd_compose->add_option("--v", arg_v, "second velocity (v/c)")->required();
    cmd_compose->add_option("--sign", arg_sign, "+ or -")
        ->check(CLI::IsMember({"+", "-"}));

    // ---- boost ----
    auto* cmd_boost =
        app.add_subcommand("boost", "standard 1D boost of an event (x, t)");
    std::string arg_x, arg_t, arg_beta;
    cmd_boost->add_option("--x", arg_x, "coordinate (light-time units)")->required();
    cmd_boost->add_option("--t", arg_t, "time")->required();
    cmd_boost->add_option("--beta", arg_beta, "boost velocity, |beta| < 1")->required();

    // ---- rotate ----
    auto* cmd_rotate = app.add_subcommand(
        "rotate", "reciprocity rotation of a velocity or coordinate");
    std::string rot_beta, rot_x, rot_t, rot_phi = "0", rot_vel3, rot_vec3, rot_axis;
    double rot_phi_deg = 0.0;
    bool rot_has_deg = false;
    cmd_rotate->add_option("--beta", rot_beta, "1D velocity to rotate");
    cmd_rotate->add_option("--x", rot_x, "1D coordinate to rotate (with --t)");
    cmd_rotate->add_option("--t", rot_t, "time for coordinate rotation");
    cmd_rotate->add_option("--velocity", rot_vel3, "3-velocity VX,VY,VZ to rotate");
    cmd_rotate->add_option("--vec", rot_vec3, "3-position X,Y,Z to rotate (with --t)");
    cmd_rotate->add_option("--axis", rot_axis, "rotation axis NX,NY,NZ");
    cmd_rotate->add_option("--phi", rot_phi, "angle: radians, pi, pi/2, -pi/2, 0");
    cmd_rotate->add_option("--phi-deg", rot_phi_deg, "angle in degrees")
        ->each([&](const std::string&) { rot_has_deg = true; });

    // ---- gboost ----
    auto* cmd_gboost = app.add_subcommand(
        "gboost", "generalized (reciprocity-independent) boost, 1D or 3D");
    std::string gb_x, gb_t, gb_beta, gb_vec, gb_vel, gb_axis, gb_phi = "0";
    double gb_phi_deg = 0.0;
    bool gb_has_deg = false;
    cmd_gboost->add_option("--x", gb_x, "1D coordinate");
    cmd_gboost->add_option("--t", gb_t, "time")->required();
    cmd_gboost->add_option("--beta", gb_beta, "1D boost velocity");
    cmd_gboost->add_option("--vec", gb_vec, "3-position X,Y,Z");
    cmd_gboost->add_option("--velocity", gb_vel, "3-velocity VX,VY,VZ");
    cmd_gboost->add_option("--axis", gb_axis, "rotation axis NX,NY,NZ");
    cmd_gboost->add_option("--phi", gb_phi, "angle: radians, pi, pi/2, -pi/2, 0");
    cmd_gboost->add_option("--phi-deg", gb_phi_deg, "angle in degrees")
        ->each([&](const std::string&) { gb_has_deg = true; });

    for (auto* cmd : {cmd_compose, cmd_boost, cmd_rotate, cmd_gboost}) {
        cmd->add_flag("--exact", common.exact,
                      "evaluate in exact rational arithmetic");
        cmd->add_option("--format", common.format, "plain|json")
            ->check(CLI::IsMember({"plain", "json"}));
    }

    // ---- verify / sweep ----
    SweepArgs verify_args, sweep_args;
    try {
        verify_args.config.seed = default_seed();
    } catch (const relkin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    sweep_args.config.seed = verify_args.config.seed;

    auto* cmd_verify = app.add_subcommand(
        "verify", "run the full invariant suite; exit 0 iff all gated checks pass");
    add_sweep_flags(cmd_verify, verify_args, false);

    auto* cmd_sweep = app.add_subcommand(
        "sweep", "emit invariance residuals over the phi grid x seeded inputs");
    add_sweep_flags(cmd_sweep, sweep_args, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_compose->parsed()) {
            const Sign sign = (arg_sign == "-") ? Sign::minus : Sign::plus;
            if (common.exact) {
                const auto result = oracle::compose(oracle::parse_rational(arg_u),
                                                    oracle::parse_rational(arg_v), sign);
                print_result(common, {{"result", fmt_exact(result)}});
            } else {
                const Beta result =
                    compose(Beta(parse_double(arg_u)), Beta(parse_double(arg_v)), sign);
                print_result(common, {{"result", fmt(result.value)}});
            }
            return 0;
        }

        if (cmd_boost->parsed()) {
            if (common.exact) {
                const oracle::REvent1D out = oracle::boost_event(
                    {oracle::parse_rational(arg_x), oracle::parse_rational(arg_t)},
                    oracle::parse_rational(arg_beta));
                print_result(common,
                             {{"x'", fmt_exact(out.x)}, {"t'", fmt_exact(out.t)}});
            } else {
                const Event1D out =
                    boost_event(Event1D(parse_double(arg_x), parse_double(arg_t)),
                                Beta(parse_double(arg_beta)));
                print_result(common, {{"x'", fmt(out.x)}, {"t'", fmt(out.t)}});
            }
            return 0;
        }

        if (cmd_rotate->parsed()) {
            const bool want_1d_vel = !rot_beta.empty();
            const bool want_1d_pos = !rot_x.empty();
            const bool want_3d_vel = !rot_vel3.empty();
            const bool want_3d_pos = !rot_vec3.empty();
            if (want_1d_vel + want_1d_pos + want_3d_vel + want_3d_pos != 1)
                throw relkin::InvalidParameters(
                    "rotate needs exactly one of --beta, --x, --velocity, --vec");

            if (common.exact) {
                const oracle::RotationParam r =
                    rot_has_deg ? throw relkin::InvalidParameters(
                                      "exact mode does not take --phi-deg")
                                : parse_phi_exact(rot_phi);
                if (want_1d_vel) {
                    print_result(common,
                                 {{"v~", fmt_exact(oracle::rotate_velocity(
                                             oracle::parse_rational(rot_beta), r))}});
                } else if (want_1d_pos) {
                    const oracle::REvent1D e{oracle::parse_rational(rot_x),
                                             oracle::parse_rational(rot_t)};
                    print_result(common,
                                 {{"x~", fmt_exact(oracle::rotate_coordinate(e, r))}});
                } else {
                    const oracle::ExactAxis axis(parse_rvec3(rot_axis), r);
                    if (want_3d_vel) {
                        const auto out =
                            oracle::rotate_velocity_3d(parse_rvec3(rot_vel3), axis);
                        print_result(common, {{"V~x", fmt_exact(out.x)},
                                              {"V~y", fmt_exact(out.y)},
                                              {"V~z", fmt_exact(out.z)}});
                    } else {
                        const auto out = oracle::rotate_position_3d(
                            parse_rvec3(rot_vec3), oracle::parse_rational(rot_t), axis);
                        print_result(common, {{"X~x", fmt_exact(out.x)},
                                              {"X~y", fmt_exact(out.y)},
                                              {"X~z", fmt_exact(out.z)}});
                    }
                }
                return 0;
            }

            const ReciprocityRotation rot =
                rot_has_deg ? ReciprocityRotation::from_degrees(rot_phi_deg)
                            : parse_phi(rot_phi);
            if (want_1d_vel) {
                const ComplexScalar out =
                    rotate_velocity(Beta(parse_double(rot_beta)), rot);
                print_result(common, {{"v~", fmt(out)}});
            } else if (want_1d_pos) {
                if (rot_t.empty())
                    throw relkin::InvalidParameters("rotate --x requires --t");
                const ComplexScalar out = rotate_coordinate(
                    Event1D(parse_double(rot_x), parse_double(rot_t)), rot);
                print_result(common, {{"x~", fmt(out)}});
            } else {
                if (rot_axis.empty())
                    throw relkin::InvalidParameters("3D rotation requires --axis");
                const ReciprocityAxis axis(parse_vec3(rot_axis), rot);
                if (want_3d_vel) {
                    const auto out = rotate_velocity_3d(parse_vec3(rot_vel3), axis);
                    print_result(common, {{"V~x", fmt(out.x)},
                                          {"V~y", fmt(out.y)},
                                          {"V~z", fmt(out.z)}});
                } else {
                    if (rot_t.empty())
                        throw relkin::InvalidParameters("rotate --vec requires --t");
                    const auto out = rotate_position_3d(parse_vec3(rot_vec3),
                                                        parse_double(rot_t), axis);
                    print_result(common, {{"X~x", fmt(out.x)},
                                          {"X~y", fmt(out.y)},
                                          {"X~z", fmt(out.z)}});
                }
            }
            return 0;
        }

        if (cmd_gboost->parsed()) {
            const bool is_1d = !gb_beta.empty() || !gb_x.empty();
            const bool is_3d = !gb_vec.empty() || !gb_vel.empty();
            if (is_1d == is_3d)
                throw relkin::InvalidParameters(
                    "gboost needs either --x/--beta (1D) or --vec/--velocity (3D)");

            if (common.exact) {
                const oracle::RotationParam r =
                    gb_has_deg ? throw relkin::InvalidParameters(
                                     "exact mode does not take --phi-deg")
                               : parse_phi_exact(gb_phi);
                if (is_1d) {
                    const auto out = oracle::generalized_boost(
                        {oracle::parse_rational(gb_x), oracle::parse_rational(gb_t)},
                        oracle::parse_rational(gb_beta), r);
                    print_result(common, {{"x'", fmt_exact(out.x_out)},
                                          {"t'", fmt_exact(out.t_out)}});
                } else {
                    const oracle::ExactAxis axis(parse_rvec3(gb_axis), r);
                    const auto out = oracle::generalized_boost_3d(
                        parse_rvec3(gb_vec), oracle::parse_rational(gb_t),
                        parse_rvec3(gb_vel), axis);
                    print_result(common, {{"X'x", fmt_exact(out.X_out.x)},
                                          {"X'y", fmt_exact(out.X_out.y)},
                                          {"X'z", fmt_exact(out.X_out.z)},
                                          {"t'", fmt_exact(out.t_out)}});
                }
                return 0;
            }

            const ReciprocityRotation rot =
                gb_has_deg ? ReciprocityRotation::from_degrees(gb_phi_deg)
                           : parse_phi(gb_phi);
            if (is_1d) {
                if (gb_x.empty() || gb_beta.empty())
                    throw relkin::InvalidParameters("1D gboost requires --x and --beta");
                const auto out = generalized_boost(
                    Event1D(parse_double(gb_x), parse_double(gb_t)),
                    Beta(parse_double(gb_beta)), rot);
                print_result(common,
                             {{"x'", fmt(out.x_out)}, {"t'", fmt(out.t_out)}});
            } else {
                if (gb_vec.empty() || gb_vel.empty() || gb_axis.empty())
                    throw relkin::InvalidParameters(
                        "3D gboost requires --vec, --velocity and --axis");
                const ReciprocityAxis axis(parse_vec3(gb_axis), rot);
                const auto out = generalized_boost_3d(parse_vec3(gb_vec),
                                                      parse_double(gb_t),
                                                      parse_vec3(gb_vel), axis);
                print_result(common, {{"X'x", fmt(out.X_out.x)},
                                      {"X'y", fmt(out.X_out.y)},
                                      {"X'z", fmt(out.X_out.z)},
                                      {"t'", fmt(out.t_out)}});
            }
            return 0;
        }

        if (cmd_verify->parsed())
            return emit_report(sweep::run_verify(finish_config(verify_args)),
                               verify_args);

        if (cmd_sweep->parsed()) {
            emit_report(sweep::run_sweep(finish_config(sweep_args)), sweep_args);
            return 0;  // sweep reports data; it never gates
        }
    } catch (const relkin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return 2;
}
