#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "relkin/kinematics_3d.hpp"
#include "relkin/oracle.hpp"

// Residual sweeps and the verification suite behind the CLI `verify` and
// `sweep` subcommands. Everything here is deterministic: identical configs
// produce byte-identical reports.
namespace relkin::sweep {

enum class Mode { floating, exact };
enum class Family { general, collinear };

struct SweepConfig {
    int phi_count = 64;       // grid over [0, 2pi); always contains 0, pi/2, pi
    int sample_count = 100;   // samples per phi row (and per phi-free check)
    std::uint64_t seed = 42;
    std::optional<double> tolerance;  // overrides every gated check when set
    Mode mode = Mode::floating;
    Family family = Family::general;  // which 3D family `sweep` draws from
};

/// Throws InvalidParameters; phi_count must be a positive multiple of 4 so
/// the grid hits 0, pi/2 and pi exactly in both modes.
void validate(const SweepConfig& config);

/// Deterministic uniform double generator: a fixed mapping over
/// std::mt19937_64 so the sampled stream never depends on the standard
/// library's distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::uint64_t integer(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

/// Stream-splitting: derive an independent seed per (check, phi row).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index);

// Admissible-input samplers shared by the CLI suite and the tests. Ranges
// are chosen so every identity that must hold does so within its stated
// tolerance: beta in (-0.99, 0.99) with |beta| >= 1e-6, events with
// t in (0.1, 2) and x = u t, u in (-0.999, 0.999), |u| >= 1e-3; 3D configs
// keep |V| in (0.1, 0.99), |X|/t in (0.1, 0.999), and the axis at least
// 0.05 away (in cosine) from perpendicular to V and X.
struct Samplers {
    static double beta(Rng& rng);
    static Event1D event1d(Rng& rng);
    static Vec3 unit_vec3(Rng& rng);

    struct Config3D {
        Vec3 X;
        double t;
        Vec3 V;
        Vec3 n;
    };
    static Config3D config3d(Rng& rng);
    static Config3D collinear3d(Rng& rng);
};

// Exact analogues built from Pythagorean data, so every square root the
// formulas take is rational.
struct ExactSamplers {
    static oracle::PythagoreanBeta pythagorean(Rng& rng);  // m <= 10
    static oracle::REvent1D event1d(Rng& rng);  // integer, |x| < t <= 20, x != 0

    struct Config3D {
        oracle::RVec3 X;
        oracle::BigRational t;
        oracle::RVec3 V;
        oracle::RVec3 n;
    };
    static Config3D config3d(Rng& rng, bool collinear);
};

struct Row {
    int phi_index = 0;
    int sample_index = 0;
    std::vector<std::string> cells;  // aligned with CheckReport::columns
    double abs_residual = 0.0;
    bool exactly_zero = false;  // meaningful in exact mode only
};

struct CheckReport {
    std::string name;
    bool gating = true;       // non-gating checks never affect the exit code
    double tolerance = 0.0;   // effective gate for this run
    std::vector<std::string> columns;
    std::vector<Row> rows;    // sorted by (phi_index, sample_index)

    // summary
    std::size_t count = 0;
    double max_abs_residual = 0.0;
    int argmax_phi = -1;
    int argmax_sample = -1;
    bool all_exact_zero = false;  // exact mode: every residual was 0/1
    bool pass = true;
};

struct Report {
    std::string command;  // "verify" or "sweep"
    SweepConfig config;
    std::vector<CheckReport> checks;

    bool all_gating_pass() const;
};

/// The full invariant suite; gated checks decide the verify exit code.
Report run_verify(const SweepConfig& config);

/// Residuals of the 1D and 3D invariance identities over the phi grid;
/// data only, nothing gates.
Report run_sweep(const SweepConfig& config);

/// Shortest text that round-trips a double: "%.17g".
std::string format_double(double value);

void write_json(const Report& report, std::ostream& out);
void write_csv(const Report& report, std::ostream& out);

/// One human-readable line per check ("[PASS] name ..."), for stderr.
void write_summary_lines(const Report& report, std::ostream& out);

}  // namespace relkin::sweep
