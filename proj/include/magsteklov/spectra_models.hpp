#pragma once

// Labelled spectra for the Killing-field potentials on the unit disk, the
// unit 4-ball and their boundary spheres S^1 and S^3.

#include "magsteklov/radial_engine.hpp"

#include <string>
#include <vector>

namespace magsteklov {

enum class Model { Disk2, Ball4, Circle, Sphere3 };

std::string to_string(Model model);
std::string to_string(ModeSign sign);

/// Mode index: (k, sign) for Disk2/Circle, (p1, p2) for Ball4/Sphere3.
struct ModeLabel {
    Model model = Model::Disk2;
    int k = 0;
    ModeSign sign = ModeSign::plus;
    int p1 = 0;
    int p2 = 0;

    static ModeLabel angular(Model model, int k, ModeSign sign);
    static ModeLabel hopf(Model model, int p1, int p2);

    bool is_angular() const { return model == Model::Disk2 || model == Model::Circle; }
    /// Total degree: k for angular models, p1 + p2 otherwise.
    int degree() const { return is_angular() ? k : p1 + p2; }

    friend bool operator<(const ModeLabel& lhs, const ModeLabel& rhs);
    friend bool operator==(const ModeLabel& lhs, const ModeLabel& rhs) = default;
};

struct SpectrumEntry {
    ModeLabel label;
    double value = 0.0;
    int multiplicity = 1;
};

/// Entries sorted by value (label order breaks ties); complete for every mode
/// of degree <= k_max.
struct SpectrumTable {
    double t = 0.0;
    Model model = Model::Disk2;
    int k_max = 0;
    std::vector<SpectrumEntry> entries;

    /// Values repeated by multiplicity, nondecreasing.
    std::vector<double> expanded_values() const;
    /// Largest rank n whose n-th expanded value is provably unaffected by the
    /// modes above k_max, assuming the per-degree minimum keeps growing once it
    /// has grown over the last two degrees. Zero when the tail is not growing.
    int reliable_rank() const;
};

/// How S^3 / B^4 multiplicities are attached to the (p1, p2) entries.
enum class Ball4Multiplicity {
    /// k + 1 per entry, so a degree-k cluster totals (k+1)^2 at t = 0.
    per_weight_space,
    /// 1 per entry.
    simple,
};

SpectrumTable disk_steklov_spectrum(double t, int k_max);
SpectrumTable circle_laplacian_spectrum(double t, int k_max);
SpectrumTable ball4_steklov_spectrum(double t, int k_max,
                                     Ball4Multiplicity policy = Ball4Multiplicity::per_weight_space);
SpectrumTable sphere3_laplacian_spectrum(double t, int k_max,
                                         Ball4Multiplicity policy = Ball4Multiplicity::per_weight_space);

/// Closed-form 4-ball Steklov eigenvalue of mode (p1, p2): the ratio of the
/// exponentially weighted factorial sums F and G. Chooses between direct
/// evaluation and the Taylor re-expansion in t.
double ball4_sigma(int p1, int p2, double t);
/// Direct evaluation of the F/G ratio; throws CancellationLoss when the
/// denominator is below 1e-8 of its largest summand.
double ball4_sigma_direct(int p1, int p2, double t);
/// The same ratio with F and G expanded in powers of t. The first k+1 Taylor
/// coefficients of numerator and denominator vanish identically, so the ratio
/// stays exact through t = 0.
double ball4_sigma_taylor(int p1, int p2, double t);

/// F(p1, p2, t) and G(p1, p2, t) exactly as defined, without rescaling.
double ball4_F(int p1, int p2, double t);
double ball4_G(int p1, int p2, double t);

/// k(k+2) + 2(2p-k)t + t^2 with k = p1 + p2, p = p1.
double sphere3_eigenvalue(int p1, int p2, double t);

struct GapRow {
    int index = 0; // 1-based rank
    double sigma = 0.0;
    double sqrt_lambda = 0.0;
    double gap = 0.0;
};

/// Pairs the n lowest Steklov values with the n lowest square roots of the
/// boundary Laplacian values (both counted with multiplicity).
std::vector<GapRow> paired_gap_table(const SpectrumTable& steklov, const SpectrumTable& boundary, int n);

/// Smallest k_max (grown geometrically from a t-dependent guess) whose table
/// is reliable up to rank n.
SpectrumTable reliable_spectrum(Model model, double t, int n);

/// sigma_1 of the disk: the smallest Steklov value over all modes.
double disk_first_eigenvalue(double t);

} // namespace magsteklov
