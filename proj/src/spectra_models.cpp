#include "magsteklov/spectra_models.hpp"

#include "magsteklov/errors.hpp"
#include "neumaier_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

namespace magsteklov {

std::string to_string(Model model) {
    switch (model) {
    case Model::Disk2: return "disk2";
    case Model::Ball4: return "ball4";
    case Model::Circle: return "circle";
    case Model::Sphere3: return "sphere3";
    }
    return "unknown";
}

std::string to_string(ModeSign sign) { return sign == ModeSign::plus ? "plus" : "minus"; }

ModeLabel ModeLabel::angular(Model model, int k, ModeSign sign) {
    ModeLabel label;
    label.model = model;
    label.k = k;
    label.sign = k == 0 ? ModeSign::plus : sign;
    return label;
}

ModeLabel ModeLabel::hopf(Model model, int p1, int p2) {
    ModeLabel label;
    label.model = model;
    label.k = p1 + p2;
    label.p1 = p1;
    label.p2 = p2;
    return label;
}

bool operator<(const ModeLabel& lhs, const ModeLabel& rhs) {
    const auto key = [](const ModeLabel& l) {
        return std::make_tuple(static_cast<int>(l.model), l.degree(), static_cast<int>(l.sign), l.p1, l.p2);
    };
    return key(lhs) < key(rhs);
}

std::vector<double> SpectrumTable::expanded_values() const {
    std::vector<double> out;
    for (const auto& e : entries)
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    return out;
}

int SpectrumTable::reliable_rank() const {
    if (k_max < 2)
        return 0;
    std::map<int, double> level_min;
    for (const auto& e : entries) {
        const int d = e.label.degree();
        auto [it, inserted] = level_min.try_emplace(d, e.value);
        if (!inserted)
            it->second = std::min(it->second, e.value);
    }
    const double m2 = level_min.at(k_max - 2), m1 = level_min.at(k_max - 1), m0 = level_min.at(k_max);
    if (!(m2 < m1 && m1 < m0))
        return 0;
    int rank = 0;
    for (const auto& e : entries)
        if (e.value <= m0)
            rank += e.multiplicity;
    return rank;
}

namespace {

void sort_entries(SpectrumTable& table) {
    std::stable_sort(table.entries.begin(), table.entries.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
        if (x.value != y.value)
            return x.value < y.value;
        return x.label < y.label;
    });
}

void require_k_max(int k_max) {
    if (k_max < 0)
        throw SpectralError(ErrorKind::InvalidParams, "k_max must be nonnegative");
}

int ball4_multiplicity(int k, Ball4Multiplicity policy) {
    return policy == Ball4Multiplicity::per_weight_space ? k + 1 : 1;
}

// Polynomial parts of F and G for the closed form, with every factorial
// divided by k! (a common factor of numerator and denominator):
//   G(p1,p2,t) / k! = e^{t/2} sum_j g_j t^j,  g_j = C(p1,j) (k-j)!/k! (-1)^j.
std::vector<long double> weighted_binomials(int p, int k, bool alternate) {
    std::vector<long double> out(static_cast<std::size_t>(p) + 1);
    long double binom = 1.0L, falling = 1.0L; // C(p, j), k!/(k-j)!
    for (int j = 0; j <= p; ++j) {
        if (j > 0) {
            binom = binom * (p - j + 1) / j;
            falling *= (k - j + 1);
        }
        out[j] = binom / falling * ((alternate && (j % 2 == 1)) ? -1.0L : 1.0L);
    }
    return out;
}

struct ClosedFormParts {
    std::vector<long double> g_plus, g_minus; // multiply e^{t/2} and e^{-t/2}
    std::vector<long double> f_plus, f_minus; // numerator polynomials, same weights
};

ClosedFormParts closed_form_parts(int p1, int p2) {
    const int k = p1 + p2;
    ClosedFormParts parts;
    parts.g_plus = weighted_binomials(p1, k, true);
    parts.g_minus = weighted_binomials(p2, k, false);
    // F(p1,p2,t) carries (2j - k - 2 + t); F(p2,p1,-t) carries (2j - k - 2 - t).
    parts.f_plus.assign(parts.g_plus.size() + 1, 0.0L);
    parts.f_minus.assign(parts.g_minus.size() + 1, 0.0L);
    for (std::size_t j = 0; j < parts.g_plus.size(); ++j) {
        parts.f_plus[j] += (2.0L * j - k - 2) * parts.g_plus[j];
        parts.f_plus[j + 1] += parts.g_plus[j];
    }
    for (std::size_t j = 0; j < parts.g_minus.size(); ++j) {
        parts.f_minus[j] += (2.0L * j - k - 2) * parts.g_minus[j];
        parts.f_minus[j + 1] -= parts.g_minus[j];
    }
    return parts;
}

void require_modes(int p1, int p2) {
    if (p1 < 0 || p2 < 0)
        throw SpectralError(ErrorKind::InvalidParams, "p1, p2 must be nonnegative");
}

double ball4_sigma_direct_checked(int p1, int p2, double t, double cancellation_tol) {
    require_modes(p1, p2);
    const auto parts = closed_form_parts(p1, p2);
    const long double tt = t;
    // Both exponentials divided by e^{|t|/2}.
    const long double w_plus = std::exp(static_cast<long double>(0.5L * tt - 0.5L * std::abs(tt)));
    const long double w_minus = std::exp(static_cast<long double>(-0.5L * tt - 0.5L * std::abs(tt)));

    const auto combine = [&](const std::vector<long double>& plus, const std::vector<long double>& minus,
                             long double& largest) {
        detail::NeumaierSum<long double> sum;
        long double power = 1.0L;
        for (const long double c : plus) {
            const long double term = w_plus * c * power;
            largest = std::max(largest, std::abs(term));
            sum.add(term);
            power *= tt;
        }
        power = 1.0L;
        for (const long double c : minus) {
            const long double term = -w_minus * c * power;
            largest = std::max(largest, std::abs(term));
            sum.add(term);
            power *= tt;
        }
        return sum.value();
    };

    long double num_largest = 0.0L, den_largest = 0.0L;
    const long double num = combine(parts.f_plus, parts.f_minus, num_largest);
    const long double den = combine(parts.g_plus, parts.g_minus, den_largest);
    const bool num_lost = num != 0.0L && std::abs(num) < cancellation_tol * num_largest;
    if (!(std::abs(den) >= cancellation_tol * den_largest) || num_lost)
        throw SpectralError(ErrorKind::CancellationLoss,
                            "F/G difference cancels at t = " + std::to_string(t) + " for (p1,p2) = (" +
                                std::to_string(p1) + "," + std::to_string(p2) + ")");
    return static_cast<double>(num / den);
}

} // namespace

double ball4_F(int p1, int p2, double t) {
    require_modes(p1, p2);
    const int k = p1 + p2;
    long double sum = 0.0L, binom = 1.0L, fact = std::tgamma(static_cast<long double>(k) + 1.0L);
    for (int j = 0; j <= p1; ++j) {
        if (j > 0) {
            binom = binom * (p1 - j + 1) / j;
            fact /= (k - j + 1);
        }
        sum += (2.0L * j - k + t - 2) * fact * binom * std::pow(static_cast<long double>(-t), j);
    }
    return static_cast<double>(std::exp(0.5L * t) * sum);
}

double ball4_G(int p1, int p2, double t) {
    require_modes(p1, p2);
    const int k = p1 + p2;
    long double sum = 0.0L, binom = 1.0L, fact = std::tgamma(static_cast<long double>(k) + 1.0L);
    for (int j = 0; j <= p1; ++j) {
        if (j > 0) {
            binom = binom * (p1 - j + 1) / j;
            fact /= (k - j + 1);
        }
        sum += fact * binom * std::pow(static_cast<long double>(-t), j);
    }
    return static_cast<double>(std::exp(0.5L * t) * sum);
}

double ball4_sigma_direct(int p1, int p2, double t) { return ball4_sigma_direct_checked(p1, p2, t, 1e-8); }

double ball4_sigma_taylor(int p1, int p2, double t) {
    require_modes(p1, p2);
    const int k = p1 + p2;
    const auto parts = closed_form_parts(p1, p2);
    const long double tt = t;

    // n-th Taylor coefficient of e^{t/2} P(t) - e^{-t/2} M(t).
    const auto coefficient = [](const std::vector<long double>& plus, const std::vector<long double>& minus, int n) {
        detail::NeumaierSum<long double> sum;
        for (int j = 0; j < static_cast<int>(plus.size()) && j <= n; ++j)
            sum.add(plus[j] * std::pow(0.5L, n - j) / std::tgamma(static_cast<long double>(n - j) + 1.0L));
        for (int j = 0; j < static_cast<int>(minus.size()) && j <= n; ++j)
            sum.add(-minus[j] * std::pow(-0.5L, n - j) / std::tgamma(static_cast<long double>(n - j) + 1.0L));
        return sum.value();
    };

    // Orders 0..k vanish identically; start at k + 1 and factor t^{k+1} out.
    detail::NeumaierSum<long double> num, den;
    long double power = 1.0L;
    long double previous = std::numeric_limits<long double>::infinity();
    const int n_min = k + 1;
    const int n_cap = n_min + 400;
    for (int n = n_min; n < n_cap; ++n) {
        const long double fn = coefficient(parts.f_plus, parts.f_minus, n) * power;
        const long double gn = coefficient(parts.g_plus, parts.g_minus, n) * power;
        num.add(fn);
        den.add(gn);
        power *= tt;
        // Alternate coefficients can vanish (parity), so test two in a row.
        const long double current = std::abs(fn) + std::abs(gn);
        const long double scale = std::max(std::abs(num.value()), std::abs(den.value()));
        if (n > n_min + 2 + 2 * std::abs(t) && current + previous < 1e-21L * scale)
            break;
        previous = current;
    }
    return static_cast<double>(num.value() / den.value());
}

double ball4_sigma(int p1, int p2, double t) {
    // Long double leaves ~15 good digits after losing 4 to cancellation.
    try {
        return ball4_sigma_direct_checked(p1, p2, t, 1e-4);
    } catch (const SpectralError& e) {
        if (e.kind() != ErrorKind::CancellationLoss)
            throw;
    }
    return ball4_sigma_taylor(p1, p2, t);
}

double sphere3_eigenvalue(int p1, int p2, double t) {
    require_modes(p1, p2);
    const double k = p1 + p2;
    return k * (k + 2.0) + 2.0 * (2.0 * p1 - k) * t + t * t;
}

SpectrumTable disk_steklov_spectrum(double t, int k_max) {
    require_k_max(k_max);
    SpectrumTable table{t, Model::Disk2, k_max, {}};
    for (int k = 0; k <= k_max; ++k) {
        for (const ModeSign sign : {ModeSign::plus, ModeSign::minus}) {
            if (k == 0 && sign == ModeSign::minus)
                continue;
            double value = 0.0;
            try {
                value = radial_steklov_value(RadialOdeParams::disk(k, sign, t));
            } catch (const SpectralError& e) {
                throw SpectralError(e.kind(), std::string(e.what()) + " [disk2 mode k=" + std::to_string(k) +
                                                  " " + to_string(sign) + "]");
            }
            table.entries.push_back({ModeLabel::angular(Model::Disk2, k, sign), value, 1});
        }
    }
    sort_entries(table);
    return table;
}

SpectrumTable circle_laplacian_spectrum(double t, int k_max) {
    require_k_max(k_max);
    SpectrumTable table{t, Model::Circle, k_max, {}};
    for (int k = 0; k <= k_max; ++k) {
        table.entries.push_back({ModeLabel::angular(Model::Circle, k, ModeSign::plus), (k + t) * (k + t), 1});
        if (k > 0)
            table.entries.push_back({ModeLabel::angular(Model::Circle, k, ModeSign::minus), (k - t) * (k - t), 1});
    }
    sort_entries(table);
    return table;
}

SpectrumTable ball4_steklov_spectrum(double t, int k_max, Ball4Multiplicity policy) {
    require_k_max(k_max);
    SpectrumTable table{t, Model::Ball4, k_max, {}};
    for (int k = 0; k <= k_max; ++k)
        for (int p1 = 0; p1 <= k; ++p1) {
            const int p2 = k - p1;
            table.entries.push_back(
                {ModeLabel::hopf(Model::Ball4, p1, p2), ball4_sigma(p1, p2, t), ball4_multiplicity(k, policy)});
        }
    sort_entries(table);
    return table;
}

SpectrumTable sphere3_laplacian_spectrum(double t, int k_max, Ball4Multiplicity policy) {
    require_k_max(k_max);
    SpectrumTable table{t, Model::Sphere3, k_max, {}};
    for (int k = 0; k <= k_max; ++k)
        for (int p1 = 0; p1 <= k; ++p1) {
            const double value = sphere3_eigenvalue(p1, k - p1, t);
            if (value < -1e-12)
                throw SpectralError(ErrorKind::NegativeEigenvalue,
                                    "S^3 eigenvalue " + std::to_string(value) + " at p1=" + std::to_string(p1));
            table.entries.push_back(
                {ModeLabel::hopf(Model::Sphere3, p1, k - p1), value, ball4_multiplicity(k, policy)});
        }
    sort_entries(table);
    return table;
}

std::vector<GapRow> paired_gap_table(const SpectrumTable& steklov, const SpectrumTable& boundary, int n) {
    if (n < 1)
        throw SpectralError(ErrorKind::InvalidParams, "n must be positive");
    if (std::abs(steklov.t - boundary.t) > 1e-15 * std::max(1.0, std::abs(steklov.t)))
        throw SpectralError(ErrorKind::InvalidParams, "tables were computed at different field strengths");
    if (steklov.reliable_rank() < n || boundary.reliable_rank() < n)
        throw SpectralError(ErrorKind::TruncationInsufficient,
                            "tables reliable to ranks " + std::to_string(steklov.reliable_rank()) + " and " +
                                std::to_string(boundary.reliable_rank()) + ", need " + std::to_string(n));

    const auto sigma = steklov.expanded_values();
    const auto lambda = boundary.expanded_values();
    std::vector<GapRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double root = std::sqrt(std::max(0.0, lambda[i]));
        rows.push_back({i + 1, sigma[i], root, sigma[i] - root});
    }
    return rows;
}

SpectrumTable reliable_spectrum(Model model, double t, int n) {
    int k_max = 4 + static_cast<int>(std::ceil(std::abs(t)));
    for (int attempt = 0; attempt < 40; ++attempt) {
        SpectrumTable table;
        switch (model) {
        case Model::Disk2: table = disk_steklov_spectrum(t, k_max); break;
        case Model::Ball4: table = ball4_steklov_spectrum(t, k_max); break;
        case Model::Circle: table = circle_laplacian_spectrum(t, k_max); break;
        case Model::Sphere3: table = sphere3_laplacian_spectrum(t, k_max); break;
        }
        if (table.reliable_rank() >= n)
            return table;
        k_max += std::max(2, k_max / 2);
    }
    throw SpectralError(ErrorKind::TruncationInsufficient,
                        "could not certify rank " + std::to_string(n) + " for " + to_string(model));
}

double disk_first_eigenvalue(double t) { return reliable_spectrum(Model::Disk2, t, 1).entries.front().value; }

} // namespace magsteklov
