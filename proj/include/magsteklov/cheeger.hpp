#pragma once

// Magnetic Cheeger quotients on the unit disk for the potential t r^2 dtheta,
// over centred disks and annuli.

#include "magsteklov/report.hpp"

#include <vector>

namespace magsteklov {

struct TestDomain {
    enum class Kind { CenteredDisk, Annulus };

    Kind kind = Kind::CenteredDisk;
    /// Disk radius in (0, 1] (1 is the whole disk), or annulus inner radius in [0, 1).
    double s = 1.0;

    static TestDomain centered_disk(double s);
    static TestDomain annulus(double s);

    double area() const;
    /// Length of the part of the boundary inside the open unit disk.
    double interior_boundary() const;
    /// Length of the part of the boundary on the unit circle.
    double exterior_boundary() const;
};

struct CheegerQuotients {
    double frustration = 0.0;
    double h = 0.0;
    /// +infinity when the domain does not touch the unit circle.
    double h_prime = 0.0;
};

CheegerQuotients cheeger_quotients(double t, const TestDomain& domain);

/// Compares sigma_1 of the disk with h h' / 8, where h and h' are the minima
/// of the quotients over the centred disks and annuli generated by s_grid.
/// Those minima only bound the true infima from above, so the outcome is
/// reported as consistent or inconclusive, never as a violation.
BoundReport jammes_diagnostic(double t, const std::vector<double>& s_grid);

} // namespace magsteklov
