#pragma once

#include "magsteklov/radial_engine.hpp"

#include <cstddef>

namespace magsteklov {

/// Settings for the shooting oracle. The ODE is singular at r = 0, so
/// integration starts at seed_radius from a short local series.
struct OracleConfig {
    double seed_radius = 1e-3;
    int seed_order = 6;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::size_t max_steps = 1'000'000;

    void validate() const;
};

/// k + Q'(1)/Q(1) by Dormand-Prince 5(4) integration of (Q, Q') from the
/// seed radius to 1. Shares nothing with the series engine beyond the
/// parameter struct.
double oracle_steklov_value(const RadialOdeParams& params, const OracleConfig& config = {});

} // namespace magsteklov
