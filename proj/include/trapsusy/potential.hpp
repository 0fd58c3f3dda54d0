#pragma once

#include "trapsusy/numerics.hpp"

namespace trapsusy {

/// Radial potential energy r -> V(r). `ground_energy_offset` records the
/// constant already subtracted to move the lowest level to zero.
struct Potential1D {
    RealFunction evaluator;
    double ground_energy_offset = 0.0;

    double operator()(double r) const { return evaluator(r); }
};

} // namespace trapsusy
