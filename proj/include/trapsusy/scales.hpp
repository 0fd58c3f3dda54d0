#pragma once

namespace trapsusy {

/// Physical constants of an isotropic trap U(r) = mu*B0*(1 + r^2/r0^2).
/// All unit handling funnels through here; the remaining modules see only
/// the derived quantities.
class PhysicalScales {
public:
    PhysicalScales(double hbar, double mass, double trap_depth, double length_scale);

    /// hbar = m = r0 = 1, mu*B0 = 1/2, hence omega0 = 1.
    static PhysicalScales dimensionless() { return {1.0, 1.0, 0.5, 1.0}; }

    double hbar() const { return hbar_; }
    double mass() const { return mass_; }
    double trap_depth() const { return trap_depth_; }
    double length_scale() const { return length_scale_; }

    double omega0() const { return omega0_; }
    double hbar_omega() const { return hbar_ * omega0_; }
    /// sqrt(hbar / (m omega0)); equals r0 in natural trap units.
    double oscillator_length() const { return oscillator_length_; }
    /// hbar^2 / 2m
    double kinetic() const { return hbar_ * hbar_ / (2.0 * mass_); }

private:
    double hbar_;
    double mass_;
    double trap_depth_;
    double length_scale_;
    double omega0_;
    double oscillator_length_;
};

} // namespace trapsusy
