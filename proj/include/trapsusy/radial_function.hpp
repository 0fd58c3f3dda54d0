#pragma once

#include "trapsusy/numerics.hpp"

#include <optional>
#include <string>

namespace trapsusy {

/// Real-valued (possibly non-integer) parameters of the oscillator-type
/// family a radial function belongs to.
struct FamilyParams {
    double dimension = 3.0;
    double principal = 0.0;
    double angular = 0.0;
};

/// Reduced radial wave function: vanishes at the origin like
/// r^leading_power, normalized on dr.
class RadialFunction {
public:
    RadialFunction(RealFunction evaluator, double leading_power, double normalization,
                   FamilyParams family, int radial_degree, double length_unit)
        : evaluator_(std::move(evaluator)), leading_power_(leading_power),
          normalization_(normalization), family_(family), radial_degree_(radial_degree),
          length_unit_(length_unit) {}

    double operator()(double r) const { return evaluator_(r); }
    const RealFunction& evaluator() const { return evaluator_; }

    double leading_power() const { return leading_power_; }
    double normalization() const { return normalization_; }
    const FamilyParams& family() const { return family_; }
    /// Degree of the Laguerre factor, i.e. the expected node count.
    int radial_degree() const { return radial_degree_; }
    /// Natural length of the function (oscillator length or Bohr radius).
    double length_unit() const { return length_unit_; }

    /// Angular momentum carried by the angular factor, when it differs from
    /// the family's angular parameter (fermionic sector).
    std::optional<int> angular_label;

private:
    RealFunction evaluator_;
    double leading_power_;
    double normalization_;
    FamilyParams family_;
    int radial_degree_;
    double length_unit_;
};

} // namespace trapsusy
