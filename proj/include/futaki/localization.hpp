#pragma once

#include "futaki/cohomology.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace futaki {

/// Formal parameter with its open validity interval (lower, upper).
struct Parameter {
    std::string name = "c";
    Rational lower;
    Rational upper;

    bool contains(const Rational& x) const { return lower < x && x < upper; }
    Rational midpoint() const { return (lower + upper) / Rational(2); }
};

/// Equivariant data of one connected component of the zero set.
///
/// `euler` is the equivariant Euler class of the normal bundle (weight plus
/// Chern classes), shared by all bundles. `classes[alpha]` carries the
/// Hamiltonian value of bundle alpha as its scalar and the restricted first
/// Chern class as its nilpotent part.
struct FixedComponent {
    std::string label;
    Ring ring;
    EquivariantClass euler;
    std::vector<EquivariantClass> classes;
    std::optional<int> codimension;
};

struct LocalizationScenario {
    int dimension = 1;     // complex dimension m of the manifold
    int bundle_count = 1;  // k in the splitting of the anticanonical bundle
    std::optional<Parameter> parameter;
    std::vector<FixedComponent> components;
};

/// Fixed point p: Hamiltonian values u_alpha(p) and det(nabla X)(p).
struct IsolatedPoint {
    std::vector<RationalFunction> hamiltonians;
    RationalFunction det;
};
using IsolatedPointData = std::vector<IsolatedPoint>;

struct ScenarioValidation {
    bool valid = true;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    std::vector<RationalFunction> volumes;  // filled when the structure is sound
};

/// Checks every structural invariant, then computes the localized volumes and
/// flags non-polynomial or non-positive ones. Never throws on bad data.
ScenarioValidation validate_scenario(const LocalizationScenario& scenario);

/// Integral over the component of classes[alpha]^p / euler.
RationalFunction component_integral(const FixedComponent& component, std::size_t alpha, unsigned power);

/// Sum of component_integral over all components.
RationalFunction residue_sum(const LocalizationScenario& scenario, std::size_t alpha, unsigned power);

/// residue_sum at power m; throws InconsistentResidueError unless it is a polynomial.
RationalFunction volume_localized(const LocalizationScenario& scenario, std::size_t alpha);

/// (1/(m+1)) sum_alpha residue_sum(alpha, m+1) / residue_sum(alpha, m).
RationalFunction fut_localized(const LocalizationScenario& scenario);

/// Isolated-point form of the residue formula (with the det(nabla X) weights).
RationalFunction fut_isolated(const IsolatedPointData& points, int dimension);

/// Point data of a scenario whose components are all points.
IsolatedPointData isolated_points(const LocalizationScenario& scenario);

/// Adds shifts[alpha] to the Hamiltonian scalar of bundle alpha on every component.
LocalizationScenario shift_hamiltonians(const LocalizationScenario& scenario, std::span<const Rational> shifts);

}  // namespace futaki
