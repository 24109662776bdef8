#include "futaki/localization.hpp"

#include "futaki/error.hpp"
#include "futaki/poly_algo.hpp"

namespace futaki {

namespace {

std::string bundle_label(std::size_t alpha) { return "bundle " + std::to_string(alpha + 1); }

// True when p > 0 at every point of the open interval (or everywhere for constants).
bool positive_on(const ParamPoly& p, const std::optional<Parameter>& parameter) {
    if (p.is_zero()) return false;
    if (p.is_constant() || !parameter) return p.is_constant() && p.leading().sign() > 0;
    const auto seq = sturm_sequence(square_free_part(p));
    int inside = sturm_count(seq, parameter->lower, parameter->upper);
    if (p.eval(parameter->upper).is_zero()) --inside;
    return inside == 0 && p.eval(parameter->midpoint()).sign() > 0;
}

}  // namespace

RationalFunction component_integral(const FixedComponent& component, std::size_t alpha, unsigned power) {
    if (alpha >= component.classes.size())
        throw UsageError("component " + component.label + " has no " + bundle_label(alpha));
    try {
        return integrate(equiv_pow(component.classes[alpha], power) * invert_unit(component.euler));
    } catch (const DegenerateError&) {
        throw DegenerateError("degenerate fixed-point datum: euler scalar is zero at component " + component.label);
    }
}

RationalFunction residue_sum(const LocalizationScenario& scenario, std::size_t alpha, unsigned power) {
    RationalFunction total;
    for (const auto& component : scenario.components) total += component_integral(component, alpha, power);
    return total;
}

RationalFunction volume_localized(const LocalizationScenario& scenario, std::size_t alpha) {
    RationalFunction volume = residue_sum(scenario, alpha, static_cast<unsigned>(scenario.dimension));
    if (!volume.is_polynomial())
        throw InconsistentResidueError("inconsistent residue data: localized volume of " + bundle_label(alpha) +
                                       " is " + volume.to_factored_string() + ", not a polynomial");
    return volume;
}

RationalFunction fut_localized(const LocalizationScenario& scenario) {
    const auto m = static_cast<unsigned>(scenario.dimension);
    RationalFunction total;
    for (std::size_t alpha = 0; alpha < static_cast<std::size_t>(scenario.bundle_count); ++alpha) {
        const RationalFunction volume = volume_localized(scenario, alpha);
        if (volume.is_zero())
            throw DomainError("localized volume of " + bundle_label(alpha) + " vanishes identically");
        total += residue_sum(scenario, alpha, m + 1) / volume;
    }
    return total * RationalFunction(Rational(1, static_cast<std::int64_t>(m) + 1));
}

RationalFunction fut_isolated(const IsolatedPointData& points, int dimension) {
    if (points.empty()) throw UsageError("no fixed points");
    const auto m = static_cast<unsigned>(dimension);
    const std::size_t k = points.front().hamiltonians.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].det.is_zero())
            throw DegenerateError("degenerate fixed-point datum: det(nabla X) vanishes at point " + std::to_string(i + 1));
        if (points[i].hamiltonians.size() != k) throw UsageError("fixed points carry different bundle counts");
    }
    RationalFunction total;
    for (std::size_t alpha = 0; alpha < k; ++alpha) {
        RationalFunction num, den;
        for (const auto& point : points) {
            num += pow(point.hamiltonians[alpha], m + 1) / point.det;
            den += pow(point.hamiltonians[alpha], m) / point.det;
        }
        if (den.is_zero()) throw DomainError("fixed-point volume sum of " + bundle_label(alpha) + " vanishes");
        total += num / den;
    }
    return total * RationalFunction(Rational(1, static_cast<std::int64_t>(m) + 1));
}

IsolatedPointData isolated_points(const LocalizationScenario& scenario) {
    IsolatedPointData out;
    for (const auto& component : scenario.components) {
        if (component.ring->dimension() != 0)
            throw UsageError("component " + component.label + " is not an isolated point");
        IsolatedPoint point;
        point.det = component.euler.scalar();
        for (const auto& c : component.classes) point.hamiltonians.push_back(c.scalar());
        out.push_back(std::move(point));
    }
    return out;
}

LocalizationScenario shift_hamiltonians(const LocalizationScenario& scenario, std::span<const Rational> shifts) {
    if (shifts.size() != static_cast<std::size_t>(scenario.bundle_count))
        throw UsageError("expected one shift per bundle");
    LocalizationScenario out = scenario;
    for (auto& component : out.components)
        for (std::size_t alpha = 0; alpha < component.classes.size(); ++alpha)
            component.classes[alpha] =
                component.classes[alpha].with_scalar(component.classes[alpha].scalar() + RationalFunction(shifts[alpha]));
    return out;
}

ScenarioValidation validate_scenario(const LocalizationScenario& scenario) {
    ScenarioValidation report;
    auto error = [&](std::string message) {
        report.valid = false;
        report.errors.push_back(std::move(message));
    };

    if (scenario.dimension < 1) error("manifold dimension must be >= 1");
    if (scenario.bundle_count < 1) error("bundle count must be >= 1");
    if (scenario.parameter && !(scenario.parameter->lower < scenario.parameter->upper))
        error("validity interval (" + scenario.parameter->lower.to_string() + ", " +
              scenario.parameter->upper.to_string() + ") is empty");
    if (scenario.components.empty()) error("no fixed components");

    for (const auto& component : scenario.components) {
        const std::string& label = component.label;
        if (!component.ring) {
            error("component " + label + " has no ring");
            continue;
        }
        if (component.ring->dimension() > scenario.dimension)
            error("component " + label + " has dimension " + std::to_string(component.ring->dimension()) +
                  " > " + std::to_string(scenario.dimension));
        if (component.codimension && component.ring->dimension() + *component.codimension != scenario.dimension)
            error("component " + label + ": dimension + codimension != " + std::to_string(scenario.dimension));
        if (component.classes.size() != static_cast<std::size_t>(scenario.bundle_count))
            error("component " + label + " lists " + std::to_string(component.classes.size()) + " classes for " +
                  std::to_string(scenario.bundle_count) + " bundles");
        if (!same_ring(component.euler.ring(), component.ring))
            error("component " + label + ": euler class lives in another ring");
        for (const auto& c : component.classes)
            if (!same_ring(c.ring(), component.ring)) error("component " + label + ": bundle class lives in another ring");
        if (component.euler.scalar().is_zero())
            error("degenerate fixed-point datum: euler scalar is zero at component " + label);
    }
    if (!report.valid) return report;

    const auto m = static_cast<unsigned>(scenario.dimension);
    for (std::size_t alpha = 0; alpha < static_cast<std::size_t>(scenario.bundle_count); ++alpha) {
        try {
            const RationalFunction volume = residue_sum(scenario, alpha, m);
            report.volumes.push_back(volume);
            if (!volume.is_polynomial()) {
                error("inconsistent residue data: localized volume of " + bundle_label(alpha) + " is " +
                      volume.to_factored_string() + ", not a polynomial");
                continue;
            }
            if (!positive_on(volume.num(), scenario.parameter))
                error("localized volume of " + bundle_label(alpha) + " (" + volume.num().to_string() +
                      ") is not positive on the validity interval");

            // Equivariant integrals of degree below m vanish on a genuine manifold.
            std::string nonzero;
            for (unsigned p = 0; p < m; ++p) {
                const RationalFunction low = residue_sum(scenario, alpha, p);
                if (!low.is_zero()) nonzero += (nonzero.empty() ? "" : ", ") + ("p=" + std::to_string(p) + ": " + low.to_factored_string());
            }
            if (!nonzero.empty())
                report.warnings.push_back("residue sums of degree below m do not vanish for " + bundle_label(alpha) +
                                          " (" + nonzero + "); the normal weights are not lattice-normalized");
        } catch (const Error& e) {
            error(e.what());
        }
    }
    return report;
}

}  // namespace futaki
