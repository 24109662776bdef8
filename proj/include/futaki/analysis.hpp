#pragma once

#include "futaki/localization.hpp"
#include "futaki/rational_function.hpp"
#include "futaki/toric.hpp"

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace futaki {

/// Open interval (lower, upper) with rational endpoints.
struct Interval {
    Rational lower;
    Rational upper;
};

/// The real number (p + q*sqrt(d)) / r with r > 0, d > 1 square-free, and
/// gcd(p, q, r) = 1. q = 0 encodes the rational p / r (with d = 1).
struct QuadraticSurd {
    mpz_class p;
    mpz_class q;
    mpz_class d = 1;
    mpz_class r = 1;

    static QuadraticSurd rational(const Rational& x);
    /// Normalizes (p + q*sqrt(disc)) / r, extracting square factors of disc.
    static QuadraticSurd make(mpz_class p, mpz_class q, mpz_class disc, mpz_class r);

    bool is_rational() const { return q == 0; }
    Rational rational_part() const;
    Rational surd_coefficient() const;  // q / r

    /// Exact sign of (this - x).
    int compare(const Rational& x) const;
    double to_double() const;

    /// "1/2+sqrt(35)/28", "3/56".
    std::string to_string() const;

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// a + b*sqrt(d) with rational a, b; the value of a polynomial at a surd.
struct SurdValue {
    Rational a;
    Rational b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};
SurdValue eval_at(const ParamPoly& p, const QuadraticSurd& x);

struct IsolatedRoot {
    Interval interval;  // exactly one root, strictly inside; endpoints are not roots
    int multiplicity = 1;
    ParamPoly factor;   // primitive irreducible factor (or square-free block) vanishing at the root
    std::optional<QuadraticSurd> closed_form;
};

struct RootReport {
    Interval domain;
    Rational width;
    std::vector<IsolatedRoot> roots;  // ascending
    int sturm_certificate = 0;        // distinct roots in the domain counted by sign variations
    /// Real poles of a rational function: all real roots of the denominator.
    std::vector<IsolatedRoot> poles;
    std::vector<bool> pole_inside;
    std::vector<std::string> diagnostics;
};

Rational default_root_width();

/// Sturm isolation of the real roots of p in the open domain, refined by exact
/// bisection to the requested width. Throws DomainError for p = 0.
RootReport isolate_roots(const ParamPoly& p, const Interval& domain,
                         const Rational& width = default_root_width());

/// Roots of the numerator in the domain, plus every real pole as a diagnostic.
RootReport fut_roots(const RationalFunction& f, const Interval& domain,
                     const Rational& width = default_root_width());

struct VolumeCheck {
    Rational localized;  // volume_localized / m!
    Rational toric;
    bool equal = false;
};

struct SampleCheck {
    Rational x;
    Rational localized;
    Rational toric;
    bool equal = false;
    std::vector<VolumeCheck> volumes;
};

struct ValidationRecord {
    std::vector<IntVector::value_type> direction;
    std::vector<SampleCheck> samples;

    bool all_equal() const;
};

/// Exact comparison of localized and toric Fut (and volumes) at every sample.
/// A scenario without a parameter is checked once, at x = 0, when no samples
/// are given.
ValidationRecord cross_validate(const LocalizationScenario& scenario, std::span<const ParamPolytope> polytopes,
                                std::span<const std::int64_t> direction, std::vector<Rational> samples,
                                Execution exec = Execution::parallel);

/// Abscissae lower + (upper - lower) * i / (count + 1), i = 1..count.
std::vector<Rational> equispaced(const Interval& domain, std::size_t count);

struct CurvePoint {
    Rational x;
    std::optional<Rational> y;  // empty at a pole
    bool pole = false;
    bool near_pole = false;     // a pole lies between this point and a neighbour
};

/// Exact samples of f at equispaced abscissae; count >= 2.
std::vector<CurvePoint> sample_curve(const RationalFunction& f, const Interval& domain, std::size_t count);

}  // namespace futaki
