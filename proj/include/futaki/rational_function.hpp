#pragma once

#include "futaki/param_poly.hpp"

#include <string>

namespace futaki {

/// Reduced quotient num/den of parameter polynomials.
///
/// Canonical form: gcd(num, den) = 1 and den is monic, so any overall
/// constant lives in num. Zero is 0/1. Two RationalFunctions are equal as
/// functions iff they are structurally equal.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& constant, std::string name = "c");  // NOLINT
    RationalFunction(ParamPoly polynomial);                              // NOLINT

    /// ratfun_reduce: throws DomainError when den is the zero polynomial.
    static RationalFunction reduce(ParamPoly num, ParamPoly den);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    const std::string& name() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant function; throws UsageError otherwise.
    Rational constant_value() const;

    /// ratfun_eval: throws PoleError naming x when den(x) = 0.
    Rational eval(const Rational& x) const;

    /// Expanded "num/den" rendering, e.g. "(-30c+12)/(112c-6)".
    std::string to_string() const;
    /// Factored rendering over Q with integer primitive factors, e.g.
    /// "-3(112c^2-112c+23)/((56c-3)(56c-53))".
    std::string to_factored_string() const;

    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    ParamPoly num_;
    ParamPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace futaki
