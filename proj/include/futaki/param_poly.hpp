#pragma once

#include "futaki/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace futaki {

/// Dense univariate polynomial over Q in one named formal parameter.
///
/// Coefficient i multiplies name^i. Trailing zeros are never stored, so the
/// zero polynomial is the empty sequence. Constants are compatible with any
/// parameter name; mixing two non-constant polynomials in different
/// parameters throws UsageError.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(std::vector<Rational> coefficients, std::string name = "c");
    ParamPoly(const Rational& constant, std::string name = "c");  // NOLINT

    static ParamPoly variable(std::string name = "c");
    /// Accepts "112c^2-112c+23", "2c-1/2", "(3/4)c", "3/4*c", "c^2+1".
    /// An empty `name` accepts any identifier.
    static ParamPoly parse(std::string_view text, std::string name = "c");
    /// Lagrange interpolation through (x, y) pairs with distinct x.
    static ParamPoly interpolate(std::span<const std::pair<Rational, Rational>> points,
                                 std::string name = "c");

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const std::string& name() const { return name_; }
    ParamPoly with_name(std::string name) const;

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Rational(1); }
    Rational coefficient(std::size_t power) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;
    ParamPoly derivative() const;
    ParamPoly monic() const;
    /// Composition p(q(name)); used for substitutions such as c -> 1-c.
    ParamPoly compose(const ParamPoly& inner) const;

    std::string to_string() const;

    ParamPoly& operator+=(const ParamPoly& rhs);
    ParamPoly& operator-=(const ParamPoly& rhs);
    ParamPoly& operator*=(const ParamPoly& rhs);
    ParamPoly& operator*=(const Rational& rhs);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
    friend ParamPoly operator*(ParamPoly a, const Rational& b) { return a *= b; }
    friend ParamPoly operator*(const Rational& a, ParamPoly b) { return b *= a; }
    ParamPoly operator-() const;

    /// Coefficient equality; names are compared only when both are non-constant.
    friend bool operator==(const ParamPoly& a, const ParamPoly& b);

private:
    void trim();

    std::vector<Rational> coeffs_;
    std::string name_ = "c";
};

/// Name shared by two operands; throws UsageError on a genuine mismatch.
std::string unify_names(const ParamPoly& a, const ParamPoly& b);

/// Euclidean division a = q*b + r with deg r < deg b. Throws DomainError if b = 0.
std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& a, const ParamPoly& b);

/// Exact quotient; throws DomainError when b does not divide a.
ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b);

/// Monic gcd. gcd(p, 0) is p made monic; gcd(0, 0) throws DomainError.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace futaki
