#include "futaki/rational_function.hpp"

#include "futaki/error.hpp"
#include "futaki/poly_algo.hpp"

#include <algorithm>
#include <ostream>

namespace futaki {

RationalFunction::RationalFunction(const Rational& constant, std::string name)
    : num_(constant, name), den_(Rational(1), name) {}

RationalFunction::RationalFunction(ParamPoly polynomial)
    : num_(std::move(polynomial)), den_(Rational(1), num_.name()) {}

RationalFunction RationalFunction::reduce(ParamPoly num, ParamPoly den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    const std::string name = unify_names(num, den);
    RationalFunction out;
    if (num.is_zero()) {
        out.num_ = ParamPoly(Rational(0), name);
        out.den_ = ParamPoly(Rational(1), name);
        return out;
    }
    const ParamPoly g = gcd(num, den);
    ParamPoly n = exact_div(num, g);
    ParamPoly d = exact_div(den, g);
    const Rational lc = d.leading();
    out.num_ = (n * lc.inverse()).with_name(name);
    out.den_ = (d * lc.inverse()).with_name(name);
    return out;
}

const std::string& RationalFunction::name() const { return num_.is_constant() ? den_.name() : num_.name(); }

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw UsageError("rational function " + to_string() + " is not constant");
    return num_.coefficient(0);
}

Rational RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero())
        throw PoleError("pole at " + name() + " = " + x.to_string() + " of " + to_factored_string());
    return num_.eval(x) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const ParamPoly& p) {
        return p.degree() >= 1 && p.coefficients().size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    };
    return wrap(num_) + "/" + wrap(den_);
}

namespace {

bool is_monomial(const ParamPoly& p) {
    return std::count_if(p.coefficients().begin(), p.coefficients().end(),
                         [](const Rational& r) { return !r.is_zero(); }) <= 1;
}

// Concatenated factors; a lone multi-term factor stays bare when `bare_single`.
std::string render_factors(const std::vector<IntegerFactor>& factors, bool bare_single) {
    const bool lone = factors.size() == 1 && factors[0].multiplicity == 1;
    std::string out;
    for (const auto& f : factors) {
        const bool paren = !is_monomial(f.factor) && !(bare_single && lone);
        out += paren ? "(" + f.factor.to_string() + ")" : f.factor.to_string();
        if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
    }
    return out;
}

}  // namespace

std::string RationalFunction::to_factored_string() const {
    if (num_.is_zero()) return "0";
    const IntegerFactorization nf =
        num_.is_constant() ? IntegerFactorization{num_.leading(), {}} : factor_over_q(num_);
    const IntegerFactorization df =
        den_.is_constant() ? IntegerFactorization{den_.leading(), {}} : factor_over_q(den_);
    const Rational unit = nf.unit / df.unit;
    const bool has_den = !df.factors.empty();

    std::string numerator;
    if (nf.factors.empty()) {
        numerator = has_den && !unit.is_integer() ? "(" + unit.to_string() + ")" : unit.to_string();
    } else {
        std::string prefix;
        if (unit == Rational(-1))
            prefix = "-";
        else if (unit != Rational(1))
            prefix = unit.is_integer() ? unit.to_string() : "(" + unit.to_string() + ")";
        numerator = prefix + render_factors(nf.factors, prefix.empty() && !has_den);
    }
    if (!has_den) return numerator;

    const bool lone = df.factors.size() == 1 && df.factors[0].multiplicity == 1;
    std::string denominator = render_factors(df.factors, false);
    if (!lone) denominator = "(" + denominator + ")";
    return numerator + "/" + denominator;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    *this = reduce(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    *this = reduce(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    *this = reduce(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw DomainError("division by the zero rational function");
    *this = reduce(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -num_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_factored_string(); }

}  // namespace futaki
