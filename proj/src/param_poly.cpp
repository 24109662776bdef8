#include "futaki/param_poly.hpp"

#include "futaki/error.hpp"

#include <cctype>
#include <ostream>

namespace futaki {

ParamPoly::ParamPoly(std::vector<Rational> coefficients, std::string name)
    : coeffs_(std::move(coefficients)), name_(std::move(name)) {
    trim();
}

ParamPoly::ParamPoly(const Rational& constant, std::string name) : name_(std::move(name)) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

ParamPoly ParamPoly::variable(std::string name) {
    return ParamPoly({Rational(0), Rational(1)}, std::move(name));
}

ParamPoly ParamPoly::with_name(std::string name) const {
    ParamPoly out = *this;
    out.name_ = std::move(name);
    return out;
}

void ParamPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational ParamPoly::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational ParamPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational ParamPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

ParamPoly ParamPoly::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(coeffs_[i] * Rational(static_cast<std::int64_t>(i)));
    return ParamPoly(std::move(out), name_);
}

ParamPoly ParamPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

ParamPoly ParamPoly::compose(const ParamPoly& inner) const {
    const std::string name = inner.is_constant() ? name_ : inner.name();
    ParamPoly acc(Rational(0), name);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += ParamPoly(*it, name);
    }
    return acc.with_name(name);
}

std::string unify_names(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_constant()) return b.name();
    if (b.is_constant() || a.name() == b.name()) return a.name();
    throw UsageError("parameter mismatch: polynomial in '" + a.name() + "' combined with '" +
                     b.name() + "'");
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
    name_ = unify_names(*this, rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
    name_ = unify_names(*this, rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
    name_ = unify_names(*this, rhs);
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    return a.is_constant() || a.name_ == b.name_;
}

std::string ParamPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        if (c.sign() < 0)
            out += "-";
        else if (!first)
            out += "+";
        const Rational mag = c.abs();
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
        out += name_;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

namespace {

std::string strip(std::string_view text) {
    // Normalize U+2212 and drop whitespace; Rational::parse does the same per token.
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i]);
        }
    }
    return out;
}

bool is_ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text, std::string name) {
    const std::string s = strip(text);
    auto fail = [&](const std::string& why) {
        return ParseError("cannot parse polynomial \"" + std::string(text) + "\": " + why);
    };
    if (s.empty()) throw fail("empty");

    std::string bound = name;
    ParamPoly acc(Rational(0), name.empty() ? std::string("c") : name);
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        if (pos >= s.size()) throw fail("dangling sign");

        Rational coef(1);
        bool have_coef = false;
        if (s[pos] == '(') {
            const auto close = s.find(')', pos);
            if (close == std::string::npos) throw fail("unbalanced parenthesis");
            coef = Rational::parse(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            have_coef = true;
        } else {
            const std::size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' ||
                                      s[pos] == '.'))
                ++pos;
            if (pos > start) {
                coef = Rational::parse(s.substr(start, pos - start));
                have_coef = true;
            }
        }
        if (pos < s.size() && s[pos] == '*') ++pos;

        unsigned power = 0;
        if (pos < s.size() && is_ident_start(s[pos])) {
            const std::size_t start = pos;
            while (pos < s.size() && is_ident_char(s[pos])) ++pos;
            const std::string ident = s.substr(start, pos - start);
            if (bound.empty()) bound = ident;
            if (ident != bound) throw fail("unknown parameter '" + ident + "', expected '" + bound + "'");
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                const std::size_t estart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == estart) throw fail("missing exponent");
                power = static_cast<unsigned>(std::stoul(s.substr(estart, pos - estart)));
            }
        } else if (!have_coef) {
            throw fail("empty term at offset " + std::to_string(pos));
        }
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw fail("unexpected '" + std::string(1, s[pos]) + "'");

        std::vector<Rational> term(power + 1);
        term[power] = negative ? -coef : coef;
        acc += ParamPoly(std::move(term), acc.name());
    }
    return acc.with_name(bound.empty() ? std::string("c") : bound);
}

ParamPoly ParamPoly::interpolate(std::span<const std::pair<Rational, Rational>> points, std::string name) {
    ParamPoly acc(Rational(0), name);
    const ParamPoly x = variable(name);
    for (std::size_t i = 0; i < points.size(); ++i) {
        ParamPoly basis(Rational(1), name);
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            const Rational gap = points[i].first - points[j].first;
            if (gap.is_zero()) throw DomainError("interpolation nodes are not distinct");
            basis *= x - ParamPoly(points[j].first, name);
            denom *= gap;
        }
        acc += basis * (points[i].second / denom);
    }
    return acc.with_name(std::move(name));
}

std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const std::string name = unify_names(a, b);
    std::vector<Rational> rem = a.coefficients();
    const auto& den = b.coefficients();
    const Rational lead_inv = b.leading().inverse();
    if (rem.size() < den.size()) return {ParamPoly(Rational(0), name), a.with_name(name)};
    std::vector<Rational> quot(rem.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + den.size() - 1] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
    }
    return {ParamPoly(std::move(quot), name), ParamPoly(std::move(rem), name)};
}

ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("polynomial " + b.to_string() + " does not divide " + a.to_string());
    return q;
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    ParamPoly x = a.monic();
    ParamPoly y = b.monic();
    while (!y.is_zero()) {
        ParamPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic().with_name(unify_names(a, b));
}

}  // namespace futaki
