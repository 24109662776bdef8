#include "futaki/cohomology.hpp"

#include "futaki/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace futaki {

std::shared_ptr<const RingSpec> RingSpec::create(std::vector<Generator> generators, Exponents top, int dimension) {
    if (dimension < 0) throw ValidationError("ring dimension must be >= 0");
    if (top.size() != generators.size())
        throw ValidationError("top monomial has " + std::to_string(top.size()) + " exponents for " +
                              std::to_string(generators.size()) + " generators");
    std::set<std::string> names;
    int top_degree = 0;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (g.name.empty() || !names.insert(g.name).second)
            throw ValidationError("generator names must be nonempty and distinct");
        if (g.order < 1) throw ValidationError("generator '" + g.name + "' has nilpotency order < 1");
        if (g.degree < 2 || g.degree % 2 != 0)
            throw ValidationError("generator '" + g.name + "' must have even degree >= 2");
        if (top[i] < 0 || top[i] > g.order - 1)
            throw ValidationError("top monomial exponent " + std::to_string(top[i]) + " of '" + g.name +
                                  "' exceeds nilpotency bound " + std::to_string(g.order - 1));
        top_degree += (g.degree / 2) * top[i];
    }
    if (top_degree != dimension)
        throw ValidationError("top monomial has complex degree " + std::to_string(top_degree) +
                              " but the component dimension is " + std::to_string(dimension));
    std::shared_ptr<RingSpec> ring(new RingSpec);
    ring->generators_ = std::move(generators);
    ring->top_ = std::move(top);
    ring->dimension_ = dimension;
    return ring;
}

std::shared_ptr<const RingSpec> RingSpec::point() { return create({}, {}, 0); }

int RingSpec::complex_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += (generators_[i].degree / 2) * e[i];
    return d;
}

bool RingSpec::survives(const Exponents& e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] >= generators_[i].order) return false;
    return complex_degree(e) <= dimension_;
}

Exponents RingSpec::parse_monomial(std::string_view text) const {
    Exponents e = unit_exponents();
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty() || s == "1") return e;

    auto index_of = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < generators_.size(); ++i)
            if (generators_[i].name == name) return i;
        throw ParseError("unknown generator '" + name + "' in monomial \"" + std::string(text) + "\"");
    };
    const bool single_letter = std::all_of(generators_.begin(), generators_.end(),
                                           [](const Generator& g) { return g.name.size() == 1; });
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == '*') {
            ++pos;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(s[pos])) && s[pos] != '_')
            throw ParseError("malformed monomial \"" + std::string(text) + "\"");
        std::size_t end = pos + 1;
        if (!single_letter)
            while (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) ++end;
        const std::size_t idx = index_of(s.substr(pos, end - pos));
        pos = end;
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
            const std::size_t start = ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw ParseError("missing exponent in monomial \"" + std::string(text) + "\"");
            power = std::stoi(s.substr(start, pos - start));
        }
        e[idx] += power;
    }
    return e;
}

std::string RingSpec::monomial_to_string(const Exponents& e) const {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += generators_[i].name;
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

namespace {

void require_same(const Ring& a, const Ring& b) {
    if (!same_ring(a, b)) throw UsageError("classes live in different cohomology rings");
}

}  // namespace

NilpotentClass::NilpotentClass(Ring ring) : ring_(std::move(ring)) {
    if (!ring_) throw UsageError("class without a ring");
}

NilpotentClass NilpotentClass::constant(Ring ring, const RationalFunction& value) {
    NilpotentClass out(std::move(ring));
    out.add_term(out.ring_->unit_exponents(), value);
    return out;
}

NilpotentClass NilpotentClass::generator(Ring ring, std::size_t index) {
    NilpotentClass out(std::move(ring));
    if (index >= out.ring_->rank()) throw UsageError("generator index out of range");
    Exponents e = out.ring_->unit_exponents();
    e[index] = 1;
    out.add_term(e, RationalFunction(Rational(1)));
    return out;
}

RationalFunction NilpotentClass::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void NilpotentClass::add_term(const Exponents& e, const RationalFunction& c) {
    if (e.size() != ring_->rank()) throw UsageError("exponent vector length does not match the ring");
    if (c.is_zero() || !ring_->survives(e)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string NilpotentClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        const std::string mono = ring_->monomial_to_string(e);
        out += "(" + c.to_factored_string() + ")";
        if (mono != "1") out += "*" + mono;
    }
    return out;
}

NilpotentClass& NilpotentClass::operator+=(const NilpotentClass& rhs) {
    require_same(ring_, rhs.ring_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

NilpotentClass& NilpotentClass::operator-=(const NilpotentClass& rhs) {
    require_same(ring_, rhs.ring_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

NilpotentClass& NilpotentClass::operator*=(const RationalFunction& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

NilpotentClass operator*(const NilpotentClass& a, const NilpotentClass& b) {
    require_same(a.ring_, b.ring_);
    NilpotentClass out(a.ring_);
    Exponents e(a.ring_->rank());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (a.ring_->survives(e)) out.add_term(e, ca * cb);
        }
    return out;
}

bool operator==(const NilpotentClass& a, const NilpotentClass& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

NilpotentClass class_mul(const NilpotentClass& x, const NilpotentClass& y) { return x * y; }

EquivariantClass::EquivariantClass(RationalFunction scalar, NilpotentClass nilpotent)
    : scalar_(std::move(scalar)), nilpotent_(std::move(nilpotent)) {
    const Exponents unit = nilpotent_.ring()->unit_exponents();
    const RationalFunction folded = nilpotent_.coefficient(unit);
    if (!folded.is_zero()) {
        scalar_ += folded;
        nilpotent_.add_term(unit, -folded);
    }
}

EquivariantClass::EquivariantClass(const NilpotentClass& element)
    : EquivariantClass(RationalFunction(), element) {}

EquivariantClass EquivariantClass::one(Ring ring) {
    return EquivariantClass(RationalFunction(Rational(1)), NilpotentClass(std::move(ring)));
}

NilpotentClass EquivariantClass::as_element() const {
    return nilpotent_ + NilpotentClass::constant(ring(), scalar_);
}

EquivariantClass EquivariantClass::with_scalar(RationalFunction scalar) const {
    return EquivariantClass(std::move(scalar), nilpotent_);
}

std::string EquivariantClass::to_string() const {
    std::string out = scalar_.to_factored_string();
    if (!nilpotent_.is_zero()) out += " + " + nilpotent_.to_string();
    return out;
}

EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b) {
    return EquivariantClass(a.scalar_ + b.scalar_, a.nilpotent_ + b.nilpotent_);
}

EquivariantClass operator*(const EquivariantClass& a, const EquivariantClass& b) {
    return EquivariantClass(a.as_element() * b.as_element());
}

RationalFunction pow(const RationalFunction& base, unsigned exponent) {
    RationalFunction out(Rational(1), base.name());
    RationalFunction square = base;
    while (exponent > 0) {
        if (exponent & 1U) out *= square;
        exponent >>= 1U;
        if (exponent > 0) square *= square;
    }
    return out;
}

EquivariantClass equiv_pow(const EquivariantClass& x, unsigned p) {
    const Ring& ring = x.ring();
    NilpotentClass total = NilpotentClass::constant(ring, pow(x.scalar(), p));
    NilpotentClass npow = NilpotentClass::constant(ring, RationalFunction(Rational(1)));
    const unsigned jmax = std::min<unsigned>(p, static_cast<unsigned>(ring->dimension()));
    for (unsigned j = 1; j <= jmax; ++j) {
        npow = npow * x.nilpotent();
        if (npow.is_zero()) break;
        total += npow * (RationalFunction(binomial(p, j)) * pow(x.scalar(), p - j));
    }
    return EquivariantClass(total);
}

EquivariantClass invert_unit(const EquivariantClass& x) {
    if (x.scalar().is_zero())
        throw DegenerateError("degenerate fixed-point datum: equivariant class " + x.to_string() +
                              " has zero scalar part");
    const Ring& ring = x.ring();
    const RationalFunction inv = RationalFunction(Rational(1)) / x.scalar();
    const NilpotentClass step = x.nilpotent() * (-inv);
    NilpotentClass term = NilpotentClass::constant(ring, RationalFunction(Rational(1)));
    NilpotentClass series = term;
    for (int j = 1; j <= ring->dimension(); ++j) {
        term = term * step;
        if (term.is_zero()) break;
        series += term;
    }
    return EquivariantClass(series * inv);
}

RationalFunction integrate(const EquivariantClass& x) { return x.as_element().coefficient(x.ring()->top()); }

}  // namespace futaki
