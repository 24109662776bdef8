#pragma once

#include "futaki/rational_function.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace futaki {

/// One generator of a truncated polynomial algebra: name^order = 0.
struct Generator {
    std::string name;
    int order = 1;   // nilpotency order, >= 1
    int degree = 2;  // real degree, even, >= 2

    friend bool operator==(const Generator&, const Generator&) = default;
};

using Exponents = std::vector<int>;

/// Truncated graded ring Q(c)[x_1..x_r]/(x_i^{order_i}) modelling the
/// cohomology of one fixed component. `top` is the monomial dual to the
/// fundamental class and `dimension` the component's complex dimension.
class RingSpec {
public:
    /// ring_create: validates the generator data and top monomial.
    static std::shared_ptr<const RingSpec> create(std::vector<Generator> generators, Exponents top,
                                                  int dimension);
    /// Q(c) itself: no generators, dimension 0.
    static std::shared_ptr<const RingSpec> point();

    const std::vector<Generator>& generators() const { return generators_; }
    const Exponents& top() const { return top_; }
    int dimension() const { return dimension_; }
    std::size_t rank() const { return generators_.size(); }

    int complex_degree(const Exponents& e) const;
    /// False when the monomial is zero in the quotient (order bound or above top degree).
    bool survives(const Exponents& e) const;
    Exponents unit_exponents() const { return Exponents(generators_.size(), 0); }

    /// "a*b^2", "ab^2" (single-letter names only), or "1" for the unit monomial.
    Exponents parse_monomial(std::string_view text) const;
    std::string monomial_to_string(const Exponents& e) const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec() = default;

    std::vector<Generator> generators_;
    Exponents top_;
    int dimension_ = 0;
};

using Ring = std::shared_ptr<const RingSpec>;

bool same_ring(const Ring& a, const Ring& b);

/// Element of a truncated ring with rational-function coefficients. Only
/// surviving monomials with nonzero coefficients are stored, ordered
/// lexicographically by exponent vector.
class NilpotentClass {
public:
    explicit NilpotentClass(Ring ring);

    static NilpotentClass constant(Ring ring, const RationalFunction& value);
    static NilpotentClass generator(Ring ring, std::size_t index);

    const Ring& ring() const { return ring_; }
    const std::map<Exponents, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RationalFunction coefficient(const Exponents& e) const;

    /// Adds c * monomial; truncated monomials are dropped.
    void add_term(const Exponents& e, const RationalFunction& c);

    std::string to_string() const;

    NilpotentClass& operator+=(const NilpotentClass& rhs);
    NilpotentClass& operator-=(const NilpotentClass& rhs);
    NilpotentClass& operator*=(const RationalFunction& rhs);
    friend NilpotentClass operator+(NilpotentClass a, const NilpotentClass& b) { return a += b; }
    friend NilpotentClass operator-(NilpotentClass a, const NilpotentClass& b) { return a -= b; }
    friend NilpotentClass operator*(NilpotentClass a, const RationalFunction& b) { return a *= b; }
    friend NilpotentClass operator*(const NilpotentClass& a, const NilpotentClass& b);

    friend bool operator==(const NilpotentClass& a, const NilpotentClass& b);

private:
    Ring ring_;
    std::map<Exponents, RationalFunction> terms_;
};

/// class_mul: product in the quotient ring. Throws UsageError on mismatched rings.
NilpotentClass class_mul(const NilpotentClass& x, const NilpotentClass& y);

/// Degree-0 scalar plus positive-degree part; the unit monomial of
/// `nilpotent` is always empty (it is folded into `scalar` on construction).
class EquivariantClass {
public:
    EquivariantClass(RationalFunction scalar, NilpotentClass nilpotent);
    explicit EquivariantClass(const NilpotentClass& element);

    static EquivariantClass one(Ring ring);

    const RationalFunction& scalar() const { return scalar_; }
    const NilpotentClass& nilpotent() const { return nilpotent_; }
    const Ring& ring() const { return nilpotent_.ring(); }

    /// scalar + nilpotent as a single ring element.
    NilpotentClass as_element() const;
    EquivariantClass with_scalar(RationalFunction scalar) const;

    std::string to_string() const;

    friend EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b);
    friend EquivariantClass operator*(const EquivariantClass& a, const EquivariantClass& b);
    friend bool operator==(const EquivariantClass& a, const EquivariantClass& b) {
        return a.scalar_ == b.scalar_ && a.nilpotent_ == b.nilpotent_;
    }

private:
    RationalFunction scalar_;
    NilpotentClass nilpotent_;
};

/// Binomial expansion of (s + n)^p, truncated by the ring.
EquivariantClass equiv_pow(const EquivariantClass& x, unsigned p);

/// s^{-1} * sum_{j=0}^{dim} (-n/s)^j. Throws DegenerateError when s = 0.
EquivariantClass invert_unit(const EquivariantClass& x);

/// Coefficient of the ring's top monomial (the scalar when the ring is a point).
RationalFunction integrate(const EquivariantClass& x);

RationalFunction pow(const RationalFunction& base, unsigned exponent);

}  // namespace futaki
