#include "futaki/poly_algo.hpp"

#include "futaki/error.hpp"

#include <algorithm>

namespace futaki {

std::vector<SquareFreeFactor> square_free_decomposition(const ParamPoly& p) {
    if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
    std::vector<SquareFreeFactor> out;
    if (p.is_constant()) return out;

    const ParamPoly f = p.monic();
    ParamPoly a = gcd(f, f.derivative());
    ParamPoly b = exact_div(f, a);
    ParamPoly c = exact_div(f.derivative(), a);
    ParamPoly d = c - b.derivative();
    int i = 1;
    while (!b.is_constant()) {
        a = gcd(b, d);
        if (!a.is_constant()) out.push_back({a, i});
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

ParamPoly square_free_part(const ParamPoly& p) {
    if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
    ParamPoly out(Rational(1), p.name());
    for (const auto& f : square_free_decomposition(p)) out *= f.factor;
    return out.with_name(p.name());
}

std::vector<ParamPoly> sturm_sequence(const ParamPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
    std::vector<ParamPoly> seq{p};
    if (p.is_constant()) return seq;
    seq.push_back(p.derivative());
    while (!seq.back().is_zero()) {
        ParamPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps the sign pattern and bounds coefficient growth.
        const Rational lc = r.leading().abs();
        seq.push_back(r * lc.inverse());
    }
    return seq;
}

int sign_variations(const std::vector<ParamPoly>& sequence, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& q : sequence) {
        const int s = q.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int sturm_count(const std::vector<ParamPoly>& sequence, const Rational& lo, const Rational& hi) {
    if (hi < lo) return 0;
    return sign_variations(sequence, lo) - sign_variations(sequence, hi);
}

Rational cauchy_bound(const ParamPoly& p) {
    if (p.degree() < 1) return Rational(1);
    const Rational lead = p.leading().abs();
    Rational worst;
    for (int i = 0; i < p.degree(); ++i) {
        const Rational ratio = p.coefficient(static_cast<std::size_t>(i)).abs() / lead;
        if (ratio > worst) worst = ratio;
    }
    return worst + Rational(1);
}

PrimitiveForm primitive_form(const ParamPoly& p) {
    if (p.is_zero()) return {Rational(0), p};
    mpz_class lcm_den = 1;
    for (const auto& c : p.coefficients()) lcm_den = lcm(lcm_den, c.denominator());
    mpz_class g = 0;
    for (const auto& c : p.coefficients()) g = ::gcd(g, mpz_class(c.numerator() * (lcm_den / c.denominator())));
    Rational content(g, lcm_den);
    if (p.leading().sign() < 0) content = -content;
    return {content, p * content.inverse()};
}

namespace {

constexpr long kTrialDivisionCap = 2'000'000;

// Positive divisors of |n|; empty when n has a prime factor beyond the cap.
std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) return {};
    std::vector<std::pair<mpz_class, int>> primes;
    for (long q = 2; q <= kTrialDivisionCap && mpz_class(q) * q <= n; ++q) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e > 0) primes.emplace_back(q, e);
    }
    if (n > 1) {
        if (n > mpz_class(kTrialDivisionCap) * kTrialDivisionCap) return {};
        primes.emplace_back(n, 1);
    }
    std::vector<mpz_class> out{1};
    for (const auto& [prime, e] : primes) {
        const std::size_t base = out.size();
        mpz_class power = 1;
        for (int k = 1; k <= e; ++k) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const ParamPoly& p) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    if (p.is_constant()) return roots;

    ParamPoly q = primitive_form(p).primitive;
    if (q.coefficient(0).is_zero()) {
        roots.emplace_back(0);
        std::size_t shift = 0;
        while (q.coefficient(shift).is_zero()) ++shift;
        q = ParamPoly(std::vector<Rational>(q.coefficients().begin() + static_cast<std::ptrdiff_t>(shift),
                                            q.coefficients().end()),
                      q.name());
    }
    if (!q.is_constant()) {
        const auto num_divs = divisors(q.coefficient(0).numerator());
        const auto den_divs = divisors(q.leading().numerator());
        for (const auto& n : num_divs)
            for (const auto& d : den_divs)
                for (int s : {1, -1}) {
                    const Rational x(mpz_class(s * n), d);
                    if (q.eval(x).is_zero()) roots.push_back(x);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

IntegerFactorization factor_over_q(const ParamPoly& p) {
    if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
    IntegerFactorization out;
    for (const auto& sf : square_free_decomposition(p)) {
        ParamPoly rest = sf.factor;
        for (const auto& r : rational_roots(sf.factor)) {
            const ParamPoly lin = ParamPoly::variable(p.name()) - ParamPoly(r, p.name());
            rest = exact_div(rest, lin);
            out.factors.push_back({primitive_form(lin).primitive, sf.multiplicity});
        }
        if (!rest.is_constant()) out.factors.push_back({primitive_form(rest).primitive, sf.multiplicity});
    }
    ParamPoly product(Rational(1), p.name());
    for (const auto& f : out.factors)
        for (int i = 0; i < f.multiplicity; ++i) product *= f.factor;
    out.unit = p.leading() / product.leading();

    // Linear factors ascending by root, then higher-degree factors.
    auto key_root = [](const ParamPoly& f) { return -f.coefficient(0) / f.coefficient(1); };
    std::sort(out.factors.begin(), out.factors.end(), [&](const IntegerFactor& a, const IntegerFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        if (a.factor.degree() == 1) return key_root(a.factor) < key_root(b.factor);
        return a.factor.coefficients() < b.factor.coefficients();
    });
    return out;
}

}  // namespace futaki
