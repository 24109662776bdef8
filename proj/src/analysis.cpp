#include "futaki/analysis.hpp"

#include "futaki/error.hpp"
#include "futaki/poly_algo.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace futaki {

namespace {

constexpr unsigned long kSquareTrialCap = 1000000;

mpz_class gcd3(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::string coefficient_times_root(const Rational& c, const mpz_class& d) {
    const std::string root = "sqrt(" + d.get_str() + ")";
    const mpz_class n = c.numerator();
    const mpz_class m = c.denominator();
    std::string s = n == 1 ? root : n.get_str() + "*" + root;
    if (m != 1) s += "/" + m.get_str();
    return s;
}

int sign_at(const ParamPoly& p, const Rational& x) { return p.eval(x).sign(); }

// Point strictly between a and b at which p does not vanish.
Rational regular_split(const ParamPoly& p, const Rational& a, const Rational& b) {
    for (std::int64_t den = 2;; ++den) {
        for (std::int64_t num = den / 2; num >= 1; --num) {
            for (std::int64_t k : {num, den - num}) {
                const Rational m = a + (b - a) * Rational(k, den);
                if (!p.eval(m).is_zero()) return m;
            }
        }
    }
}

// Intervals (a, b], each holding one root of the square-free s, with s(a), s(b) nonzero.
void isolate(const ParamPoly& s, const std::vector<ParamPoly>& seq, Rational a, Rational b, const Rational& width,
             std::vector<Interval>& out) {
    const int n = sturm_count(seq, a, b);
    if (n == 0) return;
    if (n > 1) {
        const Rational m = regular_split(s, a, b);
        isolate(s, seq, a, m, width, out);
        isolate(s, seq, m, b, width, out);
        return;
    }
    const int sa = sign_at(s, a);
    while (b - a > width) {
        const Rational m = regular_split(s, a, b);
        if (sign_at(s, m) == sa)
            a = m;
        else
            b = m;
    }
    out.push_back({a, b});
}

bool changes_sign(const ParamPoly& f, const Interval& iv) {
    return sign_at(f, iv.lower) * sign_at(f, iv.upper) < 0;
}

std::optional<QuadraticSurd> closed_form_in(const ParamPoly& f, const Interval& iv) {
    if (f.degree() == 1) return QuadraticSurd::rational(-f.coefficient(0) / f.coefficient(1));
    if (f.degree() != 2) return std::nullopt;
    const mpz_class a = f.coefficient(2).numerator();
    const mpz_class b = f.coefficient(1).numerator();
    const mpz_class c = f.coefficient(0).numerator();
    const mpz_class disc = b * b - 4 * a * c;
    if (disc < 0) return std::nullopt;
    for (int sign : {-1, 1}) {
        auto r = QuadraticSurd::make(-b, mpz_class(sign), disc, 2 * a);
        if (r.compare(iv.lower) > 0 && r.compare(iv.upper) < 0) return r;
    }
    return std::nullopt;
}

std::string describe(const IsolatedRoot& r) {
    if (r.closed_form) return r.closed_form->to_string();
    std::ostringstream os;
    os << "(" << r.interval.lower << ", " << r.interval.upper << ")";
    return os.str();
}

}  // namespace

QuadraticSurd QuadraticSurd::rational(const Rational& x) {
    QuadraticSurd s;
    s.p = x.numerator();
    s.q = 0;
    s.d = 1;
    s.r = x.denominator();
    return s;
}

QuadraticSurd QuadraticSurd::make(mpz_class p, mpz_class q, mpz_class disc, mpz_class r) {
    if (r == 0) throw DomainError("quadratic surd with zero denominator");
    if (disc < 0) throw DomainError("quadratic surd of a negative number");
    mpz_class outside = 1;
    if (disc == 0) {
        q = 0;
        disc = 1;
    }
    for (unsigned long k = 2; k <= kSquareTrialCap && mpz_class(k) * k <= disc; ++k) {
        const mpz_class kk = mpz_class(k) * k;
        while (disc % kk == 0) {
            disc /= kk;
            outside *= k;
        }
    }
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
        outside *= root;
        disc = 1;
    }
    q *= outside;
    if (disc == 1) {
        p += q;
        q = 0;
    }
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    const mpz_class g = gcd3(p, q, r);
    QuadraticSurd s;
    s.p = p / g;
    s.q = q / g;
    s.d = s.q == 0 ? mpz_class(1) : disc;
    s.r = r / g;
    return s;
}

Rational QuadraticSurd::rational_part() const { return Rational(p, r); }

Rational QuadraticSurd::surd_coefficient() const { return Rational(q, r); }

int QuadraticSurd::compare(const Rational& x) const {
    const Rational a = Rational(p, 1) - x * Rational(r, 1);
    const int sa = a.sign();
    const int sb = sgn(q);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = a * a;
    const Rational rhs = Rational(q * q * d, 1);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

double QuadraticSurd::to_double() const {
    mpf_class root(d, 256);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    mpf_class v = (mpf_class(p, 256) + mpf_class(q, 256) * root) / mpf_class(r, 256);
    return v.get_d();
}

std::string QuadraticSurd::to_string() const {
    const Rational rat = rational_part();
    if (is_rational()) return rat.to_string();
    const Rational coef = surd_coefficient();
    const std::string tail = coefficient_times_root(coef.abs(), d);
    if (rat.is_zero()) return (coef.sign() < 0 ? "-" : "") + tail;
    return rat.to_string() + (coef.sign() < 0 ? "-" : "+") + tail;
}

SurdValue eval_at(const ParamPoly& p, const QuadraticSurd& x) {
    const Rational xa = x.rational_part();
    const Rational xb = x.surd_coefficient();
    const Rational d(x.d, 1);
    SurdValue v;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational a = v.a * xa + v.b * xb * d;
        const Rational b = v.a * xb + v.b * xa;
        v.a = a + p.coefficient(static_cast<std::size_t>(i));
        v.b = b;
    }
    return v;
}

Rational default_root_width() {
    static const Rational w(mpz_class(1), mpz_class("1000000000000"));
    return w;
}

RootReport isolate_roots(const ParamPoly& p, const Interval& domain, const Rational& width) {
    if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
    if (!(domain.lower < domain.upper)) throw UsageError("root interval is empty");
    if (width.sign() <= 0) throw UsageError("root width must be positive");

    RootReport report;
    report.domain = domain;
    report.width = width;
    if (p.is_constant()) return report;

    const ParamPoly s = square_free_part(p);
    const auto seq = sturm_sequence(s);
    const Rational& lo = domain.lower;
    const Rational& hi = domain.upper;
    const bool hi_root = s.eval(hi).is_zero();
    report.sturm_certificate = sturm_count(seq, lo, hi) - (hi_root ? 1 : 0);
    if (report.sturm_certificate == 0) return report;

    // Pull the endpoints inward past any root sitting exactly on them.
    Rational a = lo;
    Rational b = hi;
    if (s.eval(lo).is_zero()) {
        Rational step = (hi - lo) / Rational(2);
        while (sturm_count(seq, lo, lo + step) != 0) step /= Rational(2);
        a = lo + step;
    }
    if (hi_root) {
        Rational step = (hi - a) / Rational(2);
        while (sturm_count(seq, hi - step, hi) != 1 || s.eval(hi - step).is_zero()) step /= Rational(2);
        b = hi - step;
    }

    std::vector<Interval> intervals;
    isolate(s, seq, a, b, width, intervals);

    const auto blocks = square_free_decomposition(p);
    const auto factors = factor_over_q(p).factors;
    for (const auto& iv : intervals) {
        IsolatedRoot root;
        root.interval = iv;
        for (const auto& blk : blocks)
            if (changes_sign(blk.factor, iv)) root.multiplicity = blk.multiplicity;
        for (const auto& f : factors) {
            if (!changes_sign(f.factor, iv)) continue;
            root.factor = f.factor;
            root.closed_form = closed_form_in(f.factor, iv);
        }
        report.roots.push_back(std::move(root));
    }
    return report;
}

RootReport fut_roots(const RationalFunction& f, const Interval& domain, const Rational& width) {
    auto report = isolate_roots(f.num(), domain, width);
    const ParamPoly& den = f.den();
    if (den.is_constant()) return report;

    const Rational bound = cauchy_bound(den);
    auto poles = isolate_roots(den, Interval{-bound, bound}, width);
    const ParamPoly s = square_free_part(den);
    const auto seq = sturm_sequence(s);
    for (auto& pole : poles.roots) {
        const Rational a = std::max(pole.interval.lower, domain.lower);
        const Rational b = std::min(pole.interval.upper, domain.upper);
        const bool on_upper = s.eval(domain.upper).is_zero() && pole.interval.lower < domain.upper &&
                              domain.upper < pole.interval.upper;
        const bool inside = a < b && sturm_count(seq, a, b) == 1 && !on_upper;
        report.diagnostics.push_back("pole at " + describe(pole) + (inside ? " (inside" : " (outside") +
                                     " the interval)");
        report.poles.push_back(std::move(pole));
        report.pole_inside.push_back(inside);
    }
    return report;
}

bool ValidationRecord::all_equal() const {
    return std::all_of(samples.begin(), samples.end(), [](const SampleCheck& s) {
        return s.equal && std::all_of(s.volumes.begin(), s.volumes.end(), [](const VolumeCheck& v) { return v.equal; });
    });
}

ValidationRecord cross_validate(const LocalizationScenario& scenario, std::span<const ParamPolytope> polytopes,
                                std::span<const std::int64_t> direction, std::vector<Rational> samples,
                                Execution exec) {
    if (polytopes.size() != static_cast<std::size_t>(scenario.bundle_count))
        throw UsageError("cross_validate: expected " + std::to_string(scenario.bundle_count) + " polytopes, got " +
                         std::to_string(polytopes.size()));
    for (const auto& p : polytopes) {
        if (p.dimension != static_cast<std::size_t>(scenario.dimension))
            throw UsageError("cross_validate: polytope dimension differs from the manifold dimension");
        if (direction.size() != p.dimension) throw UsageError("cross_validate: direction has wrong length");
    }
    const std::string name = scenario.parameter ? scenario.parameter->name : "x";
    if (samples.empty()) {
        if (scenario.parameter) throw UsageError("cross_validate: no samples");
        samples.emplace_back(0);
    }
    if (scenario.parameter)
        for (const auto& x : samples)
            if (!scenario.parameter->contains(x))
                throw ValidationError("sample " + name + " = " + x.to_string() + " is outside the validity interval");

    const RationalFunction fut = fut_localized(scenario);
    std::vector<RationalFunction> volumes;
    for (std::size_t a = 0; a < polytopes.size(); ++a) volumes.push_back(volume_localized(scenario, a));
    const Rational inv_fact = factorial(static_cast<unsigned>(scenario.dimension)).inverse();

    ValidationRecord record;
    record.direction.assign(direction.begin(), direction.end());
    record.samples.resize(samples.size());
    std::vector<std::exception_ptr> errors(samples.size());

    auto check = [&](std::size_t i, Execution inner) {
        const Rational& x = samples[i];
        const std::string where = "at " + name + " = " + x.to_string() + ": ";
        try {
            SampleCheck sc;
            sc.x = x;
            sc.localized = fut.eval(x);
            for (std::size_t a = 0; a < polytopes.size(); ++a) {
                const auto q = realize(polytopes[a], x, inner);
                const auto in = integrate_polytope(q, std::nullopt, inner);
                Rational m;
                for (std::size_t j = 0; j < direction.size(); ++j) m += in.first_moment[j] * Rational(direction[j]);
                sc.toric += m / in.volume;
                VolumeCheck vc;
                vc.localized = volumes[a].eval(x) * inv_fact;
                vc.toric = in.volume;
                vc.equal = vc.localized == vc.toric;
                sc.volumes.push_back(vc);
            }
            sc.equal = sc.localized == sc.toric;
            record.samples[i] = std::move(sc);
        } catch (const PoleError& e) {
            errors[i] = std::make_exception_ptr(PoleError(where + e.what()));
        } catch (const GeometryError& e) {
            errors[i] = std::make_exception_ptr(GeometryError(where + e.what()));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    const auto count = static_cast<std::ptrdiff_t>(samples.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < count; ++i) check(static_cast<std::size_t>(i), Execution::serial);
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) check(static_cast<std::size_t>(i), Execution::serial);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return record;
}

std::vector<Rational> equispaced(const Interval& domain, std::size_t count) {
    std::vector<Rational> xs;
    const Rational width = domain.upper - domain.lower;
    const auto n = static_cast<std::int64_t>(count) + 1;
    for (std::int64_t i = 1; i < n; ++i) xs.push_back(domain.lower + width * Rational(i, n));
    return xs;
}

std::vector<CurvePoint> sample_curve(const RationalFunction& f, const Interval& domain, std::size_t count) {
    if (count < 2) throw UsageError("sample count must be at least 2");
    if (!(domain.lower < domain.upper)) throw UsageError("sample interval is empty");
    std::vector<CurvePoint> out;
    for (const auto& x : equispaced(domain, count)) {
        CurvePoint pt;
        pt.x = x;
        if (f.den().eval(x).is_zero())
            pt.pole = true;
        else
            pt.y = f.eval(x);
        out.push_back(std::move(pt));
    }
    if (f.den().is_constant()) return out;

    const ParamPoly s = square_free_part(f.den());
    const auto seq = sturm_sequence(s);
    // Poles in the open gap (u, v).
    auto pole_between = [&](const Rational& u, const Rational& v) {
        return sturm_count(seq, u, v) - (s.eval(v).is_zero() ? 1 : 0) > 0;
    };
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Rational& left = i == 0 ? domain.lower : out[i - 1].x;
        const Rational& right = i + 1 == out.size() ? domain.upper : out[i + 1].x;
        out[i].near_pole = pole_between(left, out[i].x) || pole_between(out[i].x, right) ||
                           (i > 0 && out[i - 1].pole) || (i + 1 < out.size() && out[i + 1].pole);
    }
    return out;
}

}  // namespace futaki
