// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any primary criterion fails.

#include "generators.hpp"

#include "futaki/analysis.hpp"
#include "futaki/cli.hpp"
#include "futaki/error.hpp"
#include "futaki/localization.hpp"
#include "futaki/poly_algo.hpp"
#include "futaki/scenario.hpp"
#include "futaki/toric.hpp"

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace futaki;
using futaki::testing::rng;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Verdict()>& body, bool primary = true) {
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass && primary) ++failures;
    std::printf("[%s] %-4s %s%s%s\n", v.pass ? "PASS" : "FAIL", id, title, primary ? "" : " (supplementary)",
                v.detail.empty() ? "" : (" -- " + v.detail).c_str());
}

RationalFunction poly(const char* text) { return RationalFunction(ParamPoly::parse(text)); }

const std::vector<Rational> kSamples{Rational(5, 16), Rational(3, 8), Rational(1, 2), Rational(5, 8),
                                     Rational(11, 16)};

Interval domain(const LocalizationScenario& s) { return {s.parameter->lower, s.parameter->upper}; }

Verdict oracle_equality(const char* name, const Rational& expected_volume) {
    Verdict v;
    const auto f = load_catalog(name);
    const auto& t = *f.toric;
    const auto rec = cross_validate(f.scenario, t.polytopes, t.direction, kSamples);
    for (const auto& s : rec.samples) {
        std::ostringstream msg;
        msg << "at c = " << s.x << ": localized " << s.localized << ", toric " << s.toric;
        v.require(s.equal, msg.str());
        for (std::size_t a = 0; a < s.volumes.size(); ++a) {
            std::ostringstream vm;
            vm << "at c = " << s.x << ": volume " << a + 1 << " localized/m! " << s.volumes[a].localized << ", toric "
               << s.volumes[a].toric;
            v.require(s.volumes[a].equal, vm.str());
        }
    }
    const Rational vol = volume(realize(t.polytopes[0], Rational(1, 2)));
    std::ostringstream vm;
    vm << "volume(P(1/2)) = " << vol << ", expected " << expected_volume;
    v.require(vol == expected_volume, vm.str());
    return v;
}

Verdict fut_directions(const std::vector<IntVector>& dirs) {
    Verdict v;
    const auto f = load_catalog("hultgren-c");
    for (const auto& d : dirs)
        for (const auto& x : kSamples) {
            const Rational val = fut_toric(f.toric->polytopes, d, x);
            std::ostringstream msg;
            msg << "direction (";
            for (std::size_t i = 0; i < d.size(); ++i) msg << (i ? "," : "") << d[i];
            msg << ") at c = " << x << " gives " << val;
            v.require(val.is_zero(), msg.str());
        }
    return v;
}

Verdict shift_property(const char* name) {
    Verdict v;
    const auto s = load_catalog(name).scenario;
    const auto base = fut_localized(s);
    const auto k = static_cast<std::size_t>(s.bundle_count);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rational> shifts(k);
        Rational total;
        for (std::size_t a = 0; a + 1 < k; ++a) {
            shifts[a] = futaki::testing::random_rational();
            total += shifts[a];
        }
        shifts[k - 1] = -total;
        const auto zero_sum = fut_localized(shift_hamiltonians(s, shifts));
        v.require(zero_sum == base, "zero-sum shift changed Fut to " + zero_sum.to_factored_string());

        shifts[k - 1] += futaki::testing::random_nonzero_rational();
        Rational t;
        for (const auto& x : shifts) t += x;
        const auto moved = fut_localized(shift_hamiltonians(s, shifts));
        std::ostringstream msg;
        msg << "shift with total " << t << " moved Fut by " << (moved - base).to_factored_string();
        v.require(moved == base + RationalFunction(t), msg.str());
    }
    return v;
}

bool sturm_certificate_holds(const ParamPoly& p, const RootReport& r) {
    const auto seq = sturm_sequence(square_free_part(p));
    const bool hi_root = p.eval(r.domain.upper).is_zero();
    if (r.sturm_certificate != sturm_count(seq, r.domain.lower, r.domain.upper) - (hi_root ? 1 : 0)) return false;
    if (static_cast<int>(r.roots.size()) != r.sturm_certificate) return false;
    for (const auto& root : r.roots) {
        const auto& iv = root.interval;
        if (!(iv.lower < iv.upper) || iv.upper - iv.lower > r.width) return false;
        if (sturm_count(seq, iv.lower, iv.upper) != 1) return false;
        if (root.closed_form && !eval_at(p, *root.closed_form).is_zero()) return false;
    }
    return true;
}

}  // namespace

int main() {
    report("1", "localized volumes 112c-6 and 106-112c", [] {
        Verdict v;
        const auto out = cli::build_report(load_catalog("hultgren-c"), {});
        v.require(out.volumes.size() == 2, "expected two volumes");
        v.require(out.volumes[0] == poly("112c-6"), "bundle 1: " + out.volumes[0].to_string());
        v.require(out.volumes[1] == poly("106-112c"), "bundle 2: " + out.volumes[1].to_string());
        return v;
    });

    report("2", "localized numerators -30c+12 and 30c-18", [] {
        Verdict v;
        const auto s = load_catalog("hultgren-c").scenario;
        const char* expected[] = {"-30c+12", "30c-18"};
        for (std::size_t a = 0; a < 2; ++a) {
            RationalFunction sum;
            for (const auto& comp : s.components) sum = sum + component_integral(comp, a, 5);
            v.require(sum == poly(expected[a]), "bundle " + std::to_string(a + 1) + ": " + sum.to_string());
        }
        return v;
    });

    report("3", "Fut closed form -3(112c^2-112c+23)/((56c-3)(56c-53)) with prefactor note", [] {
        Verdict v;
        const auto f = load_catalog("hultgren-c");
        const auto fut = fut_localized(f.scenario);
        const auto expected =
            RationalFunction::reduce(ParamPoly::parse("-336c^2+336c-69"), ParamPoly::parse("3136c^2-3136c+159"));
        v.require(fut == expected, "Fut = " + fut.to_factored_string());
        const auto display = RationalFunction::reduce(ParamPoly(Rational(-15)) * ParamPoly::parse("112c^2-112c+23"),
                                                      ParamPoly::parse("56c-3") * ParamPoly::parse("56c-53"));
        v.require(display == fut * RationalFunction(Rational(5)), "prefactor-free display is not 5 Fut");
        bool noted = false;
        for (const auto& n : cli::build_report(f, {}).notes) noted |= n.find("1/(m+1) = 1/5") != std::string::npos;
        v.require(noted, "prefactor note missing");
        return v;
    });

    report("4", "vanishing locus 1/2 -+ sqrt(35)/28, intervals of width <= 1e-12", [] {
        Verdict v;
        const auto s = load_catalog("hultgren-c").scenario;
        const auto r = fut_roots(fut_localized(s), domain(s));
        v.require(r.roots.size() == 2, std::to_string(r.roots.size()) + " roots");
        if (r.roots.size() != 2) return v;
        const QuadraticSurd expected[] = {QuadraticSurd::make(14, -1, 35, 28), QuadraticSurd::make(14, 1, 35, 28)};
        const char* brackets[][2] = {{"0.288711", "0.288712"}, {"0.711288", "0.711289"}};
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& root = r.roots[i];
            v.require(root.closed_form && *root.closed_form == expected[i],
                      "closed form " + (root.closed_form ? root.closed_form->to_string() : std::string("missing")));
            v.require(root.interval.upper - root.interval.lower <= Rational(1, 1000000000000LL), "interval too wide");
            v.require(expected[i].compare(root.interval.lower) > 0 && expected[i].compare(root.interval.upper) < 0,
                      "interval does not contain the closed form");
            v.require(Rational::parse(brackets[i][0]) < root.interval.lower &&
                          root.interval.upper < Rational::parse(brackets[i][1]),
                      "interval outside the decimal bracket");
        }
        v.require(r.sturm_certificate == 2, "Sturm count " + std::to_string(r.sturm_certificate));
        return v;
    });

    report("5", "oracle equality on hultgren-c at the five samples, volume(P(1/2)) = 25/12",
           [] { return oracle_equality("hultgren-c", Rational(25, 12)); });
    report("5b", "oracle equality on hultgren-c-lattice, Euclidean volume(P(1/2)) = 25/24",
           [] { return oracle_equality("hultgren-c-lattice", Rational(25, 24)); }, false);

    report("6", "fut_toric vanishes in directions e1, e2, e3",
           [] { return fut_directions({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}); });
    report("6b", "fut_toric vanishes in directions (3,0,0,-1), (0,3,0,-1), (0,0,2,1)",
           [] { return fut_directions({{3, 0, 0, -1}, {0, 3, 0, -1}, {0, 0, 2, 1}}); }, false);

    report("7", "Minkowski check P(c) + P(1-c) = P(-K) at the five samples", [] {
        Verdict v;
        const auto f = load_catalog("hultgren-c");
        for (const auto& x : kSamples) {
            const auto r = minkowski_check(f.toric->polytopes, *f.toric->whole, x);
            v.require(r.status == MinkowskiStatus::pass, r.diagnostics);
        }
        return v;
    });

    report("8", "shift invariance and covariance on hultgren-c (20 + 20 random shifts)",
           [] { return shift_property("hultgren-c"); });
    report("8b", "shift invariance and covariance on hultgren-c-lattice (20 + 20 random shifts)",
           [] { return shift_property("hultgren-c-lattice"); }, false);

    report("9", "sanity: fut_isolated(cp1) = 0, fut_localized(cp1-coupled) = 0, volume_localized(cp1) = 2", [] {
        Verdict v;
        const auto cp1 = load_catalog("cp1").scenario;
        v.require(fut_isolated(isolated_points(cp1), cp1.dimension).is_zero(), "fut_isolated(cp1) != 0");
        v.require(fut_localized(load_catalog("cp1-coupled").scenario).is_zero(), "fut_localized(cp1-coupled) != 0");
        v.require(volume_localized(cp1, 0) == RationalFunction(Rational(2)), "volume_localized(cp1) != 2");
        return v;
    });

    report("10", "negative control hultgren-c-corrupt is rejected", [] {
        Verdict v;
        const auto f = load_catalog("hultgren-c-corrupt");
        cli::RunOptions opts;
        opts.sample_points = kSamples;
        const int code = cli::run(cli::Command::verify, f, opts).exit_code;
        const auto check = validate_scenario(f.scenario);
        bool flagged = false;
        for (const auto& e : check.errors) flagged |= e.find("inconsistent residue data") != std::string::npos;
        v.require(code == 5 || flagged, "verify exit " + std::to_string(code) + " and no residue diagnostic");
        return v;
    });

    report("11", "algebra property suites (>= 100 random instances each)", [] {
        Verdict v;
        const Ring r = futaki::testing::p1xp2();
        for (int i = 0; i < 100; ++i) {
            const auto x = futaki::testing::random_class(r), y = futaki::testing::random_class(r),
                       z = futaki::testing::random_class(r);
            v.require((x * y) * z == x * (y * z), "associativity");
            v.require(x * y == y * x, "commutativity");
            v.require(x * (y + z) == x * y + x * z, "distributivity");
            const EquivariantClass ex(x), ey(y);
            v.require(integrate(ex + ey) == integrate(ex) + integrate(ey), "integrate linearity");
        }
        int units = 0;
        while (units < 100) {
            const RationalFunction s(futaki::testing::random_poly(1, 5));
            if (s.is_zero()) continue;
            const EquivariantClass x(s, futaki::testing::random_class(r, false));
            v.require(x * invert_unit(x) == EquivariantClass::one(r), "invert_unit product identity");
            const unsigned p = static_cast<unsigned>(units % 4), q = static_cast<unsigned>(units % 3);
            v.require(equiv_pow(x, p + q) == equiv_pow(x, p) * equiv_pow(x, q), "equiv_pow additivity");
            ++units;
        }
        std::uniform_int_distribution<std::size_t> dim(2, 4);
        for (int i = 0; i < 100; ++i) {
            const auto q = futaki::testing::random_polytope(dim(rng()));
            const auto ref = integrate_polytope(q, std::nullopt, Execution::serial);
            std::uniform_int_distribution<std::size_t> pick(0, q.vertices.size() - 1);
            const auto other = integrate_polytope(q, pick(rng()), Execution::serial);
            const auto par = integrate_polytope(q, std::nullopt, Execution::parallel);
            v.require(other.volume == ref.volume && other.first_moment == ref.first_moment,
                      "triangulation independence");
            v.require(par.volume == ref.volume && par.first_moment == ref.first_moment, "serial/parallel agreement");
        }
        int polys = 0;
        while (polys < 100) {
            const ParamPoly p = futaki::testing::random_nonzero_poly(5);
            if (p.is_constant()) continue;
            const auto rep = isolate_roots(p, {Rational(-4), Rational(5, 2)}, Rational(1, 100000));
            v.require(sturm_certificate_holds(p, rep), "Sturm certificate for " + p.to_string());
            ++polys;
        }
        return v;
    });

    std::printf("%s: %d primary criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
