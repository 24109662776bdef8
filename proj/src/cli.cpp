#include "futaki/cli.hpp"

#include "futaki/poly_algo.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace futaki::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string approx(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string approx(const IsolatedRoot& r) {
    if (r.closed_form) return approx(r.closed_form->to_double());
    return approx(((r.interval.lower + r.interval.upper) / Rational(2)).to_double());
}

std::string bundle_name(std::size_t alpha) { return "bundle " + std::to_string(alpha + 1); }

std::string param_name(const ScenarioFile& file) {
    return file.scenario.parameter ? file.scenario.parameter->name : "c";
}

std::string interval_text(const Interval& iv) {
    return "(" + iv.lower.to_string() + ", " + iv.upper.to_string() + ")";
}

Json ratfun_json(const RationalFunction& f) {
    return Json{{"expanded", f.to_string()},
                {"factored", f.to_factored_string()},
                {"numerator", f.num().to_string()},
                {"denominator", f.den().to_string()}};
}

Json root_json(const IsolatedRoot& r) {
    Json j;
    j["lower"] = r.interval.lower.to_string();
    j["upper"] = r.interval.upper.to_string();
    j["multiplicity"] = r.multiplicity;
    j["factor"] = r.factor.to_string();
    j["closed_form"] = r.closed_form ? Json(r.closed_form->to_string()) : Json(nullptr);
    return j;
}

Json roots_json(const RootReport& rr) {
    Json j;
    j["interval"] = {rr.domain.lower.to_string(), rr.domain.upper.to_string()};
    j["width"] = rr.width.to_string();
    j["sturm_certificate"] = rr.sturm_certificate;
    Json roots = Json::array();
    for (const auto& r : rr.roots) roots.push_back(root_json(r));
    j["roots"] = roots;
    Json poles = Json::array();
    for (std::size_t i = 0; i < rr.poles.size(); ++i) {
        Json p = root_json(rr.poles[i]);
        p["inside"] = static_cast<bool>(rr.pole_inside[i]);
        poles.push_back(p);
    }
    j["poles"] = poles;
    return j;
}

void roots_text(std::ostream& os, const RootReport& rr, const std::string& name) {
    os << "roots of Fut on " << interval_text(rr.domain) << ": " << rr.roots.size()
       << " (Sturm count " << rr.sturm_certificate << ")\n";
    for (const auto& r : rr.roots) {
        os << "  " << name << " = " << (r.closed_form ? r.closed_form->to_string() : std::string("?")) << "  ~ "
           << approx(r) << "  in " << interval_text(r.interval);
        if (r.multiplicity > 1) os << "  multiplicity " << r.multiplicity;
        os << "\n";
    }
    for (const auto& d : rr.diagnostics) os << "  " << d << "\n";
}

std::string roots_csv(const RootReport& rr) {
    std::string out = "closed_form,lower,upper,multiplicity\n";
    for (const auto& r : rr.roots)
        out += (r.closed_form ? r.closed_form->to_string() : std::string()) + "," + r.interval.lower.to_string() +
               "," + r.interval.upper.to_string() + "," + std::to_string(r.multiplicity) + "\n";
    return out;
}

Json validation_json(const ValidationRecord& rec) {
    Json j;
    j["direction"] = rec.direction;
    j["all_equal"] = rec.all_equal();
    Json samples = Json::array();
    for (const auto& s : rec.samples) {
        Json sj;
        sj["x"] = s.x.to_string();
        sj["localized"] = s.localized.to_string();
        sj["toric"] = s.toric.to_string();
        sj["equal"] = s.equal;
        Json vols = Json::array();
        for (const auto& v : s.volumes)
            vols.push_back(Json{{"localized", v.localized.to_string()}, {"toric", v.toric.to_string()}, {"equal", v.equal}});
        sj["volumes"] = vols;
        samples.push_back(sj);
    }
    j["samples"] = samples;
    return j;
}

void validation_text(std::ostream& os, const ValidationRecord& rec, const std::string& name) {
    os << "cross-validation (localized vs toric, exact):\n";
    for (const auto& s : rec.samples) {
        os << "  " << name << " = " << s.x << ": Fut " << s.localized << " vs " << s.toric << (s.equal ? "  equal" : "  DIFFERENT");
        for (std::size_t a = 0; a < s.volumes.size(); ++a)
            os << "; vol" << a + 1 << " " << s.volumes[a].localized << " vs " << s.volumes[a].toric
               << (s.volumes[a].equal ? "" : " DIFFERENT");
        os << "\n";
    }
    os << (rec.all_equal() ? "all samples agree\n" : "MISMATCH\n");
}

std::string validation_csv(const ValidationRecord& rec, const std::string& name) {
    std::string out = name + ",localized,toric,equal\n";
    for (const auto& s : rec.samples)
        out += s.x.to_string() + "," + s.localized.to_string() + "," + s.toric.to_string() + "," +
               (s.equal ? "true" : "false") + "\n";
    return out;
}

std::vector<Rational> sample_points(const ScenarioFile& file, const RunOptions& options) {
    if (options.sample_points) return *options.sample_points;
    if (!file.scenario.parameter) return {};
    const auto& p = *file.scenario.parameter;
    return equispaced(Interval{p.lower, p.upper}, options.sample_count);
}

Rational evaluation_point(const ScenarioFile& file, const RunOptions& options) {
    if (options.param_value) {
        if (file.scenario.parameter && !file.scenario.parameter->contains(*options.param_value))
            throw ValidationError("--param-value " + options.param_value->to_string() +
                                  " is outside the validity interval");
        return *options.param_value;
    }
    return file.scenario.parameter ? file.scenario.parameter->midpoint() : Rational(0);
}

const ToricBlock& toric_block(const ScenarioFile& file) {
    if (!file.toric) throw UsageError("scenario \"" + file.name + "\" has no toric block");
    return *file.toric;
}

IntVector direction_for(const ScenarioFile& file, const RunOptions& options) {
    const auto& t = toric_block(file);
    IntVector d = options.direction ? *options.direction : t.direction;
    if (d.size() != t.dimension)
        throw UsageError("direction has " + std::to_string(d.size()) + " entries; expected " + std::to_string(t.dimension));
    return d;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Output localize_output(const ScenarioFile& file, const RunOptions& options) {
    const auto report = build_report(file, options);
    const std::string name = param_name(file);
    Output out;

    std::ostringstream os;
    os << "scenario: " << report.scenario << "\n";
    os << "dimension m = " << report.dimension << ", bundles k = " << report.bundle_count;
    if (report.parameter)
        os << ", " << name << " in " << interval_text({report.parameter->lower, report.parameter->upper});
    os << "\n";
    for (std::size_t a = 0; a < report.volumes.size(); ++a)
        os << "volume (" << bundle_name(a) << ") = " << report.volumes[a].to_factored_string() << "  ["
           << report.volumes[a].to_string() << "]\n";
    for (std::size_t a = 0; a < report.numerators.size(); ++a)
        os << "numerator (" << bundle_name(a) << ") = " << report.numerators[a].to_factored_string() << "  ["
           << report.numerators[a].to_string() << "]\n";
    os << "Fut = " << report.fut.to_factored_string() << "\n";
    if (report.fut_value) os << "Fut(" << *options.param_value << ") = " << *report.fut_value << "\n";
    if (report.roots) roots_text(os, *report.roots, name);
    for (const auto& w : report.warnings) os << "warning: " << w << "\n";
    for (const auto& n : report.notes) os << "note: " << n << "\n";
    out.text = os.str();

    Json j;
    j["command"] = "localize";
    j["scenario"] = report.scenario;
    j["dimension"] = report.dimension;
    j["bundles"] = report.bundle_count;
    if (report.parameter)
        j["parameter"] = Json{{"name", report.parameter->name},
                              {"interval", {report.parameter->lower.to_string(), report.parameter->upper.to_string()}}};
    Json vols = Json::array();
    for (const auto& v : report.volumes) vols.push_back(ratfun_json(v));
    j["volumes"] = vols;
    Json nums = Json::array();
    for (const auto& v : report.numerators) nums.push_back(ratfun_json(v));
    j["numerators"] = nums;
    j["fut"] = ratfun_json(report.fut);
    if (report.fut_value) j["fut_value"] = {{"x", options.param_value->to_string()}, {"value", report.fut_value->to_string()}};
    if (report.roots) j["roots"] = roots_json(*report.roots);
    j["warnings"] = report.warnings;
    j["notes"] = report.notes;
    out.structured = dump(j);

    out.csv = name + ",fut\n";
    if (report.parameter)
        for (const auto& pt : sample_curve(report.fut, {report.parameter->lower, report.parameter->upper},
                                           std::max<std::size_t>(options.sample_count, 2)))
            if (pt.y) out.csv += pt.x.to_string() + "," + pt.y->to_string() + "\n";
    return out;
}

Output toric_output(const ScenarioFile& file, const RunOptions& options) {
    const auto& t = toric_block(file);
    const IntVector dir = direction_for(file, options);
    const Rational x = evaluation_point(file, options);
    const std::string name = param_name(file);
    Output out;
    std::ostringstream os;
    Json j;
    j["command"] = "toric";
    j["scenario"] = file.name;
    j["x"] = x.to_string();
    j["direction"] = dir;
    os << "scenario: " << file.name << "\n";
    os << "polytopes at " << name << " = " << x << ", direction " << Json(dir).dump() << "\n";
    out.csv = "polytope,vertices,volume,moment\n";

    Json polys = Json::array();
    Rational fut;
    for (std::size_t a = 0; a < t.polytopes.size(); ++a) {
        const auto q = realize(t.polytopes[a], x, options.exec);
        const auto in = integrate_polytope(q, std::nullopt, options.exec);
        Rational moment;
        for (std::size_t i = 0; i < dir.size(); ++i) moment += in.first_moment[i] * Rational(dir[i]);
        fut += moment / in.volume;
        os << "  P" << a + 1 << ": " << q.vertices.size() << " vertices, " << q.normals.size() << " facets, volume "
           << in.volume << ", moment " << moment << "\n";
        const auto redundant = redundant_facets(q);
        if (!redundant.empty()) os << "    redundant facets: " << Json(redundant).dump() << "\n";
        polys.push_back(Json{{"vertices", q.vertices.size()},
                             {"facets", q.normals.size()},
                             {"redundant_facets", redundant},
                             {"volume", in.volume.to_string()},
                             {"moment", moment.to_string()}});
        out.csv += std::to_string(a + 1) + "," + std::to_string(q.vertices.size()) + "," + in.volume.to_string() +
                   "," + moment.to_string() + "\n";
    }
    os << "Fut (toric) = " << fut << "\n";
    j["polytopes"] = polys;
    j["fut"] = fut.to_string();
    if (t.whole) {
        const auto mk = minkowski_check(t.polytopes, *t.whole, x);
        os << "Minkowski sum check: " << to_string(mk.status) << " (" << mk.diagnostics << ")\n";
        j["minkowski"] = Json{{"status", to_string(mk.status)},
                              {"diagnostics", mk.diagnostics},
                              {"offending_facet", mk.offending_facet ? Json(*mk.offending_facet) : Json(nullptr)}};
    }
    out.text = os.str();
    out.structured = dump(j);
    return out;
}

Output roots_output(const ScenarioFile& file, const RunOptions& options) {
    Output out;
    Json j;
    j["command"] = "roots";
    j["scenario"] = file.name;
    const auto fut = fut_localized(file.scenario);
    j["fut"] = ratfun_json(fut);
    if (!file.scenario.parameter) {
        out.text = "scenario " + file.name + " has no parameter; Fut = " + fut.to_factored_string() + "\n";
        j["roots"] = nullptr;
        out.structured = dump(j);
        out.csv = "closed_form,lower,upper,multiplicity\n";
        return out;
    }
    const auto& p = *file.scenario.parameter;
    if (fut.is_zero()) throw DomainError("Fut vanishes identically; there is no isolated vanishing locus");
    const auto rr = fut_roots(fut, {p.lower, p.upper}, options.root_width);
    std::ostringstream os;
    os << "scenario: " << file.name << "\nFut = " << fut.to_factored_string() << "\n";
    roots_text(os, rr, p.name);
    out.text = os.str();
    j["roots"] = roots_json(rr);
    out.structured = dump(j);
    out.csv = roots_csv(rr);
    return out;
}

Output verify_output(const ScenarioFile& file, const RunOptions& options) {
    const auto& t = toric_block(file);
    const IntVector dir = direction_for(file, options);
    const auto rec = cross_validate(file.scenario, t.polytopes, dir, sample_points(file, options), options.exec);
    Output out;
    std::ostringstream os;
    os << "scenario: " << file.name << "\n";
    validation_text(os, rec, param_name(file));
    out.text = os.str();
    Json j;
    j["command"] = "verify";
    j["scenario"] = file.name;
    j["validation"] = validation_json(rec);
    out.structured = dump(j);
    out.csv = validation_csv(rec, param_name(file));
    out.exit_code = rec.all_equal() ? 0 : exit_code(ErrorCategory::mismatch);
    return out;
}

Output sample_output(const ScenarioFile& file, const RunOptions& options) {
    if (!file.scenario.parameter) throw UsageError("scenario \"" + file.name + "\" has no parameter to sample");
    const auto& p = *file.scenario.parameter;
    const auto fut = fut_localized(file.scenario);
    std::vector<CurvePoint> curve;
    if (options.sample_points) {
        for (const auto& x : *options.sample_points) {
            CurvePoint pt;
            pt.x = x;
            if (fut.den().eval(x).is_zero())
                pt.pole = true;
            else
                pt.y = fut.eval(x);
            curve.push_back(pt);
        }
    } else {
        curve = sample_curve(fut, {p.lower, p.upper}, options.sample_count);
    }
    Output out;
    std::ostringstream os;
    Json points = Json::array();
    out.csv = p.name + ",fut\n";
    os << "scenario: " << file.name << "\nFut = " << fut.to_factored_string() << "\n";
    for (const auto& pt : curve) {
        if (pt.pole) {
            os << "  " << p.name << " = " << pt.x << ": pole (skipped)\n";
        } else {
            os << "  " << p.name << " = " << pt.x << ": " << *pt.y << "  ~ " << approx(pt.y->to_double())
               << (pt.near_pole ? "  (near pole)" : "") << "\n";
            out.csv += pt.x.to_string() + "," + pt.y->to_string() + "\n";
        }
        points.push_back(Json{{"x", pt.x.to_string()},
                              {"fut", pt.y ? Json(pt.y->to_string()) : Json(nullptr)},
                              {"pole", pt.pole},
                              {"near_pole", pt.near_pole}});
    }
    out.text = os.str();
    Json j;
    j["command"] = "sample";
    j["scenario"] = file.name;
    j["fut"] = ratfun_json(fut);
    j["points"] = points;
    out.structured = dump(j);
    return out;
}

Output validate_output(const ScenarioFile& file) {
    const auto v = validate_scenario(file.scenario);
    Output out;
    std::ostringstream os;
    os << "scenario: " << file.name << (v.valid ? " is valid" : " is INVALID") << "\n";
    for (std::size_t a = 0; a < v.volumes.size(); ++a)
        os << "  volume (" << bundle_name(a) << ") = " << v.volumes[a].to_factored_string() << "\n";
    for (const auto& e : v.errors) os << "  error: " << e << "\n";
    for (const auto& w : v.warnings) os << "  warning: " << w << "\n";
    if (file.toric && file.toric->whole && file.scenario.parameter) {
        const Rational x = file.scenario.parameter->midpoint();
        const auto mk = minkowski_check(file.toric->polytopes, *file.toric->whole, x);
        os << "  Minkowski sum check at " << x << ": " << to_string(mk.status) << "\n";
    }
    out.text = os.str();
    Json j;
    j["command"] = "validate";
    j["scenario"] = file.name;
    j["valid"] = v.valid;
    Json vols = Json::array();
    for (const auto& vol : v.volumes) vols.push_back(ratfun_json(vol));
    j["volumes"] = vols;
    j["errors"] = v.errors;
    j["warnings"] = v.warnings;
    out.structured = dump(j);
    out.csv = "kind,message\n";
    for (const auto& e : v.errors) out.csv += "error,\"" + e + "\"\n";
    for (const auto& w : v.warnings) out.csv += "warning,\"" + w + "\"\n";
    out.exit_code = v.valid ? 0 : exit_code(ErrorCategory::validation);
    return out;
}

}  // namespace

Command parse_command(std::string_view name) {
    if (name == "localize") return Command::localize;
    if (name == "toric") return Command::toric;
    if (name == "roots") return Command::roots;
    if (name == "verify") return Command::verify;
    if (name == "sample") return Command::sample;
    if (name == "validate") return Command::validate;
    if (name == "catalog") return Command::catalog;
    throw UsageError("unknown command \"" + std::string(name) + "\"");
}

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "structured" || name == "json") return Format::structured;
    if (name == "csv") return Format::csv;
    throw UsageError("unknown format \"" + std::string(name) + "\"");
}

void parse_samples(std::string_view text, RunOptions& options) {
    if (text.find(',') == std::string_view::npos && text.find('/') == std::string_view::npos &&
        text.find('.') == std::string_view::npos) {
        const Rational n = Rational::parse(text);
        if (!n.is_integer() || n.sign() <= 0) throw UsageError("--samples: expected a positive count or a list");
        options.sample_count = n.numerator().get_ui();
        options.sample_points.reset();
        return;
    }
    std::vector<Rational> pts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(',', start), text.size());
        pts.push_back(Rational::parse(text.substr(start, end - start)));
        start = end + 1;
    }
    options.sample_points = std::move(pts);
}

IntVector parse_direction(std::string_view text) {
    IntVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(',', start), text.size());
        const Rational v = Rational::parse(text.substr(start, end - start));
        if (!v.is_integer()) throw UsageError("--direction: entries must be integers");
        out.push_back(v.numerator().get_si());
        start = end + 1;
    }
    return out;
}

ObstructionReport build_report(const ScenarioFile& file, const RunOptions& options) {
    const auto& s = file.scenario;
    const auto check = validate_scenario(s);
    if (!check.valid) {
        std::string msg;
        for (const auto& e : check.errors) msg += (msg.empty() ? "" : "; ") + e;
        throw ValidationError(msg);
    }
    ObstructionReport r;
    r.scenario = file.name;
    r.dimension = s.dimension;
    r.bundle_count = s.bundle_count;
    r.parameter = s.parameter;
    const auto m = static_cast<unsigned>(s.dimension);
    for (std::size_t a = 0; a < static_cast<std::size_t>(s.bundle_count); ++a) {
        r.volumes.push_back(volume_localized(s, a));
        r.numerators.push_back(residue_sum(s, a, m + 1));
    }
    r.fut = fut_localized(s);
    if (options.param_value) r.fut_value = r.fut.eval(*options.param_value);
    if (s.parameter && !r.fut.is_zero()) r.roots = fut_roots(r.fut, {s.parameter->lower, s.parameter->upper}, options.root_width);
    r.warnings = check.warnings;
    r.notes.push_back("Fut includes the prefactor 1/(m+1) = 1/" + std::to_string(m + 1) +
                      " of the residue formula; a convention without it multiplies Fut by " + std::to_string(m + 1) +
                      " and leaves the vanishing locus unchanged.");
    r.notes.push_back("Localized volumes are Chern numbers: they equal m! = " + factorial(m).to_string() +
                      " times the Euclidean volume of the moment polytope, which is the normalization used by verify.");
    return r;
}

Output run(Command command, const ScenarioFile& file, const RunOptions& options) {
    switch (command) {
        case Command::localize: return localize_output(file, options);
        case Command::toric: return toric_output(file, options);
        case Command::roots: return roots_output(file, options);
        case Command::verify: return verify_output(file, options);
        case Command::sample: return sample_output(file, options);
        case Command::validate: return validate_output(file);
        case Command::catalog: return run_catalog();
    }
    throw UsageError("unknown command");
}

Output run_catalog() {
    Output out;
    std::ostringstream os;
    Json list = Json::array();
    out.csv = "name,description\n";
    for (const auto& name : catalog_names()) {
        const auto file = load_catalog(name);
        os << name << ": " << file.description << "\n";
        list.push_back(Json{{"name", name}, {"description", file.description}});
        out.csv += name + ",\"" + file.description + "\"\n";
    }
    out.text = os.str();
    out.structured = dump(Json{{"command", "catalog"}, {"scenarios", list}});
    return out;
}

const std::string& emit(const Output& output, Format format) {
    switch (format) {
        case Format::text: return output.text;
        case Format::structured: return output.structured;
        case Format::csv: return output.csv;
    }
    return output.text;
}

int exit_code(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::usage:
        case ErrorCategory::parse: return 2;
        case ErrorCategory::validation: return 3;
        case ErrorCategory::computation: return 4;
        case ErrorCategory::mismatch: return 5;
    }
    return 1;
}

Output error_output(const Error& error) {
    static const char* names[] = {"usage", "parse", "validation", "computation", "mismatch"};
    const char* category = names[static_cast<int>(error.category())];
    Output out;
    out.exit_code = exit_code(error.category());
    out.text = std::string("error (") + category + "): " + error.what() + "\n";
    out.structured = dump(Json{{"error", {{"category", category}, {"message", error.what()}}}});
    out.csv = "error,message\n" + std::string(category) + ",\"" + error.what() + "\"\n";
    return out;
}

}  // namespace futaki::cli
