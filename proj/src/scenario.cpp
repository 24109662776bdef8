#include "futaki/scenario.hpp"

#include "futaki/error.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace futaki {

namespace {

using Json = nlohmann::ordered_json;

std::string location(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

class Reader {
public:
    explicit Reader(std::string param) : param_(std::move(param)) {}

    const Json& field(const Json& obj, const char* key, const std::string& path) const {
        if (!obj.is_object()) throw ParseError(path + ": expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) throw ParseError(path + ": missing field \"" + key + "\"");
        return *it;
    }

    const Json* optional(const Json& obj, const char* key) const {
        auto it = obj.find(key);
        return it == obj.end() || it->is_null() ? nullptr : &*it;
    }

    std::string string(const Json& j, const std::string& path) const {
        if (!j.is_string()) throw ParseError(path + ": expected a string");
        return j.get<std::string>();
    }

    std::int64_t integer(const Json& j, const std::string& path) const {
        if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
        return j.get<std::int64_t>();
    }

    Rational rational(const Json& j, const std::string& path) const {
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        try {
            return Rational::parse(string(j, path));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    ParamPoly poly(const Json& j, const std::string& path) const {
        if (j.is_number_integer()) return ParamPoly(Rational(j.get<std::int64_t>()), param_);
        try {
            return ParamPoly::parse(string(j, path), param_);
        } catch (const Error& e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    IntVector int_vector(const Json& j, const std::string& path) const {
        if (!j.is_array()) throw ParseError(path + ": expected an array of integers");
        IntVector out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }

    const std::string& param() const { return param_; }

private:
    std::string param_;
};

Ring read_ring(const Reader& rd, const Json& j, const std::string& path) {
    std::vector<Generator> gens;
    const Json& gj = rd.field(j, "generators", path);
    if (!gj.is_array()) throw ParseError(path + ".generators: expected an array");
    for (std::size_t i = 0; i < gj.size(); ++i) {
        const std::string p = path + ".generators[" + std::to_string(i) + "]";
        Generator g;
        g.name = rd.string(rd.field(gj[i], "name", p), p + ".name");
        g.order = static_cast<int>(rd.integer(rd.field(gj[i], "order", p), p + ".order"));
        if (const Json* d = rd.optional(gj[i], "degree")) g.degree = static_cast<int>(rd.integer(*d, p + ".degree"));
        gens.push_back(std::move(g));
    }
    const auto dim = static_cast<int>(rd.integer(rd.field(j, "dimension", path), path + ".dimension"));
    const std::string top_text = rd.string(rd.field(j, "top", path), path + ".top");
    // The generators must exist before the top monomial can be parsed.
    Exponents top(gens.size(), 0);
    try {
        top = RingSpec::create(gens, top, 0)->parse_monomial(top_text);
    } catch (const Error& e) {
        throw ValidationError(path + ".top: " + e.what());
    }
    try {
        return RingSpec::create(std::move(gens), std::move(top), dim);
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

EquivariantClass read_class(const Reader& rd, const Json& j, const Ring& ring, const char* scalar_key,
                            const std::string& path) {
    const ParamPoly scalar = rd.poly(rd.field(j, scalar_key, path), path + "." + scalar_key);
    NilpotentClass n(ring);
    if (const Json* chern = rd.optional(j, "chern")) {
        if (!chern->is_object()) throw ParseError(path + ".chern: expected a monomial map");
        for (auto it = chern->begin(); it != chern->end(); ++it) {
            const std::string p = path + ".chern." + it.key();
            Exponents e;
            try {
                e = ring->parse_monomial(it.key());
            } catch (const Error& err) {
                throw ValidationError(p + ": " + err.what());
            }
            n.add_term(e, RationalFunction(rd.poly(it.value(), p)));
        }
    }
    return EquivariantClass(RationalFunction(scalar), n);
}

ParamPolytope read_polytope(const Reader& rd, const Json& j, std::size_t dim, const std::string& path) {
    ParamPolytope p;
    p.dimension = dim;
    const Json& fj = rd.field(j, "facets", path);
    if (!fj.is_array()) throw ParseError(path + ".facets: expected an array");
    for (std::size_t i = 0; i < fj.size(); ++i) {
        const std::string fp = path + ".facets[" + std::to_string(i) + "]";
        Facet f;
        f.normal = rd.int_vector(rd.field(fj[i], "normal", fp), fp + ".normal");
        f.offset = rd.poly(rd.field(fj[i], "offset", fp), fp + ".offset");
        if (f.normal.size() != dim)
            throw ValidationError(fp + ".normal: expected " + std::to_string(dim) + " entries");
        if (f.offset.degree() > 1) throw ValidationError(fp + ".offset: offsets must be affine in the parameter");
        p.facets.push_back(std::move(f));
    }
    return p;
}

std::string poly_text(const RationalFunction& f) {
    if (!f.is_polynomial()) throw UsageError("scenario coefficients must be polynomial in the parameter");
    return (f.num() * ParamPoly(f.den().leading().inverse(), f.num().name())).to_string();
}

Json write_class(const EquivariantClass& x, const char* scalar_key) {
    Json j;
    j[scalar_key] = poly_text(x.scalar());
    Json chern = Json::object();
    for (const auto& [e, c] : x.nilpotent().terms()) chern[x.ring()->monomial_to_string(e)] = poly_text(c);
    j["chern"] = chern;
    return j;
}

Json write_polytope(const ParamPolytope& p) {
    Json facets = Json::array();
    for (const auto& f : p.facets) facets.push_back(Json{{"normal", f.normal}, {"offset", f.offset.to_string()}});
    return Json{{"facets", facets}};
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("syntax error at " + location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    if (!root.is_object()) throw ParseError("scenario: expected a JSON object");

    ScenarioFile file;
    std::string param_name = "c";
    {
        Reader rd(param_name);
        if (const Json* p = rd.optional(root, "parameter")) {
            Parameter par;
            if (const Json* n = rd.optional(*p, "name")) par.name = rd.string(*n, "parameter.name");
            const Json& iv = rd.field(*p, "interval", "parameter");
            if (!iv.is_array() || iv.size() != 2) throw ParseError("parameter.interval: expected [lower, upper]");
            par.lower = rd.rational(iv[0], "parameter.interval[0]");
            par.upper = rd.rational(iv[1], "parameter.interval[1]");
            if (!(par.lower < par.upper))
                throw ValidationError("parameter.interval: (" + par.lower.to_string() + ", " + par.upper.to_string() +
                                      ") is empty");
            param_name = par.name;
            file.scenario.parameter = par;
        }
    }
    const Reader rd(param_name);

    file.name = rd.string(rd.field(root, "name", "scenario"), "name");
    if (const Json* d = rd.optional(root, "description")) file.description = rd.string(*d, "description");
    if (const Json* c = rd.optional(root, "citation")) file.citation = rd.string(*c, "citation");
    file.scenario.dimension = static_cast<int>(rd.integer(rd.field(root, "dimension", "scenario"), "dimension"));
    file.scenario.bundle_count = static_cast<int>(rd.integer(rd.field(root, "bundles", "scenario"), "bundles"));
    if (file.scenario.dimension < 1) throw ValidationError("dimension: must be >= 1");
    if (file.scenario.bundle_count < 1) throw ValidationError("bundles: must be >= 1");

    std::map<std::string, Ring> rings;
    if (const Json* rj = rd.optional(root, "rings")) {
        if (!rj->is_object()) throw ParseError("rings: expected an object");
        for (auto it = rj->begin(); it != rj->end(); ++it) {
            if (it.key() == "point") throw ValidationError("rings.point: the name is reserved");
            Ring r = read_ring(rd, it.value(), "rings." + it.key());
            rings[it.key()] = r;
            file.rings.emplace_back(it.key(), r);
        }
    }

    const Json& cj = rd.field(root, "components", "scenario");
    if (!cj.is_array()) throw ParseError("components: expected an array");
    for (std::size_t i = 0; i < cj.size(); ++i) {
        const std::string path = "components[" + std::to_string(i) + "]";
        const std::string label = rd.string(rd.field(cj[i], "label", path), path + ".label");
        std::string ring_name = "point";
        if (const Json* r = rd.optional(cj[i], "ring")) ring_name = rd.string(*r, path + ".ring");
        Ring ring;
        if (ring_name == "point") {
            ring = RingSpec::point();
        } else {
            auto it = rings.find(ring_name);
            if (it == rings.end()) throw ValidationError(path + ".ring: unknown ring \"" + ring_name + "\"");
            ring = it->second;
        }
        std::optional<int> codimension;
        if (const Json* cd = rd.optional(cj[i], "codimension"))
            codimension = static_cast<int>(rd.integer(*cd, path + ".codimension"));
        EquivariantClass euler = read_class(rd, rd.field(cj[i], "euler", path), ring, "weight", path + ".euler");
        std::vector<EquivariantClass> classes;
        const Json& bj = rd.field(cj[i], "bundles", path);
        if (!bj.is_array()) throw ParseError(path + ".bundles: expected an array");
        for (std::size_t a = 0; a < bj.size(); ++a)
            classes.push_back(
                read_class(rd, bj[a], ring, "hamiltonian", path + ".bundles[" + std::to_string(a) + "]"));
        FixedComponent comp{label, ring, std::move(euler), std::move(classes), codimension};
        file.component_rings.push_back(ring_name);
        file.scenario.components.push_back(std::move(comp));
    }

    const auto check = validate_scenario(file.scenario);
    if (!check.valid) {
        std::string msg = "invalid scenario \"" + file.name + "\": ";
        for (std::size_t i = 0; i < check.errors.size(); ++i) msg += (i ? "; " : "") + check.errors[i];
        throw ValidationError(msg);
    }

    if (const Json* tj = rd.optional(root, "toric")) {
        ToricBlock t;
        t.dimension = static_cast<std::size_t>(rd.integer(rd.field(*tj, "dimension", "toric"), "toric.dimension"));
        if (t.dimension != static_cast<std::size_t>(file.scenario.dimension))
            throw ValidationError("toric.dimension: must equal the manifold dimension");
        t.direction = rd.int_vector(rd.field(*tj, "direction", "toric"), "toric.direction");
        if (t.direction.size() != t.dimension) throw ValidationError("toric.direction: wrong length");
        const Json& pj = rd.field(*tj, "polytopes", "toric");
        if (!pj.is_array()) throw ParseError("toric.polytopes: expected an array");
        for (std::size_t a = 0; a < pj.size(); ++a)
            t.polytopes.push_back(read_polytope(rd, pj[a], t.dimension, "toric.polytopes[" + std::to_string(a) + "]"));
        if (t.polytopes.size() != static_cast<std::size_t>(file.scenario.bundle_count))
            throw ValidationError("toric.polytopes: expected one polytope per bundle");
        if (const Json* wj = rd.optional(*tj, "whole")) t.whole = read_polytope(rd, *wj, t.dimension, "toric.whole");
        file.toric = std::move(t);
    }
    return file;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioFile& file) {
    Json root;
    root["name"] = file.name;
    root["description"] = file.description;
    root["citation"] = file.citation;
    root["dimension"] = file.scenario.dimension;
    root["bundles"] = file.scenario.bundle_count;
    if (const auto& p = file.scenario.parameter)
        root["parameter"] = Json{{"name", p->name}, {"interval", {p->lower.to_string(), p->upper.to_string()}}};

    Json rings = Json::object();
    for (const auto& [name, ring] : file.rings) {
        Json gens = Json::array();
        for (const auto& g : ring->generators())
            gens.push_back(Json{{"name", g.name}, {"order", g.order}, {"degree", g.degree}});
        rings[name] = Json{{"generators", gens},
                           {"top", ring->monomial_to_string(ring->top())},
                           {"dimension", ring->dimension()}};
    }
    root["rings"] = rings;

    Json comps = Json::array();
    for (std::size_t i = 0; i < file.scenario.components.size(); ++i) {
        const auto& c = file.scenario.components[i];
        Json cj;
        cj["label"] = c.label;
        cj["ring"] = i < file.component_rings.size() ? file.component_rings[i] : std::string("point");
        if (c.codimension) cj["codimension"] = *c.codimension;
        cj["euler"] = write_class(c.euler, "weight");
        Json bundles = Json::array();
        for (const auto& b : c.classes) bundles.push_back(write_class(b, "hamiltonian"));
        cj["bundles"] = bundles;
        comps.push_back(cj);
    }
    root["components"] = comps;

    if (const auto& t = file.toric) {
        Json tj;
        tj["dimension"] = t->dimension;
        tj["direction"] = t->direction;
        Json polys = Json::array();
        for (const auto& p : t->polytopes) polys.push_back(write_polytope(p));
        tj["polytopes"] = polys;
        if (t->whole) tj["whole"] = write_polytope(*t->whole);
        root["toric"] = tj;
    }
    return root.dump(2) + "\n";
}

}  // namespace futaki
