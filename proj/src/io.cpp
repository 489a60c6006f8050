#include "braidops/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "braidops/errors.hpp"

namespace braidops {

namespace {

using json = nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rational rational_field(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + " must be a rational string");
    return Rational::parse(j.get<std::string>());
}

std::vector<Rational> functional_field(const json& j, const OperadPresentation& p,
                                       const std::string& what) {
    if (!j.is_object()) throw ParseError(what + " must map generator names to rationals");
    std::vector<Rational> v(static_cast<std::size_t>(p.generator_count()));
    for (const auto& [key, value] : j.items())
        v[static_cast<std::size_t>(p.generator_index(key))] =
            rational_field(value, what + "." + key);
    return v;
}

} // namespace

OperadPresentation parse_operad_text(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("operad file must be a JSON object");

    OperadPresentation p;
    p.name = j.value("name", std::string("unnamed"));

    if (!j.contains("generators") || !j.at("generators").is_array() ||
        j.at("generators").empty())
        throw ParseError("'generators' must be a nonempty array of names");
    for (const auto& g : j.at("generators")) {
        if (!g.is_string()) throw ParseError("generator names must be strings");
        const std::string name = g.get<std::string>();
        for (const auto& existing : p.generator_names)
            if (existing == name) throw ParseError("duplicate generator '" + name + "'");
        p.generator_names.push_back(name);
    }

    if (!j.contains("star")) throw ParseError("missing 'star'");
    try {
        p.star_coeffs = functional_field(j.at("star"), p, "star");
    } catch (const UnknownGenerator& e) {
        throw ParseError(e.what());
    }
    bool star_nonzero = false;
    for (const Rational& c : p.star_coeffs) star_nonzero = star_nonzero || !c.is_zero();
    if (!star_nonzero) throw ParseError("'star' must be nonzero");

    if (!j.contains("relations") || !j.at("relations").is_array())
        throw ParseError("'relations' must be an array");
    for (const auto& jr : j.at("relations")) {
        QuadraticRelation rel;
        const auto parse_side = [&](const char* side, std::vector<QuadraticRelation::Term>& out) {
            if (!jr.contains(side)) return;
            if (!jr.at(side).is_array()) throw ParseError(std::string(side) + " must be an array");
            for (const auto& jt : jr.at(side)) {
                QuadraticRelation::Term t;
                if (!jt.contains("inner") || !jt.contains("outer"))
                    throw ParseError("relation terms need 'inner' and 'outer'");
                try {
                    t.inner = p.generator_index(jt.at("inner").get<std::string>());
                    t.outer = p.generator_index(jt.at("outer").get<std::string>());
                } catch (const UnknownGenerator& e) {
                    throw ParseError(e.what());
                }
                t.coeff = jt.contains("coeff") ? rational_field(jt.at("coeff"), "coeff")
                                               : Rational(1);
                out.push_back(std::move(t));
            }
        };
        parse_side("left", rel.left);
        parse_side("right", rel.right);
        if (rel.left.empty() && rel.right.empty())
            throw ParseError("a relation needs at least one term");
        p.relations.push_back(std::move(rel));
    }

    if (j.contains("unit_action")) {
        const json& ju = j.at("unit_action");
        if (!ju.contains("alpha") || !ju.contains("beta"))
            throw ParseError("'unit_action' needs 'alpha' and 'beta'");
        UnitAction ua;
        try {
            ua.alpha = functional_field(ju.at("alpha"), p, "alpha");
            ua.beta = functional_field(ju.at("beta"), p, "beta");
        } catch (const UnknownGenerator& e) {
            throw ParseError(e.what());
        }
        p.unit_action = std::move(ua);
    }
    return p;
}

BraidedSpace parse_braiding_text(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("sigma"))
        throw ParseError("braiding file needs 'dim' and 'sigma'");
    if (!j.at("dim").is_number_integer()) throw ParseError("'dim' must be an integer");
    const int d = j.at("dim").get<int>();
    if (d < 1) throw ParseError("'dim' must be >= 1");
    const std::size_t d2 = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    const json& rows = j.at("sigma");
    if (!rows.is_array() || rows.size() != d2)
        throw ParseError("'sigma' must have dim^2 rows");
    Matrix m(d2, d2);
    for (std::size_t i = 0; i < d2; ++i) {
        if (!rows[i].is_array() || rows[i].size() != d2)
            throw ParseError("'sigma' rows must have dim^2 entries");
        for (std::size_t k = 0; k < d2; ++k) m.at(i, k) = rational_field(rows[i][k], "sigma");
    }
    return BraidedSpace(d, std::move(m));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

OperadPresentation load_operad_file(const std::string& path) {
    return parse_operad_text(read_file(path));
}

BraidedSpace load_braiding_file(const std::string& path) {
    return parse_braiding_text(read_file(path));
}

OperadPresentation load_preset(const std::string& name) {
    return parse_operad_text(preset_text(name));
}

} // namespace braidops
