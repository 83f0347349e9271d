#include "amix/distribution_json.hpp"

#include <variant>

#include "amix/errors.hpp"
#include "amix/io.hpp"

namespace amix {

using ojson = nlohmann::ordered_json;

ojson to_json(const Distribution& d)
{
    struct Visitor {
        ojson operator()(const AtomMixture& m) const
        {
            ojson atoms = ojson::array();
            for (const auto& a : m.atoms) atoms.push_back(ojson::array({a.time, a.weight}));
            return {{"type", "atoms"}, {"atoms", atoms}};
        }
        ojson operator()(const Bernoulli& b) const { return {{"type", "bernoulli"}, {"p", b.p}}; }
        ojson operator()(const Gaussian& g) const { return {{"type", "gaussian"}, {"mu", g.mu}, {"sigma2", g.sigma2}}; }
        ojson operator()(const UniformInterval& u) const { return {{"type", "uniform"}, {"a", u.a}, {"b", u.b}}; }
        ojson operator()(const SumIndependent& s) const
        {
            ojson comps = ojson::array();
            for (const auto& c : s.components) comps.push_back(to_json(c));
            return {{"type", "sum"}, {"components", comps}};
        }
        ojson operator()(const Difference& d) const
        {
            return {{"type", "difference"}, {"minuend", to_json(*d.minuend)}, {"subtrahend", to_json(*d.subtrahend)}};
        }
        ojson operator()(const ScaleShift& s) const
        {
            return {{"type", "scale_shift"}, {"scale", s.scale}, {"shift", s.shift}, {"inner", to_json(*s.inner)}};
        }
        ojson operator()(const UniformRealLine&) const { return {{"type", "uniform_real_line"}}; }
    };
    return std::visit(Visitor{}, d.node());
}

namespace {

double number(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key)) throw ParseError(std::string("distribution is missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

const nlohmann::json& child(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_object())
        throw ParseError(std::string("distribution field '") + key + "' must be an object");
    return j.at(key);
}

Distribution from_json_depth(const nlohmann::json& j, int depth)
{
    if (depth > kMaxDistributionDepth)
        throw DepthExceeded("distribution nesting exceeds " + std::to_string(kMaxDistributionDepth));
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw ParseError("distribution must be an object with a string 'type'");
    const std::string type = j.at("type").get<std::string>();

    if (type == "atoms") {
        if (!j.contains("atoms") || !j.at("atoms").is_array()) throw ParseError("'atoms' must be an array");
        std::vector<Atom> atoms;
        for (const auto& pair : j.at("atoms")) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
                throw ParseError("each atom must be a [time, weight] pair of numbers");
            atoms.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        return Distribution::atoms(std::move(atoms));
    }
    if (type == "bernoulli") return Distribution::bernoulli(number(j, "p"));
    if (type == "gaussian") return Distribution::gaussian(number(j, "mu"), number(j, "sigma2"));
    if (type == "uniform") return Distribution::uniform(number(j, "a"), number(j, "b"));
    if (type == "uniform_real_line") return Distribution::uniform_real_line();
    if (type == "sum") {
        if (!j.contains("components") || !j.at("components").is_array())
            throw ParseError("'components' must be an array");
        std::vector<Distribution> comps;
        for (const auto& c : j.at("components")) comps.push_back(from_json_depth(c, depth + 1));
        return sum_independent(std::move(comps));
    }
    if (type == "difference")
        return difference_independent(from_json_depth(child(j, "minuend"), depth + 1),
                                      from_json_depth(child(j, "subtrahend"), depth + 1));
    if (type == "scale_shift")
        return scale_shift(number(j, "scale"), number(j, "shift"), from_json_depth(child(j, "inner"), depth + 1));
    throw ParseError("unknown distribution type '" + type + "'");
}

}  // namespace

Distribution distribution_from_json(const nlohmann::json& j) { return from_json_depth(j, 1); }

Distribution parse_distribution(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("distribution JSON: ") + e.what());
    }
    return distribution_from_json(j);
}

std::string describe(const Distribution& d) { return dump_json(to_json(d), -1); }

}  // namespace amix
