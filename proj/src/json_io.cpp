#include "holomellin/json_io.hpp"

#include <json.hpp>

#include "holomellin/errors.hpp"
#include "holomellin/parser.hpp"

namespace holomellin {

using nlohmann::json;

namespace {

json coeff_array(const std::vector<Polynomial>& coeffs) {
    json arr = json::array();
    for (const auto& p : coeffs) arr.push_back(p.str());
    return arr;
}

std::string dump(const json& j, bool compact) { return compact ? j.dump() : j.dump(2); }

}  // namespace

std::string to_json_string(const DiffOp& op, bool compact) {
    json j;
    j["kind"] = "diffop";
    j["var"] = "x";
    j["coeffs"] = coeff_array(op.coeffs());
    return dump(j, compact);
}

std::string to_json_string(const RecOp& op, bool compact) {
    json j;
    j["kind"] = "recop";
    j["var"] = "n";
    j["coeffs"] = coeff_array(op.coeffs());
    json inhom = json::array();
    for (const auto& [sym, c] : op.inhom().terms())
        inhom.push_back(json{{"symbol", sym.str()}, {"coeff", c.str()}});
    j["inhom"] = inhom;
    return dump(j, compact);
}

std::variant<DiffOp, RecOp> operator_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("coeffs"))
        throw DomainError("operator JSON requires 'kind' and 'coeffs'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "diffop") {
        std::vector<Polynomial> coeffs;
        for (const auto& c : j["coeffs"]) coeffs.push_back(parse_polynomial(c.get<std::string>(), Var::X));
        return DiffOp(std::move(coeffs));
    }
    if (kind == "recop") {
        std::vector<Polynomial> coeffs;
        for (const auto& c : j["coeffs"]) coeffs.push_back(parse_polynomial(c.get<std::string>(), Var::N));
        InhomPart inhom;
        if (j.contains("inhom"))
            for (const auto& t : j["inhom"])
                inhom.add(BoundarySymbol::parse(t.at("symbol").get<std::string>()),
                          parse_polynomial(t.at("coeff").get<std::string>(), Var::N));
        return RecOp(std::move(coeffs), std::move(inhom));
    }
    throw DomainError("unknown operator kind '" + kind + "'");
}

}  // namespace holomellin
