#include "qsym/serialize.hpp"

#include "qsym/error.hpp"

namespace qsym {

Json to_json(const Partition& lam)
{
    Json parts = Json::array();
    for (int part : lam.parts()) parts.push_back(part);
    return parts;
}

Json to_json(const SchurVector& f)
{
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms()) terms.push_back(Json{{"partition", to_json(lam)}, {"coeff", c.to_string()}});
    return Json{{"terms", std::move(terms)}};
}

Json to_json(const MultiPoly& p)
{
    Json terms = Json::array();
    for (const auto& [exps, c] : p.ordered_terms()) terms.push_back(Json{{"exp", exps}, {"coeff", c.get_str()}});
    return Json{{"vars", p.variable_names()}, {"terms", std::move(terms)}};
}

Json to_json(const PolyRatio& r)
{
    return Json{{"numerator", to_json(r.numerator())}, {"denominator", to_json(r.denominator())}};
}

Json to_json(const PowVector& u)
{
    Json out = Json::array();
    for (const auto& [k, c] : u.terms())
        out.push_back(Json{{"power", k}, {"basis", std::string(to_string(u.basis()))}, {"coeff", to_json(c)}});
    return out;
}

Json to_json(const ParamPowVector& u)
{
    Json out = Json::array();
    for (const auto& [k, c] : u.terms())
        out.push_back(Json{{"power", k}, {"basis", std::string(to_string(u.basis()))}, {"coeff", to_json(c)}});
    return out;
}

SchurVector schur_vector_from_json(const Json& j)
{
    SchurVector out;
    try {
        for (const auto& term : j.at("terms")) {
            Partition lam(term.at("partition").get<std::vector<int>>());
            out.add_term(lam, LaurentQ::parse(term.at("coeff").get<std::string>()));
        }
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::parse, std::string("malformed Schur vector JSON: ") + e.what());
    }
    return out;
}

std::string dump(const Json& j)
{
    return j.dump();
}

}  // namespace qsym
