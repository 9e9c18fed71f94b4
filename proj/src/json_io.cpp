#include "minkarr/json_io.hpp"

namespace minkarr {

json to_json(const Rational& q) { return format_rational(q); }

json to_json(const Number& n) {
    if (n.exact())
        return format_rational(n.rational());
    json j = {{"approx", n.to_double()}};
    if (n.tolerance() > 0)
        j["tolerance"] = n.tolerance();
    return j;
}

json to_json(const Vec& v) {
    json j = json::array();
    for (const auto& x : v)
        j.push_back(format_rational(x));
    return j;
}

json to_json(const ConvexBody& K) {
    json shape;
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope: {
        json facets = json::array();
        for (const auto& a : K.as_polytope().facets())
            facets.push_back({{"a", to_json(a)}, {"b", "1"}});
        shape["hpolytope"] = {{"facets", facets}};
        break;
    }
    case ConvexBody::Kind::Ball:
        shape["ball"] = {{"r", to_json(K.radius())}};
        break;
    case ConvexBody::Kind::Product: {
        json parts = json::array();
        for (const auto& f : K.factors())
            parts.push_back(to_json(f));
        shape["product"] = parts;
        break;
    }
    default:
        throw UnsupportedRepresentation("implicit derived bodies have no file representation");
    }
    return {{"dim", K.dim()}, {"shape", shape}};
}

json to_json(const Arrangement& A) {
    json hs = json::array();
    for (const auto& h : A.homothets())
        hs.push_back({{"lambda", to_json(h.lambda)}, {"v", to_json(h.v)}});
    return {{"body", to_json(A.body())}, {"homothets", hs}};
}

json to_json(const VerificationReport& r) {
    json j = {{"count", r.count},
              {"minkowski", r.minkowski},
              {"strict", r.strict},
              {"pairwise_intersecting", r.pairwise_intersecting}};
    if (r.first_violation)
        j["first_violation"] = {{"i", r.first_violation->i},
                                {"j", r.first_violation->j},
                                {"condition", to_string(r.first_violation->condition)}};
    else
        j["first_violation"] = nullptr;
    return j;
}

json to_json(const BoundReport& r) {
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs)
        inputs[k] = to_json(v);
    return {{"name", r.name}, {"formula_id", r.formula_id}, {"value", to_json(r.value)},
            {"inputs", inputs}, {"note", r.note}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw FormatError("expected a rational string \"p/q\", got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Vec vec_from_json(const json& j) {
    if (!j.is_array())
        throw FormatError("expected an array of rationals, got " + j.dump());
    Vec v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

ConvexBody body_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("shape"))
        throw FormatError("body needs \"dim\" and \"shape\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() <= 0)
        throw FormatError("body \"dim\" must be a positive integer");
    const int dim = j["dim"].get<int>();
    const json& shape = j["shape"];
    if (!shape.is_object() || shape.size() != 1)
        throw FormatError("body \"shape\" must have exactly one key");
    try {
        if (shape.contains("hpolytope")) {
            std::vector<Halfspace> hs;
            for (const auto& f : shape["hpolytope"].at("facets"))
                hs.push_back({vec_from_json(f.at("a")), rational_from_json(f.at("b"))});
            return ConvexBody::polytope(Polytope::from_halfspaces(dim, hs));
        }
        if (shape.contains("vpolytope")) {
            std::vector<Vec> pts;
            for (const auto& v : shape["vpolytope"].at("vertices"))
                pts.push_back(vec_from_json(v));
            return ConvexBody::polytope(Polytope::from_vertices(dim, pts));
        }
        if (shape.contains("ball"))
            return ConvexBody::ball(dim, rational_from_json(shape["ball"].at("r")));
        if (shape.contains("product")) {
            std::vector<ConvexBody> fs;
            for (const auto& f : shape["product"])
                fs.push_back(body_from_json(f));
            ConvexBody K = product(std::move(fs));
            if (K.dim() != dim)
                throw FormatError("product factor dimensions do not sum to \"dim\"");
            return K;
        }
    } catch (const json::exception& e) {
        throw FormatError(e.what());
    } catch (const DimensionMismatch& e) {
        throw FormatError(e.what());
    }
    throw FormatError("unknown body shape " + shape.dump());
}

Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object() || !j.contains("body") || !j.contains("homothets"))
        throw FormatError("arrangement needs \"body\" and \"homothets\"");
    ConvexBody K = body_from_json(j["body"]);
    std::vector<Homothet> hs;
    try {
        for (const auto& h : j["homothets"])
            hs.push_back({rational_from_json(h.at("lambda")), vec_from_json(h.at("v"))});
        if (j.contains("reference"))
            return Arrangement::with_reference(K, vec_from_json(j["reference"]), std::move(hs));
        return Arrangement(K, std::move(hs));
    } catch (const json::exception& e) {
        throw FormatError(e.what());
    } catch (const DimensionMismatch& e) {
        throw FormatError(e.what());
    }
}

json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(e.what());
    }
}

} // namespace minkarr
