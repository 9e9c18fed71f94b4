#pragma once

#include "minkarr/arrangement.hpp"
#include "minkarr/bounds.hpp"

#include <json.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace minkarr {

using json = nlohmann::json;

/// Malformed input document (exit code 2 in the CLI).
class FormatError : public std::runtime_error {
  public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

json to_json(const Rational& q);
json to_json(const Number& n);
json to_json(const Vec& v);
json to_json(const ConvexBody& K);
json to_json(const Arrangement& A);
json to_json(const VerificationReport& r);
json to_json(const BoundReport& r);

Rational rational_from_json(const json& j);
Vec vec_from_json(const json& j);
ConvexBody body_from_json(const json& j);
/// Accepts an optional "reference" point, applied via Arrangement::with_reference.
Arrangement arrangement_from_json(const json& j);

json parse_json(std::istream& in);

} // namespace minkarr
