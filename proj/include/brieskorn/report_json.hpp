#pragma once

// JSON encoding of the result types. Objects use sorted keys (nlohmann's
// default map), rationals are "n/d" strings, integers that fit in 64 bits
// are JSON numbers and larger ones are decimal strings.

#include "brieskorn/floer.hpp"
#include "brieskorn/obstruct.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/stein.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace brieskorn {

using Json = nlohmann::json;

inline constexpr const char* schema_version = "1";

Json big_to_json(const arith::BigInt& v);
arith::BigInt big_from_json(const Json& j);

/// {"schema_version": "1", "command": [...], "payload": ...}
Json output_document(const std::vector<std::string>& command, Json payload);

/// Two-space indented, trailing newline.
std::string dump(const Json& j);

namespace arith {
void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);
} // namespace arith

namespace plumbing {
void to_json(Json& j, const PlumbingGraph& g);
void from_json(const Json& j, PlumbingGraph& g);
void to_json(Json& j, const FormProperties& p);
void from_json(const Json& j, FormProperties& p);
} // namespace plumbing

namespace floer {
void to_json(Json& j, const SemigroupProfile& s);
void from_json(const Json& j, SemigroupProfile& s);
void to_json(Json& j, const DInvariantResult& d);
void from_json(const Json& j, DInvariantResult& d);
void to_json(Json& j, const GradingResult& g);
void from_json(const Json& j, GradingResult& g);
} // namespace floer

namespace stein {
void to_json(Json& j, const RotProfile& r);
void from_json(const Json& j, RotProfile& r);
void to_json(Json& j, const LegendrianCount& c);
void from_json(const Json& j, LegendrianCount& c);
} // namespace stein

namespace obstruct {
void to_json(Json& j, const FamilyFacts& f);
void from_json(const Json& j, FamilyFacts& f);
void to_json(Json& j, const ObstructionReport& r);
void from_json(const Json& j, ObstructionReport& r);
void to_json(Json& j, const CuspidalReport& r);
void from_json(const Json& j, CuspidalReport& r);
} // namespace obstruct

} // namespace brieskorn
