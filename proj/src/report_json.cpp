#include "brieskorn/report_json.hpp"

#include "brieskorn/errors.hpp"

#include <limits>

namespace brieskorn {

Json big_to_json(const arith::BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

arith::BigInt big_from_json(const Json& j)
{
    if (j.is_number_integer())
        return arith::BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        auto r = arith::Rational::parse(j.get<std::string>());
        if (!r.is_integer())
            throw DomainError("expected an integer, got " + j.get<std::string>());
        return r.numerator();
    }
    throw DomainError("expected an integer");
}

Json output_document(const std::vector<std::string>& command, Json payload)
{
    Json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["payload"] = std::move(payload);
    return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& v)
{
    if (v)
        j[key] = *v;
}

template <class T>
void get_optional(const Json& j, const char* key, std::optional<T>& v)
{
    if (j.contains(key) && !j.at(key).is_null())
        v = j.at(key).get<T>();
    else
        v.reset();
}

} // namespace

namespace arith {

void to_json(Json& j, const Rational& r) { j = r.to_string(); }

void from_json(const Json& j, Rational& r)
{
    if (j.is_number_integer())
        r = Rational(j.get<std::int64_t>());
    else
        r = Rational::parse(j.get<std::string>());
}

} // namespace arith

namespace plumbing {

void to_json(Json& j, const PlumbingGraph& g)
{
    j = Json::object();
    j["center_weight"] = g.center_weight;
    j["legs"] = g.legs;
    j["vertex_count"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({node_id(g, u), node_id(g, v)});
    j["edges"] = edges;
}

void from_json(const Json& j, PlumbingGraph& g)
{
    g.center_weight = j.at("center_weight").get<std::int64_t>();
    g.legs = j.at("legs").get<std::vector<std::vector<std::int64_t>>>();
}

void to_json(Json& j, const FormProperties& p)
{
    j = Json::object();
    j["negative_definite"] = p.negative_definite;
    j["determinant"] = big_to_json(p.determinant);
    j["even"] = p.even;
    j["b2"] = p.b2;
}

void from_json(const Json& j, FormProperties& p)
{
    p.negative_definite = j.at("negative_definite").get<bool>();
    p.determinant = big_from_json(j.at("determinant"));
    p.even = j.at("even").get<bool>();
    p.b2 = j.at("b2").get<std::size_t>();
}

} // namespace plumbing

namespace floer {

void to_json(Json& j, const SemigroupProfile& s)
{
    j = Json::object();
    j["p"] = s.p;
    j["q"] = s.q;
    j["gaps"] = s.gaps;
    j["genus"] = s.genus;
    j["frobenius"] = s.frobenius();
}

void from_json(const Json& j, SemigroupProfile& s)
{
    s.p = j.at("p").get<std::int64_t>();
    s.q = j.at("q").get<std::int64_t>();
    s.gaps = j.at("gaps").get<std::vector<std::int64_t>>();
    s.genus = j.at("genus").get<std::int64_t>();
}

void to_json(Json& j, const DInvariantResult& d)
{
    j = Json::object();
    j["value"] = d.value;
    j["agree"] = d.agree;
    Json methods = Json::array();
    for (const auto& mv : d.methods)
        methods.push_back({{"method", to_string(mv.method)}, {"value", mv.value}});
    j["methods"] = methods;
}

void from_json(const Json& j, DInvariantResult& d)
{
    d.value = j.at("value").get<std::int64_t>();
    d.agree = j.at("agree").get<bool>();
    d.methods.clear();
    for (const auto& m : j.at("methods")) {
        auto method = parse_d_method(m.at("method").get<std::string>());
        if (!method)
            throw DomainError("unknown d-invariant method " + m.at("method").dump());
        d.methods.push_back({*method, m.at("value").get<std::int64_t>()});
    }
}

void to_json(Json& j, const GradingResult& g)
{
    j = Json::object();
    j["h"] = g.h;
    j["c1_squared"] = g.c1_squared;
    j["sigma"] = g.sigma;
    j["euler"] = g.euler;
}

void from_json(const Json& j, GradingResult& g)
{
    g.h = j.at("h").get<arith::Rational>();
    g.c1_squared = j.at("c1_squared").get<arith::Rational>();
    g.sigma = j.at("sigma").get<std::int64_t>();
    g.euler = j.at("euler").get<std::int64_t>();
}

} // namespace floer

namespace stein {

void to_json(Json& j, const RotProfile& r)
{
    j = Json::object();
    j["per_vertex_range"] = r.per_vertex_range;
    j["total_count"] = big_to_json(r.total_count);
    j["zero_exists"] = r.zero_exists;
}

void from_json(const Json& j, RotProfile& r)
{
    r.per_vertex_range = j.at("per_vertex_range").get<std::vector<std::vector<std::int64_t>>>();
    r.total_count = big_from_json(j.at("total_count"));
    r.zero_exists = j.at("zero_exists").get<bool>();
}

void to_json(Json& j, const LegendrianCount& c)
{
    j = Json::object();
    j["tb_max"] = c.tb_max;
    j["count"] = c.count;
    j["rot_values"] = c.rot_values;
}

void from_json(const Json& j, LegendrianCount& c)
{
    c.tb_max = j.at("tb_max").get<std::int64_t>();
    c.count = j.at("count").get<std::int64_t>();
    c.rot_values = j.at("rot_values").get<std::vector<std::int64_t>>();
}

} // namespace stein

namespace obstruct {

void to_json(Json& j, const FamilyFacts& f)
{
    j = Json::object();
    j["p"] = f.p;
    j["q"] = f.q;
    j["n"] = f.n;
    j["sign"] = f.sign;
    put_optional(j, "surgery", f.surgery);
    put_optional(j, "zero_rot_exists", f.zero_rot_exists);
    j["candidate_xi0"] = f.candidate_xi0;
    put_optional(j, "h_xi0", f.h_xi0);
    put_optional(j, "d_minus_y", f.d_minus_y);
    put_optional(j, "alpha_g_minus_1", f.alpha_g_minus_1);
    j["reduced_degrees"] = f.reduced_degrees;
    put_optional(j, "c_red_zero_confirmed", f.c_red_zero_confirmed);
    j["even_p_odd_k"] = f.even_p_odd_k;
}

void from_json(const Json& j, FamilyFacts& f)
{
    f.p = j.at("p").get<std::int64_t>();
    f.q = j.at("q").get<std::int64_t>();
    f.n = j.at("n").get<std::int64_t>();
    f.sign = j.at("sign").get<int>();
    get_optional(j, "surgery", f.surgery);
    get_optional(j, "zero_rot_exists", f.zero_rot_exists);
    f.candidate_xi0 = j.at("candidate_xi0").get<bool>();
    get_optional(j, "h_xi0", f.h_xi0);
    get_optional(j, "d_minus_y", f.d_minus_y);
    get_optional(j, "alpha_g_minus_1", f.alpha_g_minus_1);
    f.reduced_degrees = j.at("reduced_degrees").get<std::vector<std::int64_t>>();
    get_optional(j, "c_red_zero_confirmed", f.c_red_zero_confirmed);
    f.even_p_odd_k = j.at("even_p_odd_k").get<bool>();
}

void to_json(Json& j, const ObstructionReport& r)
{
    j = Json::object();
    j["input"] = {{"label", r.label}, {"multiplicities", r.multiplicities}, {"seifert", r.seifert}};
    j["b2"] = r.b2;
    j["d"] = r.d.value;
    j["d_methods"] = Json(r.d).at("methods");
    j["d_agree"] = r.d.agree;
    j["max_char_square"] = big_to_json(r.max_char_square);
    j["diagonalizable"] = r.diagonalizable;
    j["strongly_suitable"] = r.strongly_suitable;
    j["suitability_reason"] = to_string(r.reason);
    j["weinstein_constraints"] = {{"min_b2", r.weinstein_constraints.min_b2},
                                  {"form_must_be", r.weinstein_constraints.form_must_be}};
    j["small_surface"] = {{"excluded_small_k_max", r.small_surface.excluded_small_k_max},
                          {"excludes_s2xs2", r.small_surface.excludes_s2xs2},
                          {"excluded_all_positive", r.small_surface.excluded_all_positive}};
    put_optional(j, "family", r.family);
    put_optional(j, "ambient", r.ambient);
    j["notes"] = r.notes;
}

void from_json(const Json& j, ObstructionReport& r)
{
    const auto& in = j.at("input");
    r.label = in.at("label").get<std::string>();
    r.multiplicities = in.at("multiplicities").get<std::vector<std::int64_t>>();
    r.seifert = in.at("seifert").get<std::string>();
    r.b2 = j.at("b2").get<std::int64_t>();
    r.d = Json{{"value", j.at("d")}, {"agree", j.at("d_agree")}, {"methods", j.at("d_methods")}}
              .get<floer::DInvariantResult>();
    r.max_char_square = big_from_json(j.at("max_char_square"));
    r.diagonalizable = j.at("diagonalizable").get<bool>();
    r.strongly_suitable = j.at("strongly_suitable").get<bool>();
    auto reason = parse_reason(j.at("suitability_reason").get<std::string>());
    if (!reason)
        throw DomainError("unknown suitability reason");
    r.reason = *reason;
    const auto& wc = j.at("weinstein_constraints");
    r.weinstein_constraints.min_b2 = wc.at("min_b2").get<std::int64_t>();
    r.weinstein_constraints.form_must_be = wc.at("form_must_be").get<std::string>();
    const auto& ss = j.at("small_surface");
    r.small_surface.excluded_small_k_max = ss.at("excluded_small_k_max").get<std::int64_t>();
    r.small_surface.excludes_s2xs2 = ss.at("excludes_s2xs2").get<bool>();
    r.small_surface.excluded_all_positive = ss.at("excluded_all_positive").get<bool>();
    get_optional(j, "family", r.family);
    get_optional(j, "ambient", r.ambient);
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

void to_json(Json& j, const CuspidalReport& r)
{
    j = Json::object();
    j["degree"] = r.degree;
    Json sing = Json::array();
    for (auto [p, q] : r.singularities)
        sing.push_back({p, q});
    j["singularities"] = sing;
    j["genus_sum_ok"] = r.genus_sum_ok;
    j["g"] = r.g;
    j["spinc_index"] = r.spinc_index;
    j["surgery_framing"] = r.surgery_framing;
    j["adjunction_slack_ok"] = r.adjunction_slack_ok;
}

void from_json(const Json& j, CuspidalReport& r)
{
    r.degree = j.at("degree").get<std::int64_t>();
    r.singularities.clear();
    for (const auto& s : j.at("singularities"))
        r.singularities.emplace_back(s.at(0).get<std::int64_t>(), s.at(1).get<std::int64_t>());
    r.genus_sum_ok = j.at("genus_sum_ok").get<bool>();
    r.g = j.at("g").get<std::int64_t>();
    r.spinc_index = j.at("spinc_index").get<std::int64_t>();
    r.surgery_framing = j.at("surgery_framing").get<std::int64_t>();
    r.adjunction_slack_ok = j.at("adjunction_slack_ok").get<bool>();
}

} // namespace obstruct

} // namespace brieskorn
