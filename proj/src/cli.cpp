#include "brieskorn/cli.hpp"

#include "brieskorn/errors.hpp"
#include "brieskorn/floer.hpp"
#include "brieskorn/obstruct.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/report_json.hpp"
#include "brieskorn/stein.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace brieskorn::cli {

const char* const scan_header = "multiplicities,d_semigroup,d_plumbing,d_family,agree,diagonalizable,"
                                "strongly_suitable,reason,min_b2,b2,alpha_g_minus_1";

namespace {

using seifert::BrieskornData;

constexpr std::int64_t unset = std::numeric_limits<std::int64_t>::min();

// Plain-text rendering of a payload: "key: value" lines, nested objects
// indented, scalar arrays inline.
void render(std::ostream& os, const Json& j, int indent);

std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

bool is_flat(const Json& v)
{
    if (!v.is_array())
        return !v.is_object() && !v.is_string();
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return is_flat(x); });
}

std::string flat_text(const Json& v)
{
    if (!v.is_array())
        return scalar_text(v);
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + flat_text(v[i]);
    return s + "]";
}

void render(std::ostream& os, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (is_flat(it.value()) || !it.value().is_structured()) {
                os << pad << it.key() << ": " << flat_text(it.value()) << '\n';
            } else {
                os << pad << it.key() << ":\n";
                render(os, it.value(), indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (is_flat(item) || !item.is_structured()) {
                os << pad << "- " << flat_text(item) << '\n';
            } else {
                os << pad << "-\n";
                render(os, item, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << '\n';
    }
}

struct Output {
    bool json = false;
    std::vector<std::string> command;
    std::ostream* out = nullptr;

    void emit(const std::string& title, const Json& payload) const
    {
        if (json) {
            *out << dump(output_document(command, payload));
            return;
        }
        *out << title << '\n';
        render(*out, payload, 2);
    }
};

lattice::CharSearchOptions search_options(std::int64_t margin)
{
    lattice::CharSearchOptions o;
    if (margin != unset)
        o.box_margin = margin;
    return o;
}

int parse_sign(const std::string& s)
{
    if (s == "minus" || s == "-1" || s == "-")
        return -1;
    if (s == "plus" || s == "+1" || s == "1" || s == "+")
        return +1;
    throw DomainError("sign must be one of minus, plus, -1, +1; got '" + s + "'");
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw DomainError("singularity '" + s + "' must be written p,q");
    try {
        std::size_t used_p = 0, used_q = 0;
        std::int64_t p = std::stoll(s.substr(0, comma), &used_p);
        std::int64_t q = std::stoll(s.substr(comma + 1), &used_q);
        if (used_p != comma || used_q != s.size() - comma - 1)
            throw std::invalid_argument(s);
        return {p, q};
    } catch (const std::logic_error&) {
        throw DomainError("singularity '" + s + "' must be written p,q");
    }
}

// ---------------------------------------------------------------------------
// scan

struct ScanRanges {
    std::int64_t p_min = 2;
    std::int64_t p_max = unset;
    std::int64_t q_max = unset;
    std::int64_t pq_max = unset;
    std::int64_t n_max = unset;
    std::int64_t k_max = unset;
    std::int64_t d_min = 3;
    std::int64_t d_max = unset;
};

std::int64_t or_default(std::int64_t v, std::int64_t fallback) { return v == unset ? fallback : v; }

std::vector<BrieskornData> scan_instances(const std::string& family, const ScanRanges& r)
{
    std::vector<BrieskornData> out;
    if (family == "pq-minus" || family == "pq-plus") {
        const int sign = family == "pq-minus" ? -1 : +1;
        std::int64_t pq_max = r.pq_max, q_max = r.q_max;
        if (pq_max == unset && q_max == unset)
            pq_max = sign < 0 ? 60 : 40;
        const std::int64_t n_max = or_default(r.n_max, 1);
        const std::int64_t p_max = or_default(r.p_max, std::numeric_limits<std::int64_t>::max());
        for (std::int64_t p = std::max<std::int64_t>(2, r.p_min); p <= p_max; ++p) {
            if ((pq_max != unset && p * (p + 1) > pq_max) || (q_max != unset && p + 1 > q_max))
                break;
            for (std::int64_t q = p + 1;; ++q) {
                if ((pq_max != unset && p * q > pq_max) || (q_max != unset && q > q_max))
                    break;
                if (arith::gcd(p, q) != 1)
                    continue;
                for (std::int64_t n = 1; n <= n_max; ++n)
                    out.emplace_back(std::vector<std::int64_t>{p, q, n * p * q + sign});
            }
        }
    } else if (family == "prop31-3") {
        const std::int64_t p_max = or_default(r.p_max, 8);
        const std::int64_t k_max = or_default(r.k_max, 7);
        for (std::int64_t p = std::max<std::int64_t>(2, r.p_min); p <= p_max; ++p) {
            if (p % 2 != 0)
                continue;
            for (std::int64_t k = 1; k <= k_max; k += 2) {
                const std::int64_t q = p * k + 1;
                out.emplace_back(std::vector<std::int64_t>{p, q, p * q - 1});
            }
        }
    } else if (family == "flmn") {
        const std::int64_t d_max = or_default(r.d_max, 5);
        for (std::int64_t d = std::max<std::int64_t>(3, r.d_min); d <= d_max; ++d)
            out.emplace_back(std::vector<std::int64_t>{d - 1, d, d * d - d + 1});
    } else {
        throw DomainError("unknown scan family '" + family +
                          "' (expected pq-minus, pq-plus, prop31-3 or flmn)");
    }
    return out;
}

Json scan_row(const obstruct::ObstructionReport& r)
{
    Json row = Json::object();
    row["multiplicities"] = r.multiplicities;
    auto method = [&](floer::DMethod m) -> Json {
        if (auto v = r.d.value_of(m))
            return *v;
        return nullptr;
    };
    row["d_semigroup"] = method(floer::DMethod::semigroup);
    row["d_plumbing"] = method(floer::DMethod::plumbing);
    row["d_family"] = method(floer::DMethod::family_closed_form);
    row["agree"] = r.d.agree;
    row["diagonalizable"] = r.diagonalizable;
    row["strongly_suitable"] = r.strongly_suitable;
    row["reason"] = to_string(r.reason);
    row["min_b2"] = r.weinstein_constraints.min_b2;
    row["b2"] = r.b2;
    if (r.family && r.family->alpha_g_minus_1)
        row["alpha_g_minus_1"] = *r.family->alpha_g_minus_1;
    else
        row["alpha_g_minus_1"] = nullptr;
    return row;
}

std::string csv_line(const Json& row)
{
    std::ostringstream os;
    bool first = true;
    std::istringstream cols(scan_header);
    std::string col;
    while (std::getline(cols, col, ',')) {
        if (!first)
            os << ',';
        first = false;
        const Json& v = row.at(col);
        if (v.is_null())
            continue;
        if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? " " : "") << v[i].get<std::int64_t>();
        } else if (v.is_boolean()) {
            os << (v.get<bool>() ? "true" : "false");
        } else {
            os << scalar_text(v);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariants of Brieskorn homology spheres and Weinstein embedding obstructions",
                 "brieskorn"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Output output;
    output.command = args;
    output.out = &out;

    std::vector<std::int64_t> mult;
    std::int64_t margin = unset;
    std::int64_t p = 0, q = 0, n = 0, degree = 0, limit = 16, bound = 0, x = unset;
    std::string sign_text, family;
    std::vector<std::string> pairs;
    bool dot = false, csv = false;
    ScanRanges ranges;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", output.json, "Emit JSON"); };
    auto add_margin = [&](CLI::App* sub) {
        sub->add_option("--char-box-margin", margin,
                        "Search the characteristic box widened by this even margin instead of "
                        "the exact global search");
    };
    auto add_mult = [&](CLI::App* sub) {
        sub->add_option("multiplicities", mult, "Pairwise coprime multiplicities")
            ->required()
            ->expected(3, 64);
    };

    auto* analyze = app.add_subcommand("analyze", "Full obstruction report for Sigma(p1,...,pn)");
    add_mult(analyze);
    add_json(analyze);
    add_margin(analyze);

    auto* fam = app.add_subcommand("family", "Report for Sigma(p, q, npq + sign)");
    fam->add_option("p", p)->required();
    fam->add_option("q", q)->required();
    fam->add_option("n", n)->required();
    fam->add_option("--sign", sign_text, "minus, plus, -1 or +1")->required();
    add_json(fam);
    add_margin(fam);

    auto* plumb = app.add_subcommand("plumbing", "Plumbing graph and intersection form");
    add_mult(plumb);
    add_json(plumb);
    plumb->add_flag("--dot", dot, "Emit the graph in DOT format");

    auto* dinv = app.add_subcommand("dinv", "d-invariant by every applicable method");
    add_mult(dinv);
    add_json(dinv);
    add_margin(dinv);

    auto* semi = app.add_subcommand("semigroup", "Semigroup gaps and alpha table of T(p,q)");
    semi->add_option("p", p)->required();
    semi->add_option("q", q)->required();
    add_json(semi);

    auto* rot = app.add_subcommand("rot", "Rotation vectors of the Legendrian plumbing diagram");
    add_mult(rot);
    add_json(rot);
    rot->add_option("--limit", limit, "Maximum number of vectors listed");

    auto* markov = app.add_subcommand("markov", "Markov numbers below a bound");
    markov->add_option("x", x, "Test membership of x instead of listing");
    markov->add_option("--markov-bound", bound, "Largest triple entry searched")->required();
    add_json(markov);

    auto* cusp = app.add_subcommand("cuspidal", "Degree-genus checks for a rational cuspidal curve");
    cusp->add_option("degree", degree)->required();
    cusp->add_option("singularities", pairs, "Cusps as p,q")->required();
    add_json(cusp);

    auto* flmn = app.add_subcommand("flmn", "Report for Sigma(d-1, d, d^2-d+1)");
    flmn->add_option("degree", degree)->required();
    add_json(flmn);
    add_margin(flmn);

    auto* scan = app.add_subcommand("scan", "Batch table over a family");
    scan->add_option("family", family, "pq-minus, pq-plus, prop31-3 or flmn")->required();
    scan->add_flag("--csv", csv, "Emit CSV (the default)");
    add_json(scan);
    add_margin(scan);
    scan->add_option("--p-min", ranges.p_min);
    scan->add_option("--p-max", ranges.p_max);
    scan->add_option("--q-max", ranges.q_max);
    scan->add_option("--pq-max", ranges.pq_max);
    scan->add_option("--n-max", ranges.n_max);
    scan->add_option("--k-max", ranges.k_max);
    scan->add_option("--d-min", ranges.d_min);
    scan->add_option("--d-max", ranges.d_max);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        if (code == 0)
            return exit_ok;
        err << app.help();
        return exit_invalid;
    }

    const auto options = search_options(margin);

    if (analyze->parsed()) {
        auto r = obstruct::analyze(BrieskornData(mult), options);
        output.emit(r.label, r);
    } else if (fam->parsed()) {
        auto r = obstruct::family_verdict(p, q, n, parse_sign(sign_text), options);
        output.emit(r.label, r);
    } else if (plumb->parsed()) {
        BrieskornData b(mult);
        auto sd = seifert::seifert_invariants(b);
        auto g = plumbing::build_plumbing(sd);
        if (dot) {
            if (output.json)
                throw DomainError("--dot and --json are mutually exclusive");
            out << plumbing::to_dot(g);
        } else {
            Json payload;
            payload["label"] = b.label();
            payload["seifert"] = seifert::to_string(sd);
            payload["graph"] = g;
            payload["form"] = plumbing::form_properties(plumbing::intersection_matrix(g));
            payload["weights"] = g.weights();
            output.emit(b.label(), payload);
        }
    } else if (dinv->parsed()) {
        BrieskornData b(mult);
        auto d = floer::d_invariant(b, options);
        Json payload = d;
        payload["label"] = b.label();
        output.emit(b.label(), payload);
    } else if (semi->parsed()) {
        auto s = floer::semigroup_profile(p, q);
        Json payload = s;
        std::vector<std::int64_t> alphas;
        for (std::int64_t j = 0; j <= s.frobenius(); ++j)
            alphas.push_back(floer::alpha(s, j));
        payload["alpha"] = alphas;
        payload["alpha_g_minus_1"] = floer::alpha(s, s.genus - 1);
        payload["d_sigma_pq_minus_1"] = floer::d_torus_surgery_minus(p, q);
        payload["reduced_kernel_degrees"] = floer::reduced_kernel_degrees(p, q);
        output.emit("S(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")", payload);
    } else if (rot->parsed()) {
        if (limit < 1)
            throw DomainError("--limit must be positive");
        BrieskornData b(mult);
        auto g = plumbing::build_plumbing(seifert::seifert_invariants(b));
        auto profile = stein::rot_profile(g);
        auto e = stein::enumerate_rot_vectors(g, static_cast<std::uint64_t>(limit));
        Json payload = profile;
        payload["label"] = b.label();
        payload["vectors"] = e.vectors;
        payload["truncated"] = e.truncated;
        output.emit(b.label(), payload);
    } else if (markov->parsed()) {
        Json payload;
        payload["bound"] = bound;
        if (x != unset) {
            bool member = obstruct::markov_member(x, bound);
            payload["x"] = x;
            payload["member"] = member;
            payload["status"] = member ? "markov number" : "not found below bound";
        } else {
            auto nums = obstruct::markov_numbers(bound);
            payload["markov_numbers"] = std::vector<std::int64_t>(nums.begin(), nums.end());
        }
        output.emit("Markov numbers <= " + std::to_string(bound), payload);
    } else if (cusp->parsed()) {
        std::vector<std::pair<std::int64_t, std::int64_t>> sing;
        for (const auto& s : pairs)
            sing.push_back(parse_pair(s));
        auto r = obstruct::cuspidal_check(degree, sing);
        output.emit("degree " + std::to_string(degree) + " cuspidal curve", r);
    } else if (flmn->parsed()) {
        auto r = obstruct::flmn_family_report(degree, options);
        output.emit(r.label, r);
    } else if (scan->parsed()) {
        if (csv && output.json)
            throw DomainError("--csv and --json are mutually exclusive");
        Json rows = Json::array();
        for (const auto& b : scan_instances(family, ranges))
            rows.push_back(scan_row(obstruct::analyze(b, options)));
        if (output.json) {
            out << dump(output_document(args, rows));
        } else {
            out << scan_header << '\n';
            for (const auto& row : rows)
                out << csv_line(row) << '\n';
        }
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return dispatch(args, out, err);
    } catch (const SearchBudgetError& e) {
        err << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace brieskorn::cli
