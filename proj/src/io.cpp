#include "hardy/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hardy {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
    }
}

Rational coefficient_part(const Json& term, const char* key) {
    auto it = term.find(key);
    if (it == term.end() || it->is_null()) return Rational(0);
    if (it->is_string()) return parse_rational(it->get<std::string>());
    if (it->is_number_integer()) return parse_rational(it->dump());
    if (it->is_number_float()) {
        // The shortest decimal form is what the author wrote; take it exactly.
        return parse_rational(format_double(it->get<double>()));
    }
    fail(ErrorKind::parse, std::string("field \"") + key + "\" must be a number or a rational string");
}

const Json& terms_array(const Json& doc) {
    require(doc.is_object(), ErrorKind::parse, "polynomial JSON must be an object");
    auto it = doc.find("terms");
    require(it != doc.end() && it->is_array(), ErrorKind::parse, "polynomial JSON needs a \"terms\" array");
    return *it;
}

template<class Key>
void read_scale(const Json& doc, SparseSeries<Key>& out) {
    auto it = doc.find("scale_squared");
    if (it == doc.end()) return;
    Rational s = it->is_string() ? parse_rational(it->get<std::string>()) : parse_rational(it->dump());
    require(sgn(s) > 0, ErrorKind::parse, "scale_squared must be positive");
    if (!out.empty()) out.set_scale_squared(std::move(s));
}

void write_coefficients(Json& term, const ExactComplex& c) {
    term["re"] = to_string(c.re);
    term["im"] = to_string(c.im);
}

template<class Key>
Json document(const SparseSeries<Key>& poly, Json terms) {
    Json doc;
    doc["terms"] = std::move(terms);
    if (poly.scale_squared() != 1) doc["scale_squared"] = to_string(poly.scale_squared());
    return doc;
}

Json optional_double(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string optional_csv(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

template<class T>
std::string optional_csv_int(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string join_flags(const std::vector<std::string>& flags) {
    if (flags.empty()) return "none";
    std::string out;
    for (const auto& f : flags) {
        if (!out.empty()) out += ';';
        out += f;
    }
    return out;
}

void put_mc_fields(Json& j, const std::optional<double>& se, const std::optional<std::uint64_t>& samples,
                   const std::optional<std::uint64_t>& seed) {
    if (se) j["stderr"] = *se;
    if (samples) j["samples"] = *samples;
    if (seed) j["seed"] = *seed;
}

} // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string dirichlet_to_json(const DirichletPoly& d) {
    Json terms = Json::array();
    for (const auto& [n, c] : d.terms()) {
        Json t;
        t["n"] = n;
        write_coefficients(t, c);
        terms.push_back(std::move(t));
    }
    return document(d, std::move(terms)).dump();
}

DirichletPoly dirichlet_from_json(std::string_view text) {
    Json doc = parse_document(text);
    DirichletPoly out;
    std::set<std::uint64_t> seen;
    try {
        for (const auto& t : terms_array(doc)) {
            require(t.is_object(), ErrorKind::parse, "each term must be an object");
            auto n = t.find("n");
            require(n != t.end() && n->is_number_unsigned() && n->get<std::uint64_t>() >= 1, ErrorKind::parse,
                    "term field \"n\" must be a positive integer");
            std::uint64_t key = n->get<std::uint64_t>();
            require(seen.insert(key).second, ErrorKind::parse, "duplicate term n = " + std::to_string(key));
            out.add_term(key, ExactComplex(coefficient_part(t, "re"), coefficient_part(t, "im")));
        }
        read_scale(doc, out);
    } catch (const Json::exception& e) {
        fail(ErrorKind::parse, std::string("invalid polynomial JSON: ") + e.what());
    }
    return out;
}

std::string trig_to_json(const TrigPoly& p) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : p.terms()) {
        Json a = Json::array();
        for (const auto& e : alpha.entries()) a.push_back(Json::array({e.position, e.exponent}));
        Json t;
        t["alpha"] = std::move(a);
        write_coefficients(t, c);
        terms.push_back(std::move(t));
    }
    return document(p, std::move(terms)).dump();
}

TrigPoly trig_from_json(std::string_view text) {
    Json doc = parse_document(text);
    TrigPoly out;
    std::set<MultiIndex> seen;
    try {
        for (const auto& t : terms_array(doc)) {
            require(t.is_object(), ErrorKind::parse, "each term must be an object");
            auto a = t.find("alpha");
            require(a != t.end() && a->is_array(), ErrorKind::parse, "term field \"alpha\" must be an array");
            std::vector<IndexEntry> entries;
            for (const auto& pair : *a) {
                require(pair.is_array() && pair.size() == 2 && pair[0].is_number_unsigned() &&
                            pair[1].is_number_unsigned(),
                        ErrorKind::parse, "alpha entries must be [position, exponent] pairs");
                entries.push_back({pair[0].get<std::uint32_t>(), pair[1].get<std::uint32_t>()});
            }
            MultiIndex key;
            try {
                key = MultiIndex(std::move(entries));
            } catch (const Error& e) {
                fail(ErrorKind::parse, e.what());
            }
            require(seen.insert(key).second, ErrorKind::parse, "duplicate term alpha");
            out.add_term(key, ExactComplex(coefficient_part(t, "re"), coefficient_part(t, "im")));
        }
        read_scale(doc, out);
    } catch (const Json::exception& e) {
        fail(ErrorKind::parse, std::string("invalid polynomial JSON: ") + e.what());
    }
    return out;
}

DirichletPoly read_dirichlet_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return dirichlet_from_json(buf.str());
}

std::string to_json(const NormEstimate& e) {
    Json j;
    j["value"] = e.value;
    j["p"] = e.p;
    j["method"] = to_string(e.method);
    put_mc_fields(j, e.std_error, e.samples, e.seed);
    if (e.power) j["power"] = to_string(*e.power);
    return j.dump();
}

std::string to_json(const RatioEstimate& e) {
    Json j;
    j["value"] = e.value;
    j["q"] = e.q;
    j["p"] = e.p;
    j["method"] = to_string(e.method);
    put_mc_fields(j, e.std_error, e.samples, e.seed);
    if (e.q_power) j["q_power"] = to_string(*e.q_power);
    if (e.p_power) j["p_power"] = to_string(*e.p_power);
    return j.dump();
}

std::string to_json(const BoundReport& r) {
    Json j;
    j["x"] = r.x;
    j["p"] = r.p;
    j["q"] = r.q;
    j["y_used"] = r.y_used;
    j["smooth_count"] = r.smooth_count ? Json(*r.smooth_count) : Json(nullptr);
    j["log_smooth_count"] = optional_double(r.log_smooth_count);
    j["hyper_factor"] = r.hyper_factor;
    j["total_upper"] = r.total_upper;
    j["asymptote"] = optional_double(r.asymptote);
    j["certified"] = r.certified;
    return j.dump();
}

std::string to_json(const LowerBoundReport& r) {
    const auto& ep = r.params;
    Json j;
    j["x"] = ep.x;
    j["p"] = r.p;
    j["q"] = r.q;
    j["k"] = ep.k;
    j["n"] = ep.n;
    j["root"] = ep.root;
    j["f"] = ep.f;
    j["in_validity_range"] = ep.in_validity_range;
    j["hypothesis_ok"] = ep.hypothesis_ok;
    j["ratio"] = r.ratio.value;
    j["ratio_method"] = to_string(r.ratio.method);
    put_mc_fields(j, r.ratio.std_error, r.ratio.samples, r.ratio.seed);
    j["log_ratio_per_k"] = r.log_ratio_per_k;
    j["target"] = r.target;
    j["asymptote"] = optional_double(r.asymptote);
    j["bracket_width"] = optional_double(r.bracket_width);
    j["chain_m"] = r.chain_m;
    j["chain_lhs"] = r.chain_lhs;
    j["chain_rhs"] = r.chain_rhs;
    j["chain_exact_holds"] = r.chain_exact_holds ? Json(*r.chain_exact_holds) : Json(nullptr);
    j["flags"] = r.flags;
    return j.dump();
}

std::string to_json(const ConditionSeries& s) {
    Json j;
    j["n_first"] = s.rows.empty() ? 0 : s.rows.front().n;
    j["n_last"] = s.rows.empty() ? 0 : s.rows.back().n;
    j["partial_sum"] = s.rows.empty() ? 0.0 : s.rows.back().partial_sum;
    j["last_term"] = s.rows.empty() ? 0.0 : s.rows.back().term;
    j["tail_ratio"] = s.tail_ratio;
    j["trend"] = to_string(s.trend);
    return j.dump();
}

std::string csv_header(const NormEstimate&) { return "value,p,method,stderr,samples,seed"; }

std::string csv_row(const NormEstimate& e) {
    return format_double(e.value) + ',' + format_double(e.p) + ',' + to_string(e.method) + ',' +
           optional_csv(e.std_error) + ',' + optional_csv_int(e.samples) + ',' + optional_csv_int(e.seed);
}

std::string csv_header(const RatioEstimate&) { return "value,q,p,method,stderr,samples,seed"; }

std::string csv_row(const RatioEstimate& e) {
    return format_double(e.value) + ',' + format_double(e.q) + ',' + format_double(e.p) + ',' +
           to_string(e.method) + ',' + optional_csv(e.std_error) + ',' + optional_csv_int(e.samples) + ',' +
           optional_csv_int(e.seed);
}

std::string csv_header(const BoundReport&) {
    return "x,p,q,y_used,smooth_count,log_smooth_count,hyper_factor,total_upper,asymptote,certified";
}

std::string csv_row(const BoundReport& r) {
    return format_double(r.x) + ',' + format_double(r.p) + ',' + format_double(r.q) + ',' +
           format_double(r.y_used) + ',' + optional_csv_int(r.smooth_count) + ',' +
           optional_csv(r.log_smooth_count) + ',' + format_double(r.hyper_factor) + ',' +
           format_double(r.total_upper) + ',' + optional_csv(r.asymptote) + ',' +
           (r.certified ? "true" : "false");
}

std::string csv_header(const LowerBoundReport&) {
    return "x,p,q,k,n,ratio,ratio_method,stderr,target,asymptote,flags,seed";
}

std::string csv_row(const LowerBoundReport& r) {
    return format_double(r.params.x) + ',' + format_double(r.p) + ',' + format_double(r.q) + ',' +
           std::to_string(r.params.k) + ',' + std::to_string(r.params.n) + ',' + format_double(r.ratio.value) +
           ',' + to_string(r.ratio.method) + ',' + optional_csv(r.ratio.std_error) + ',' +
           format_double(r.target) + ',' + optional_csv(r.asymptote) + ',' + join_flags(r.flags) + ',' +
           optional_csv_int(r.ratio.seed);
}

std::string series_csv(const ConditionSeries& s) {
    std::string out = "n,term,partial_sum\n";
    for (const auto& row : s.rows)
        out += std::to_string(row.n) + ',' + format_double(row.term) + ',' + format_double(row.partial_sum) + '\n';
    return out;
}

} // namespace hardy
