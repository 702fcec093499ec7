#include "podq/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace podq {

namespace {

using nlohmann::json;

}  // namespace

std::string series_to_json(const Series& s) {
    json j;
    j["order"] = s.order();
    if (s.modulus())
        j["modulus"] = *s.modulus();
    else
        j["modulus"] = nullptr;
    json coeffs = json::array();
    for (i64 n = 0; n <= s.order(); ++n) coeffs.push_back(s.coeff_str(n));
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

Series series_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("series JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("series JSON: need an object with order and coeffs");
    i64 order = j.at("order").get<i64>();
    std::optional<i64> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null())
        modulus = j.at("modulus").get<i64>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<i64>(coeffs.size()) != order + 1)
        throw std::invalid_argument("series JSON: coeffs must hold exactly order+1 entries");
    std::vector<mpz_class> values;
    values.reserve(coeffs.size());
    for (const json& c : coeffs) {
        if (!c.is_string())
            throw std::invalid_argument("series JSON: coefficients must be decimal strings");
        mpz_class v;
        if (mpz_set_str(v.get_mpz_t(), c.get<std::string>().c_str(), 10) != 0)
            throw std::invalid_argument("series JSON: malformed decimal coefficient");
        values.push_back(std::move(v));
    }
    return Series::from_coeffs(std::move(values), modulus);
}

std::string check_report_to_json_line(const CheckReport& rep) {
    json j;
    j["check"] = rep.name;
    j["order"] = rep.order;
    j["pass"] = rep.pass;
    if (rep.counterexample) {
        j["counterexample"] = {{"n", rep.counterexample->n},
                               {"expected", rep.counterexample->expected},
                               {"actual", rep.counterexample->actual}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["ms"] = rep.ms;
    return j.dump();
}

std::string stat_table_to_csv(const StatTable& table) {
    std::ostringstream out;
    out << "stat,m,n,count\n";
    // counts is keyed (m, n); emit ordered by weight, then statistic value.
    std::map<std::pair<i64, i64>, i64> by_weight;
    for (const auto& [key, c] : table.counts) by_weight[{key.second, key.first}] = c;
    for (const auto& [key, c] : by_weight)
        out << stat_name(table.tag) << ',' << key.second << ',' << key.first << ',' << c << '\n';
    return out.str();
}

std::string stat_table_to_json_lines(const StatTable& table) {
    std::ostringstream out;
    std::map<std::pair<i64, i64>, i64> by_weight;
    for (const auto& [key, c] : table.counts) by_weight[{key.second, key.first}] = c;
    for (const auto& [key, c] : by_weight) {
        json j;
        j["stat"] = stat_name(table.tag);
        j["m"] = key.second;
        j["n"] = key.first;
        j["count"] = c;
        out << j.dump() << '\n';
    }
    return out.str();
}

}  // namespace podq
