#include "superschur/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace superschur::io {

namespace {

std::size_t require_count(const Json& j, const char* key, const std::string& origin) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(origin + ": missing or invalid \"" + key + "\" (nonnegative integer)");
    return j[key].get<std::size_t>();
}

} // namespace

SuperAlgebra parse_algebra(const std::string& text, const std::string& origin) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!j.is_object())
        throw ParseError(origin + ": top-level value must be an object");
    if (!j.contains("format") || j["format"] != "superalgebra")
        throw ParseError(origin + ": missing or unexpected \"format\" (want \"superalgebra\")");
    if (!j.contains("version") || j["version"] != 1)
        throw ParseError(origin + ": unsupported \"version\" (want 1)");
    GradedDim dim{require_count(j, "even", origin), require_count(j, "odd", origin)};
    SuperAlgebra alg(dim);
    if (!j.contains("brackets"))
        return alg;
    if (!j["brackets"].is_array())
        throw ParseError(origin + ": \"brackets\" must be an array");
    std::size_t idx = 0;
    for (const auto& rec : j["brackets"]) {
        std::string where = origin + ": brackets[" + std::to_string(idx) + "]";
        ++idx;
        if (!rec.is_object() || !rec.contains("i") || !rec.contains("j") ||
            !rec["i"].is_number_unsigned() || !rec["j"].is_number_unsigned())
            throw ParseError(where + ": record needs integer fields \"i\" and \"j\"");
        std::size_t i = rec["i"].get<std::size_t>();
        std::size_t jdx = rec["j"].get<std::size_t>();
        if (i >= dim.total() || jdx >= dim.total())
            throw ParseError(where + ": basis index out of range");
        if (alg.table().count(PairKey{i, jdx}))
            throw ParseError(where + ": duplicate bracket pair");
        if (!rec.contains("coeffs") || !rec["coeffs"].is_object())
            throw ParseError(where + ": record needs object field \"coeffs\"");
        std::vector<Rational> coeffs(dim.total());
        for (const auto& [key, value] : rec["coeffs"].items()) {
            std::size_t t = 0;
            try {
                std::size_t pos = 0;
                unsigned long parsed = std::stoul(key, &pos);
                if (pos != key.size())
                    throw std::invalid_argument(key);
                t = parsed;
            } catch (const std::exception&) {
                throw ParseError(where + ": coefficient key \"" + key +
                                 "\" is not a basis index");
            }
            if (t >= dim.total())
                throw ParseError(where + ": coefficient index " + std::to_string(t) +
                                 " out of range");
            if (!value.is_string())
                throw ParseError(where + ": coefficient values must be rational strings");
            auto r = Rational::parse(value.get<std::string>());
            if (!r)
                throw ParseError(where + ": \"" + value.get<std::string>() +
                                 "\" is not an exact rational");
            coeffs[t] = *r;
        }
        try {
            alg.set_bracket(i, jdx, coeffs);
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return alg;
}

SuperAlgebra load_algebra(const std::string& path) {
    return parse_algebra(read_file(path), path);
}

std::string format_algebra(const SuperAlgebra& alg) {
    Json j;
    j["format"] = "superalgebra";
    j["version"] = 1;
    j["even"] = alg.dim().even;
    j["odd"] = alg.dim().odd;
    Json brackets = Json::array();
    for (const auto& [key, w] : alg.table()) {
        Json rec;
        rec["i"] = key.i;
        rec["j"] = key.j;
        Json coeffs = Json::object();
        for (std::size_t t = 0; t < w.size(); ++t)
            if (!w[t].is_zero())
                coeffs[std::to_string(t)] = w[t].str();
        rec["coeffs"] = std::move(coeffs);
        brackets.push_back(std::move(rec));
    }
    j["brackets"] = std::move(brackets);
    return j.dump(2) + "\n";
}

void write_algebra(const std::string& path, const SuperAlgebra& alg) {
    write_file(path, format_algebra(alg));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4)
        out.push_back(hex[(h >> shift) & 0xF]);
    return out;
}

Json make_report(const std::string& command) {
    Json j;
    j["format"] = "superschur-report";
    j["version"] = 1;
    j["tool"] = kToolVersion;
    j["command"] = command;
    return j;
}

std::string render_report(const Json& report) {
    return report.dump(2) + "\n";
}

Json validation_to_json(const ValidationReport& rep) {
    Json j;
    j["ok"] = rep.ok && rep.structural.empty();
    j["structural"] = rep.structural;
    Json jac = Json::array();
    for (const auto& v : rep.jacobi) {
        Json rec;
        rec["triple"] = {v.triple[0], v.triple[1], v.triple[2]};
        Json value = Json::object();
        for (std::size_t t = 0; t < v.value.size(); ++t)
            if (!v.value[t].is_zero())
                value[std::to_string(t)] = v.value[t].str();
        rec["value"] = std::move(value);
        jac.push_back(std::move(rec));
    }
    j["jacobi"] = std::move(jac);
    return j;
}

namespace {

Json dim_to_json(const GradedDim& d) {
    Json j;
    j["even"] = d.even;
    j["odd"] = d.odd;
    return j;
}

} // namespace

Json profile_to_json(const StructureProfile& sp) {
    Json j;
    j["dim"] = dim_to_json(sp.dim);
    j["derived"] = dim_to_json(sp.derived_dim);
    j["center"] = dim_to_json(sp.center_dim);
    j["nilpotent"] = sp.nilpotent;
    if (sp.nilpotency_class)
        j["nilpotency_class"] = *sp.nilpotency_class;
    else
        j["nilpotency_class"] = nullptr;
    if (sp.split_indices)
        j["split_indices"] = {sp.split_indices->first, sp.split_indices->second};
    else
        j["split_indices"] = nullptr;
    return j;
}

Json multiplier_to_json(const MultiplierResult& mr) {
    Json j;
    j["total"] = mr.total;
    j["even"] = mr.even;
    j["odd"] = mr.odd;
    j["dim_ker_d2"] = mr.dim_ker_d2;
    j["rank_d3"] = mr.rank_d3;
    return j;
}

Json verdict_to_json(const verify::ClaimVerdict& cv) {
    Json j;
    j["claim"] = cv.claim_id;
    j["subject"] = cv.subject;
    Json data = Json::object();
    for (const auto& [k, v] : cv.data)
        data[k] = v;
    j["data"] = std::move(data);
    j["slack"] = cv.slack ? Json(cv.slack->str()) : Json(nullptr);
    j["verdict"] = verify::verdict_name(cv.verdict);
    j["note"] = cv.note;
    return j;
}

Json verdicts_to_json(const std::vector<verify::ClaimVerdict>& verdicts) {
    Json arr = Json::array();
    for (const auto& cv : verdicts)
        arr.push_back(verdict_to_json(cv));
    verify::SuiteSummary sum = verify::summarize(verdicts);
    Json j;
    j["summary"] = {{"pass", sum.pass},
                    {"fail", sum.fail},
                    {"discrepancy", sum.discrepancy},
                    {"not_applicable", sum.not_applicable}};
    j["verdicts"] = std::move(arr);
    return j;
}

} // namespace superschur::io
