#include "riocf/io.hpp"

#include "riocf/errors.hpp"
#include "riocf/expr.hpp"

namespace riocf {

namespace {

CoeffTrack track_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tail"))
        throw ParseError("BadCfJson", "coefficient track needs a tail");
    CoeffTrack t;
    if (j.contains("prefix")) {
        for (const auto& s : j.at("prefix")) t.prefix.push_back(parse_ypoly(s.get<std::string>()));
    }
    const Json& tail = j.at("tail");
    if (tail.is_string()) {
        t.cycle.push_back(parse_ypoly(tail.get<std::string>()));
    } else if (tail.is_array() && !tail.empty()) {
        for (const auto& s : tail) t.cycle.push_back(parse_ypoly(s.get<std::string>()));
    } else {
        throw ParseError("BadCfJson", "tail must be a string or a nonempty array");
    }
    return t;
}

Json track_to_json(const CoeffTrack& t) {
    Json j = Json::object();
    Json prefix = Json::array();
    for (const YPoly& p : t.prefix) prefix.push_back(p.to_string());
    j["prefix"] = std::move(prefix);
    if (t.cycle.size() == 1) {
        j["tail"] = t.cycle[0].to_string();
    } else {
        Json cyc = Json::array();
        for (const YPoly& p : t.cycle) cyc.push_back(p.to_string());
        j["tail"] = std::move(cyc);
    }
    return j;
}

}  // namespace

Json triangle_to_json(const Triangle& t, const std::optional<std::string>& name) {
    Json j = Json::object();
    if (name) {
        j["name"] = *name;
    } else {
        j["name"] = nullptr;
    }
    j["order"] = t.order();
    j["ring"] = t.rational_entries() ? "Q" : "Q[y]";
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r = Json::array();
        for (const YPoly& e : row) r.push_back(e.to_string());
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

Triangle triangle_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
        throw ParseError("BadTriangleJson", "expected an object with a rows array");
    Triangle t;
    try {
        for (const auto& row : j.at("rows")) {
            std::vector<YPoly> r;
            for (const auto& e : row) r.push_back(parse_ypoly(e.get<std::string>()));
            t.rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("BadTriangleJson", e.what());
    }
    for (size_t n = 0; n < t.order(); ++n) {
        if (t.rows[n].size() != n + 1)
            throw ParseError("BadTriangleJson",
                             "row " + std::to_string(n) + " is not lower triangular");
    }
    return t;
}

Json cfrac_to_json(const CFrac& c) {
    Json j = Json::object();
    switch (c.kind) {
        case CFKind::Stieltjes: j["kind"] = "stieltjes"; break;
        case CFKind::Jacobi: j["kind"] = "jacobi"; break;
        case CFKind::Thron: j["kind"] = "thron"; break;
    }
    j["a"] = track_to_json(c.alpha);
    if (c.kind != CFKind::Stieltjes) j["b"] = track_to_json(c.beta);
    return j;
}

CFrac cfrac_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("a"))
        throw ParseError("BadCfJson", "expected an object with kind and a");
    try {
        std::string kind = j.at("kind").get<std::string>();
        CoeffTrack a = track_from_json(j.at("a"));
        if (kind == "stieltjes") return stieltjes_cf(std::move(a));
        if (!j.contains("b")) throw ParseError("BadCfJson", kind + " needs a b track");
        CoeffTrack b = track_from_json(j.at("b"));
        if (kind == "jacobi") return jacobi_cf(std::move(a), std::move(b));
        if (kind == "thron") return thron_cf(std::move(a), std::move(b));
        throw ParseError("BadCfJson", "unknown kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("BadCfJson", e.what());
    }
}

Json sequence_to_json(const std::vector<YPoly>& terms) {
    Json j = Json::object();
    j["order"] = terms.size();
    Json arr = Json::array();
    for (const YPoly& t : terms) arr.push_back(t.to_string());
    j["terms"] = std::move(arr);
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("BadJson", e.what());
    }
}

}  // namespace riocf
