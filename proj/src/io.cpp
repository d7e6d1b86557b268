#include "lebound/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "lebound/errors.hpp"

namespace lebound {

namespace {

std::string trimmed(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError(std::string("bad ") + what + ": '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + ": '" + s + "'");
    }
}

} // namespace

Json poset_to_json(const Poset& p) {
    Json doc;
    doc["n"] = p.size();
    Json covers = Json::array();
    for (auto [u, v] : p.covers()) covers.push_back(Json::array({u, v}));
    doc["covers"] = std::move(covers);
    return doc;
}

Poset poset_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("covers"))
        throw ParseError("poset document needs 'n' and 'covers'");
    if (!doc["n"].is_number_integer()) throw ParseError("'n' must be an integer");
    if (!doc["covers"].is_array()) throw ParseError("'covers' must be an array of pairs");
    const int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& entry : doc["covers"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw ParseError("'covers' entries must be [u, v] integer pairs");
        pairs.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    return Poset::from_covers(n, pairs);
}

Poset poset_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> pairs;
    int n = -1;
    int max_index = -1;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        if (line.rfind("n=", 0) == 0) {
            n = parse_int(trimmed(line.substr(2)), "element count");
            continue;
        }
        const auto lt = line.find('<');
        if (lt == std::string::npos)
            throw ParseError("expected 'u<v' relation line, got '" + line + "'");
        const int u = parse_int(trimmed(line.substr(0, lt)), "element index");
        const int v = parse_int(trimmed(line.substr(lt + 1)), "element index");
        pairs.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    if (n < 0) n = max_index + 1;
    return Poset::from_covers(n, pairs);
}

Poset parse_poset(const std::string& text, PosetFormat format) {
    if (format == PosetFormat::auto_detect) {
        const auto pos = text.find_first_not_of(" \t\r\n");
        format = (pos != std::string::npos && text[pos] == '{') ? PosetFormat::json
                                                                : PosetFormat::text;
    }
    if (format == PosetFormat::json) {
        Json doc = Json::parse(text, nullptr, false);
        if (doc.is_discarded()) throw ParseError("malformed JSON poset document");
        return poset_from_json(doc);
    }
    return poset_from_text(text);
}

Poset load_poset(std::istream& in, PosetFormat format) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_poset(buf.str(), format);
}

Json partition_to_json(const Partition& p) {
    Json doc;
    doc["parts"] = p.parts();
    doc["n"] = p.n();
    return doc;
}

Partition partition_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("parts") || !doc["parts"].is_array())
        throw ParseError("partition document needs a 'parts' array");
    std::vector<int> parts;
    for (const auto& entry : doc["parts"]) {
        if (!entry.is_number_integer()) throw ParseError("'parts' entries must be integers");
        parts.push_back(entry.get<int>());
    }
    Partition p(std::move(parts));
    if (doc.contains("n") && doc["n"].is_number_integer() && doc["n"].get<int>() != p.n())
        throw ParseError("partition 'n' disagrees with the sum of 'parts'");
    return p;
}

Json multiset_to_json(const Multiset& m) {
    Json doc;
    doc["elems"] = m.elems();
    return doc;
}

Multiset multiset_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("elems") || !doc["elems"].is_array())
        throw ParseError("multiset document needs an 'elems' array");
    std::vector<int> elems;
    for (const auto& entry : doc["elems"]) {
        if (!entry.is_number_integer()) throw ParseError("'elems' entries must be integers");
        elems.push_back(entry.get<int>());
    }
    return Multiset(std::move(elems));
}

Json linear_extension_to_json(const LinearExtension& ext) {
    Json doc;
    doc["ranks"] = ext.ranks;
    return doc;
}

LinearExtension linear_extension_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("ranks") || !doc["ranks"].is_array())
        throw ParseError("linear extension document needs a 'ranks' array");
    LinearExtension ext;
    int sentinels = 0;
    for (const auto& entry : doc["ranks"]) {
        if (!entry.is_number_integer()) throw ParseError("'ranks' entries must be integers");
        const int r = entry.get<int>();
        if (r == 0) ++sentinels;
        ext.ranks.push_back(r);
    }
    if (sentinels > 1) throw ParseError("'ranks' may hold the 0 sentinel at most once");
    return ext;
}

Json bounds_report_to_json(const BoundsReport& report) {
    Json doc;
    doc["n"] = report.n;
    doc["a"] = report.a.parts();
    doc["c"] = report.c.parts();
    doc["lower"] = report.lower.str();
    doc["e"] = report.e.str();
    doc["upper"] = report.upper.str();
    doc["holds"] = report.holds;
    doc["log_ratio"] = round_12sig(report.log_ratio);
    return doc;
}

std::string format_12sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round_12sig(double v) { return std::strtod(format_12sig(v).c_str(), nullptr); }

} // namespace lebound
