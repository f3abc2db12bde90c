#include "bundling/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace bundling {

const char* color_name(Color c) {
    switch (c) {
        case Color::blue: return "blue";
        case Color::red: return "red";
        default: return "none";
    }
}

int Arrangement::string_index(int id) const {
    for (size_t i = 0; i < strings.size(); ++i)
        if (strings[i].id == id) return static_cast<int>(i);
    return -1;
}

int Arrangement::crossing_index(int id) const {
    for (size_t i = 0; i < crossings.size(); ++i)
        if (crossings[i].id == id) return static_cast<int>(i);
    return -1;
}

bool Arrangement::is_colored() const {
    return !strings.empty() &&
           std::all_of(strings.begin(), strings.end(),
                       [](const StringCurve& s) { return s.color != Color::none; });
}

Arrangement parse_instance(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("strings") || !j.contains("crossings"))
        throw ParseError("instance must be an object with \"strings\" and \"crossings\"");

    Arrangement arr;
    for (const auto& js : j.at("strings")) {
        StringCurve s;
        s.id = js.at("id").get<int>();
        if (js.contains("color") && !js.at("color").is_null()) {
            std::string c = js.at("color").get<std::string>();
            if (c == "blue")
                s.color = Color::blue;
            else if (c == "red")
                s.color = Color::red;
            else
                throw ParseError("string " + std::to_string(s.id) + ": unknown color \"" + c + "\"");
        }
        s.crossings = js.at("crossings").get<std::vector<int>>();
        if (js.contains("closed")) s.closed = js.at("closed").get<bool>();
        arr.strings.push_back(std::move(s));
    }
    for (const auto& jc : j.at("crossings")) {
        Crossing c;
        c.id = jc.at("id").get<int>();
        const auto& pair = jc.at("strings");
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("crossing " + std::to_string(c.id) + ": crossing arity (needs exactly 2 strings)");
        c.string_a = pair[0].get<int>();
        c.string_b = pair[1].get<int>();
        c.sign = jc.at("sign").get<int>();
        if (c.sign != 1 && c.sign != -1)
            throw ParseError("crossing " + std::to_string(c.id) + ": sign must be 1 or -1");
        arr.crossings.push_back(std::move(c));
    }

    std::sort(arr.strings.begin(), arr.strings.end(),
              [](const StringCurve& a, const StringCurve& b) { return a.id < b.id; });
    std::sort(arr.crossings.begin(), arr.crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.id < b.id; });

    // Integrity: unique ids.
    for (size_t i = 1; i < arr.strings.size(); ++i)
        if (arr.strings[i].id == arr.strings[i - 1].id)
            throw ParseError("duplicate string id " + std::to_string(arr.strings[i].id));
    for (size_t i = 1; i < arr.crossings.size(); ++i)
        if (arr.crossings[i].id == arr.crossings[i - 1].id)
            throw ParseError("duplicate crossing id " + std::to_string(arr.crossings[i].id));

    // Integrity: crossings reference existing strings, and each crossing id
    // appears in the sequences of exactly its two strings.
    std::map<int, std::vector<int>> seen_in;  // crossing id -> string ids listing it
    for (const auto& s : arr.strings)
        for (int cid : s.crossings) {
            if (arr.crossing_index(cid) < 0)
                throw ParseError("string " + std::to_string(s.id) + ": dangling crossing reference " +
                                 std::to_string(cid));
            seen_in[cid].push_back(s.id);
        }
    for (const auto& c : arr.crossings) {
        // a == b encodes a self-intersection; it parses but is rejected by
        // validate_pseudosegments.
        for (int sid : {c.string_a, c.string_b})
            if (arr.string_index(sid) < 0)
                throw ParseError("crossing " + std::to_string(c.id) + ": dangling string reference " +
                                 std::to_string(sid));
        auto it = seen_in.find(c.id);
        std::vector<int> expect{std::min(c.string_a, c.string_b), std::max(c.string_a, c.string_b)};
        std::vector<int> got = (it == seen_in.end()) ? std::vector<int>{} : it->second;
        std::sort(got.begin(), got.end());
        if (got != expect)
            throw ParseError("crossing " + std::to_string(c.id) +
                             ": must appear exactly once in each of its two strings");
    }

    // Drop uncrossed strings (they contribute nothing to any bundling).
    std::vector<StringCurve> kept;
    for (auto& s : arr.strings) {
        if (s.crossings.empty())
            arr.warnings.push_back("dropped uncrossed string " + std::to_string(s.id));
        else
            kept.push_back(std::move(s));
    }
    arr.strings = std::move(kept);
    return arr;
}

std::string to_json(const Arrangement& arr) {
    nlohmann::ordered_json j;
    j["strings"] = nlohmann::ordered_json::array();
    for (const auto& s : arr.strings) {
        nlohmann::ordered_json js;
        js["id"] = s.id;
        if (s.color == Color::none)
            js["color"] = nullptr;
        else
            js["color"] = color_name(s.color);
        js["crossings"] = s.crossings;
        if (s.closed) js["closed"] = true;
        j["strings"].push_back(std::move(js));
    }
    j["crossings"] = nlohmann::ordered_json::array();
    for (const auto& c : arr.crossings) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["strings"] = {c.string_a, c.string_b};
        jc["sign"] = c.sign;
        j["crossings"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::vector<Arrangement> split_components(const Arrangement& arr) {
    // Union of strings is connected iff the string/crossing incidence graph is.
    std::map<int, int> comp;  // string id -> component
    for (const auto& s : arr.strings) comp[s.id] = -1;
    int ncomp = 0;
    for (const auto& s : arr.strings) {
        if (comp[s.id] != -1) continue;
        std::vector<int> stack{s.id};
        comp[s.id] = ncomp;
        while (!stack.empty()) {
            int sid = stack.back();
            stack.pop_back();
            const StringCurve& cur = arr.strings[arr.string_index(sid)];
            for (int cid : cur.crossings) {
                const Crossing& c = arr.crossings[arr.crossing_index(cid)];
                int other = (c.string_a == sid) ? c.string_b : c.string_a;
                if (comp[other] == -1) {
                    comp[other] = ncomp;
                    stack.push_back(other);
                }
            }
        }
        ++ncomp;
    }
    std::vector<Arrangement> out(ncomp);
    for (const auto& s : arr.strings) out[comp[s.id]].strings.push_back(s);
    for (const auto& c : arr.crossings) out[comp[c.string_a]].crossings.push_back(c);
    return out;
}

}  // namespace bundling
