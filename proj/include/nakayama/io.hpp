#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyck.hpp"
#include "kupisch.hpp"

namespace nakayama {

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parse `[3,4,4,3,2,1]` into an integer vector.
inline std::vector<int> parse_int_list(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected a bracketed integer list");
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("not an integer: " + item);
        }
        if (pos != item.size()) throw ParseError("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

/// Kupisch series textual form: `[3,4,4,3,2,1]` or `cyclic:[3,3,3,4]`.
inline KupischSeries parse_series(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    bool cyclic = false;
    const std::string prefix = "cyclic:";
    if (s.rfind(prefix, 0) == 0) {
        cyclic = true;
        s = s.substr(prefix.size());
    }
    std::vector<int> entries = parse_int_list(s);
    try {
        return cyclic ? KupischSeries::cyclic(std::move(entries))
                      : KupischSeries::linear(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline std::string format_int_list(const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
    out.push_back(']');
    return out;
}

inline std::string format_series(const KupischSeries& a) {
    std::string out = a.is_cyclic() ? "cyclic:" : "";
    return out + format_int_list(a.entries());
}

/// Paths are accepted as step words (`UUDUDD`) or area sequences
/// (`[3,2,1]`), auto-detected.
inline DyckPath parse_path(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    try {
        if (!s.empty() && s.front() == '[') return from_area(parse_int_list(s));
        return DyckPath(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace nakayama
