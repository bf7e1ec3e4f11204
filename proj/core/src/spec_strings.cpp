#include "cyclab/spec_strings.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace cyclab {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

KeyValueSpec KeyValueSpec::parse(const std::string& text) {
    KeyValueSpec out;
    std::size_t pos = 0;
    bool first = true;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = trim(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (token.empty()) {
            first = false;
            if (pos > text.size()) break;
            continue;
        }
        std::size_t eq = token.find('=');
        if (eq == std::string::npos) {
            if (!first)
                throw std::invalid_argument("spec token '" + token +
                                            "' is not key=value (only the first token may be bare)");
            out.head = lower(token);
        } else {
            out.options[lower(trim(token.substr(0, eq)))] = trim(token.substr(eq + 1));
        }
        first = false;
        if (comma == text.size()) break;
    }
    return out;
}

std::string KeyValueSpec::head_or(const std::string& primary_key) const {
    if (!head.empty()) return head;
    auto it = options.find(primary_key);
    if (it != options.end()) return lower(it->second);
    throw std::invalid_argument("spec string lacks a '" + primary_key + "' token");
}

double KeyValueSpec::number(const std::string& key) const {
    auto it = options.find(key);
    if (it == options.end()) throw std::invalid_argument("spec string lacks numeric key '" + key + "'");
    char* end = nullptr;
    double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0')
        throw std::invalid_argument("spec value for '" + key + "' is not a number: " + it->second);
    return v;
}

double KeyValueSpec::number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
}

long KeyValueSpec::integer(const std::string& key, long fallback) const {
    if (!has(key)) return fallback;
    double v = number(key);
    long n = static_cast<long>(v);
    if (static_cast<double>(n) != v)
        throw std::invalid_argument("spec value for '" + key + "' is not an integer");
    return n;
}

std::string KeyValueSpec::str(const std::string& key, const std::string& fallback) const {
    auto it = options.find(key);
    return it == options.end() ? fallback : it->second;
}

}  // namespace cyclab
