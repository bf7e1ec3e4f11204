#pragma once

#include <map>
#include <string>

namespace cyclab {

// Small "head,key=value,key=value" option-list parser used by the weight,
// majorant and measure constructors and by the CLI.
//
// Both of these parse to the same thing:
//     power,alpha=2.0
//     family=power,alpha=2.0
// The first comma-separated token is kept as `head` when it has no '='.
// Keys are trimmed and lowercased; values are trimmed but otherwise kept
// verbatim.
struct KeyValueSpec {
    std::string head;
    std::map<std::string, std::string> options;

    static KeyValueSpec parse(const std::string& text);

    bool has(const std::string& key) const { return options.count(key) != 0; }

    // First of: head, then options[primary_key]. Throws if neither is present.
    std::string head_or(const std::string& primary_key) const;

    double number(const std::string& key) const;                  // throws when absent
    double number(const std::string& key, double fallback) const;
    long integer(const std::string& key, long fallback) const;
    std::string str(const std::string& key, const std::string& fallback = "") const;
};

}  // namespace cyclab
