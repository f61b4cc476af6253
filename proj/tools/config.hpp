#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

// Failure in the config file or flag merge; carries the offending line so
// callers can print "file:line: message".
struct ConfigError : std::runtime_error {
    ConfigError(int line_, const std::string& msg) : std::runtime_error(msg), line(line_) {}
    int line;  // 0 when the value came from the command line
};

// Flat key = value file with [section] headers; keys are addressed as
// "section.key". '#' and ';' start comments. Values keep their raw text;
// typed accessors parse on demand and report the source line on failure.
class Config {
public:
    void load_file(const std::string& path);

    // Command-line overrides take line 0 and win over file entries.
    void set(const std::string& key, const std::string& value);

    bool has(const std::string& key) const;
    int line_of(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_long(const std::string& key, long long fallback) const;
    // Lists accept "[a, b, c]" or "a, b, c".
    std::vector<double> get_list(const std::string& key) const;

    // Required-value variants that throw ConfigError when missing.
    std::string require_string(const std::string& key) const;

    const std::string& source_path() const { return path_; }

private:
    struct Entry {
        std::string value;
        int line;
    };
    std::map<std::string, Entry> entries_;
    std::string path_;
};

} // namespace cli
