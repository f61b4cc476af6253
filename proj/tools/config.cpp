#include "config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cli {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string strip_comment(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '#' || s[i] == ';') return s.substr(0, i);
    }
    return s;
}

} // namespace

void Config::load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is.good()) throw ConfigError(0, "cannot open config file '" + path + "'");
    path_ = path;
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string text = trim(strip_comment(line));
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') {
                throw ConfigError(line_no, "unterminated section header '" + text + "'");
            }
            section = trim(text.substr(1, text.size() - 2));
            if (section.empty()) throw ConfigError(line_no, "empty section name");
            continue;
        }
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(line_no, "expected key = value, got '" + text + "'");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "empty key");
        const std::string full = section.empty() ? key : section + "." + key;
        entries_[full] = {value, line_no};
    }
}

void Config::set(const std::string& key, const std::string& value) {
    entries_[key] = {value, 0};
}

bool Config::has(const std::string& key) const { return entries_.count(key) != 0; }

int Config::line_of(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second.value;
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    const char* text = it->second.value.c_str();
    char* end = nullptr;
    const double v = std::strtod(text, &end);
    if (end == text || *end != '\0') {
        throw ConfigError(it->second.line, "'" + key + "': not a number: '" + it->second.value + "'");
    }
    return v;
}

long long Config::get_long(const std::string& key, long long fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    const char* text = it->second.value.c_str();
    char* end = nullptr;
    const long long v = std::strtoll(text, &end, 10);
    if (end == text || *end != '\0') {
        throw ConfigError(it->second.line, "'" + key + "': not an integer: '" + it->second.value + "'");
    }
    return v;
}

std::vector<double> Config::get_list(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return {};
    std::string text = it->second.value;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') {
            throw ConfigError(it->second.line, "'" + key + "': unterminated list");
        }
        text = text.substr(1, text.size() - 2);
    }
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const char* begin = item.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0') {
            throw ConfigError(it->second.line, "'" + key + "': bad list entry '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::string Config::require_string(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError(0, "missing required key '" + key + "'");
    return it->second.value;
}

} // namespace cli
