#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sphquad {

/// Flat key=value store: one assignment per line, '#' comments, later
/// assignments overwrite earlier ones. Invalid lookups and malformed values
/// raise std::invalid_argument naming the key.
class Config {
public:
    static Config from_file(const std::string& path);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    int get_int(const std::string& key, int fallback) const;
    double get_double(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    /// Comma-separated lists; fallback returned when the key is absent.
    std::vector<std::string> get_strings(const std::string& key,
                                         const std::vector<std::string>& fallback) const;
    std::vector<int> get_ints(const std::string& key, const std::vector<int>& fallback) const;
    std::vector<double> get_doubles(const std::string& key,
                                    const std::vector<double>& fallback) const;

    /// Rejects keys outside `allowed` (plus the common out/seed/threads/
    /// resolution/timings keys) with a message naming the command.
    void require_known(const std::string& command, const std::set<std::string>& allowed) const;

private:
    std::map<std::string, std::string> kv_;
};

}  // namespace sphquad
