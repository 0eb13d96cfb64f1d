#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvoa/qseries.hpp"

namespace qvoa {

// Artifact version; part of every cache key so stale entries never resurface.
inline constexpr const char* kArtifactVersion = "1";

/* Machine-readable result of one CLI invocation. Coefficients are decimal
 * strings; nothing in a record is ever floating point. */
struct ResultRecord {
    std::string command;
    std::map<std::string, std::string> params;  // ordered, deterministic
    std::vector<std::string> coeffs;
    std::string status;                    // verified | mismatch | error
    std::optional<int> first_mismatch;
    long ms = 0;

    void set_series(const QSeries& s);
};

std::string to_json(const ResultRecord& r);
std::string to_csv(const ResultRecord& r);  // header degree,coefficient

/* Coefficient-table cache keyed by (command, params, artifact version),
 * stored as JSON files under $QVOA_CACHE. Unset env or empty dir name
 * disables caching. Hits reproduce the original record byte for byte. */
class RecordCache {
public:
    // disabled unless QVOA_CACHE names a directory
    static RecordCache from_environment(bool no_cache);

    bool enabled() const { return !dir_.empty(); }
    std::string key(const std::string& command,
                    const std::map<std::string, std::string>& params) const;
    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& json) const;

private:
    std::string dir_;
};

} // namespace qvoa
