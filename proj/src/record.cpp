#include "qvoa/record.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qvoa {

void ResultRecord::set_series(const QSeries& s) {
    coeffs.clear();
    const std::vector<Int> ints = s.assert_integral();
    coeffs.reserve(ints.size());
    for (const Int& c : ints) coeffs.push_back(c.get_str());
}

std::string to_json(const ResultRecord& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json p;
    for (const auto& [key, value] : r.params) p[key] = value;
    j["params"] = p;
    j["coeffs"] = r.coeffs;
    j["status"] = r.status;
    if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
    else j["first_mismatch"] = nullptr;
    j["ms"] = r.ms;
    return j.dump();
}

std::string to_csv(const ResultRecord& r) {
    std::ostringstream out;
    out << "degree,coefficient\n";
    for (std::size_t d = 0; d < r.coeffs.size(); ++d)
        out << d << ',' << r.coeffs[d] << '\n';
    return out.str();
}

RecordCache RecordCache::from_environment(bool no_cache) {
    RecordCache cache;
    if (no_cache) return cache;
    const char* dir = std::getenv("QVOA_CACHE");
    if (dir != nullptr && *dir != '\0') cache.dir_ = dir;
    return cache;
}

std::string RecordCache::key(const std::string& command,
                             const std::map<std::string, std::string>& params) const {
    std::string k = command;
    for (const auto& [name, value] : params) {
        k += '_';
        k += name;
        for (char c : value) k += (std::isalnum(static_cast<unsigned char>(c)) ? c : 'm');
    }
    k += "_v";
    k += kArtifactVersion;
    k += ".json";
    return k;
}

std::optional<std::string> RecordCache::lookup(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(std::filesystem::path(dir_) / key, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void RecordCache::store(const std::string& key, const std::string& json) const {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    std::ofstream out(std::filesystem::path(dir_) / key, std::ios::binary);
    out << json;
}

} // namespace qvoa
