#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "qvoa/record.hpp"

using namespace qvoa;

namespace {

ResultRecord sample_record() {
    ResultRecord r;
    r.command = "rhs";
    r.params = {{"n", "1"}, {"k", "1"}, {"order", "3"}};
    r.set_series(QSeries::one(3));
    r.status = "verified";
    r.ms = 12;
    return r;
}

} // namespace

TEST_CASE("set_series stores decimal strings") {
    QSeries s(2);
    s.at(0) = 1;
    s.at(1) = Rat(Int("123456789012345678901234567890"));
    ResultRecord r;
    r.set_series(s);
    CHECK(r.coeffs == std::vector<std::string>{
                          "1", "123456789012345678901234567890", "0"});
}

TEST_CASE("json layout") {
    const std::string j = to_json(sample_record());
    CHECK(j ==
          R"({"command":"rhs","params":{"k":"1","n":"1","order":"3"},)"
          R"("coeffs":["1","0","0","0"],"status":"verified",)"
          R"("first_mismatch":null,"ms":12})");

    ResultRecord m = sample_record();
    m.status = "mismatch";
    m.first_mismatch = 4;
    CHECK(to_json(m).find("\"first_mismatch\":4") != std::string::npos);
}

TEST_CASE("csv layout") {
    CHECK(to_csv(sample_record()) == "degree,coefficient\n0,1\n1,0\n2,0\n3,0\n");
}

TEST_CASE("cache round trip is byte identical") {
    const auto dir = std::filesystem::temp_directory_path() / "qvoa_record_test";
    std::filesystem::remove_all(dir);
    setenv("QVOA_CACHE", dir.c_str(), 1);
    const RecordCache cache = RecordCache::from_environment(false);
    REQUIRE(cache.enabled());

    const ResultRecord r = sample_record();
    const std::string key = cache.key(r.command, r.params);
    CHECK(!cache.lookup(key));
    cache.store(key, to_json(r));
    const auto hit = cache.lookup(key);
    REQUIRE(hit);
    CHECK(*hit == to_json(r));

    // distinct params get distinct keys
    CHECK(cache.key("rhs", {{"n", "2"}}) != cache.key("rhs", {{"n", "1"}}));
    CHECK(cache.key("lhs", r.params) != key);

    const RecordCache disabled = RecordCache::from_environment(true);
    CHECK(!disabled.enabled());
    CHECK(!disabled.lookup(key));

    unsetenv("QVOA_CACHE");
    CHECK(!RecordCache::from_environment(false).enabled());
    std::filesystem::remove_all(dir);
}
