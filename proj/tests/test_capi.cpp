#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <racah_verify.h>

#include <json.hpp>

#include <string>

namespace {

struct Session {
    rv_session* s = rv_session_new();
    ~Session() { rv_session_free(s); }
};

std::string run_ok(rv_session* s, const char* cmd, std::vector<const char*> args) {
    char* out = nullptr;
    const int rc = rv_run(s, cmd, args.data(), args.size(), &out);
    REQUIRE(rc == RV_OK);
    REQUIRE(out != nullptr);
    std::string text = out;
    rv_string_free(out);
    return text;
}

} // namespace

TEST_CASE("session lifecycle and config validation") {
    Session s;
    REQUIRE(s.s != nullptr);
    CHECK(std::string(rv_last_error(s.s)) == "");
    CHECK(rv_set_lmax(s.s, 7) == RV_OK);
    CHECK(rv_set_lmax(s.s, 3) == RV_ERR_BAD_ARGUMENT);
    CHECK(rv_set_lmax(s.s, 13) == RV_ERR_BAD_ARGUMENT);
    CHECK(rv_set_spin_cap(s.s, 8) == RV_OK);
    CHECK(rv_set_spin_cap(s.s, 0) == RV_ERR_BAD_ARGUMENT);
    CHECK(rv_set_lmax(nullptr, 7) == RV_ERR_BAD_ARGUMENT);
}

TEST_CASE("null and malformed inputs are rejected") {
    Session s;
    char* out = nullptr;
    CHECK(rv_run(nullptr, "dim", nullptr, 0, &out) == RV_ERR_BAD_ARGUMENT);
    CHECK(rv_run(s.s, nullptr, nullptr, 0, &out) == RV_ERR_BAD_ARGUMENT);
    CHECK(rv_run(s.s, "dim", nullptr, 0, nullptr) == RV_ERR_BAD_ARGUMENT);
    const char* bad[] = {"x", "1/2", "1/2"};
    CHECK(rv_run(s.s, "dim", bad, 3, &out) == RV_ERR_BAD_ARGUMENT);
    CHECK(std::string(rv_last_error(s.s)).find("bad spin") != std::string::npos);
    const char* third[] = {"1/3", "1/2", "1/2"};
    CHECK(rv_run(s.s, "dim", third, 3, &out) == RV_ERR_BAD_ARGUMENT);
    const char* args[] = {"1/2", "1/2", "1/2"};
    CHECK(rv_run(s.s, "no-such-command", args, 3, &out) == RV_ERR_BAD_ARGUMENT);
    CHECK(rv_run(s.s, "dim", args, 2, &out) == RV_ERR_BAD_ARGUMENT);
    CHECK(out == nullptr); // untouched on every failure
}

TEST_CASE("spin cap is enforced") {
    Session s;
    REQUIRE(rv_set_spin_cap(s.s, 2) == RV_OK);
    char* out = nullptr;
    const char* args[] = {"3/2", "1/2", "1/2"};
    CHECK(rv_run(s.s, "dim", args, 3, &out) == RV_ERR_LIMIT);
}

TEST_CASE("reports carry the schema and verification verdict") {
    Session s;
    const std::string text = run_ok(s.s, "dim", {"1/2", "1/2", "1/2"});
    const auto report = nlohmann::json::parse(text);
    CHECK(report["schema"] == 1);
    CHECK(report["command"] == "dim");
    CHECK(report["verified"] == true);
    CHECK(report["inconclusive"].empty());
    REQUIRE(report["results"].size() == 1);
    CHECK(report["results"][0]["sum-of-squares"] == 5);
    CHECK(report["results"][0]["span"] == 5);
    // Decimal spin spelling is accepted and equivalent.
    const std::string text2 = run_ok(s.s, "dim", {"0.5", "0.5", "0.5"});
    CHECK(nlohmann::json::parse(text2)["results"] == report["results"]);
}

TEST_CASE("repeated runs are byte-identical") {
    Session s;
    const std::string a = run_ok(s.s, "conjecture", {"1/2", "1/2", "1/2"});
    const std::string b = run_ok(s.s, "conjecture", {"1/2", "1/2", "1/2"});
    CHECK(a == b);
}

TEST_CASE("excluded specialization surfaces as an argument error") {
    Session s;
    char* out = nullptr;
    const char* args[] = {"1/2", "1/2", "0"};
    CHECK(rv_run(s.s, "hjk", args, 3, &out) == RV_ERR_BAD_ARGUMENT);
    CHECK(std::string(rv_last_error(s.s)).find("excluded") != std::string::npos);
    const char* args2[] = {"1/2", "1/2"};
    CHECK(rv_run(s.s, "redundancy", args2, 2, &out) == RV_ERR_BAD_ARGUMENT);
}

TEST_CASE("isomorphism command round trip") {
    Session s;
    const auto report = nlohmann::json::parse(run_ok(s.s, "iso", {"tl"}));
    CHECK(report["verified"] == true);
    CHECK(report["results"][0]["name"] == "iso:tl");
    char* out = nullptr;
    const char* args[] = {"heisenberg"};
    CHECK(rv_run(s.s, "iso", args, 1, &out) == RV_ERR_BAD_ARGUMENT);
}
