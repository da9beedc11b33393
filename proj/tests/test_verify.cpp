#include "zs/enumerate.hpp"
#include "zs/errors.hpp"
#include "zs/forms.hpp"
#include "zs/index.hpp"
#include "zs/properties.hpp"
#include "zs/sigma.hpp"
#include "zs/split.hpp"
#include "zs/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace zs;

namespace
{
    std::set<std::string> canonical_strings(const std::vector<sequence> & seqs)
    {
        std::set<std::string> out;
        for (const auto & s : seqs)
            out.insert(format_sequence(canonical_class(s).canonical));
        return out;
    }

    std::set<std::string> unsplittable_at(std::uint32_t n, std::uint32_t length)
    {
        enum_spec spec;
        spec.n = n;
        spec.min_length = spec.max_length = length;
        spec.filter = class_filter::unsplittable;
        std::set<std::string> out;
        for (const auto & c : collect_mzs(spec).classes)
            out.insert(format_sequence(c.canonical));
        return out;
    }
}

TEST_CASE("odd extremal forms")
{
    CHECK(canonical_strings(forms::odd_extremal(9)) == std::set<std::string>{"1,3^2,4,7", "1^2,4,6^2"});
    CHECK(canonical_strings(forms::odd_extremal(11)) == std::set<std::string>{"1^3,5,7^2"});
    for (std::uint32_t n : {9u, 11u, 13u, 15u}) {
        CHECK(canonical_strings(forms::odd_extremal(n)) == unsplittable_at(n, n / 2 + 1));
        for (const auto & s : forms::odd_extremal(n)) {
            CHECK(s.length() == n / 2 + 1);
            CHECK(index(s) == 2u);
        }
    }
    CHECK_THROWS_AS((void) forms::odd_extremal(7), precondition_error);
    CHECK_THROWS_AS((void) forms::odd_extremal(10), precondition_error);
}

TEST_CASE("even extremal families")
{
    for (std::uint32_t n : {8u, 10u, 12u}) {
        std::vector<sequence> unsplittable;
        for (const auto & s : forms::even_extremal(n)) {
            CHECK(s.length() == n / 2 + 1);
            CHECK(is_minimal_zero_sum(s));
            CHECK(index(s) >= norm_value{2, 1});
            if (! is_splittable_bruteforce(s))
                unsplittable.push_back(s);
        }
        CHECK(canonical_strings(unsplittable) == unsplittable_at(n, n / 2 + 1));
    }
    CHECK(unsplittable_at(8, 5) == std::set<std::string>{"1^2,4,5^2", "1,5,6^3"});
}

TEST_CASE("prime forms")
{
    for (std::uint32_t p : {157u, 163u, 211u}) {
        for (const auto & s : forms::prime_half_length(p)) {
            CHECK(s.length() == (p - 1) / 2);
            CHECK(is_minimal_zero_sum(s));
            CHECK(is_unsplittable_fast(s));
            CHECK(index(s) == 2u);
        }
    }
    auto f = forms::prime_half_length(157);
    CHECK(canonical_strings(f).size() == 2);
    std::set<std::string> raw;
    for (const auto & s : f)
        raw.insert(format_sequence(s));
    CHECK(raw == std::set<std::string>{"1^73,78,80^4", "1^75,77,81^2"});

    for (const auto & s : forms::prime_half_length_minus_one(211)) {
        CHECK(s.length() == 104);
        CHECK(is_minimal_zero_sum(s));
        CHECK(is_unsplittable_fast(s));
        CHECK(index(s) == 2u);
    }
    CHECK_THROWS_AS((void) forms::prime_half_length(12), precondition_error);
    CHECK_THROWS_AS((void) forms::large_index(12), precondition_error);
}

TEST_CASE("expected I formula")
{
    CHECK(expected_I(6) == 5);
    CHECK(expected_I(7) == 1);
    CHECK(expected_I(10) == 7);
    CHECK(expected_I(14) == 9);
}

TEST_CASE("every verify target reaches a verified status on its defaults")
{
    for (auto target : verify_targets()) {
        verify_params params;
        auto r = run_verify(target, params);
        INFO(std::string(target));
        CHECK(r.status == verify_status::verified);
        CHECK(r.counterexamples.empty());
        CHECK(r.checked_count > 0);
    }
    CHECK_FALSE(is_verify_target("nope"));
    CHECK_THROWS_AS((void) run_verify("nope", {}), precondition_error);
}

TEST_CASE("i-of-g values")
{
    verify_params params;
    params.n_range = {2, 14};
    auto r = run_verify("i-of-g", params);
    REQUIRE(r.status == verify_status::verified);
    auto j = to_json(r);
    const std::vector<std::uint64_t> expected{1, 1, 1, 1, 5, 1, 6, 6, 7, 7, 8, 8, 9};
    for (std::uint32_t n = 2 ; n <= 14 ; ++n)
        CHECK(j["details"]["values"][std::to_string(n)] == expected[n - 2]);
}

TEST_CASE("budget exhaustion reports incomplete, never verified")
{
    verify_params params;
    params.n_range = {10, 12};
    params.limits.node_budget = 20;
    auto r = run_verify("i-of-g", params);
    CHECK(r.status == verify_status::incomplete);
}

TEST_CASE("assert-mode drivers reject parameters outside their domain")
{
    verify_params p12;
    p12.p = 12;
    CHECK_THROWS_AS((void) run_verify("main-classification", p12), precondition_error);
    verify_params n12;
    n12.n = 12;
    CHECK_THROWS_AS((void) run_verify("gao-counterexample", n12), precondition_error);
    CHECK_THROWS_AS((void) run_verify("xia-yuan-odd", n12), precondition_error);
}

TEST_CASE("report JSON layout")
{
    verify_report r;
    r.target = "t";
    r.params = json{{"n", 8}};
    r.status = verify_status::falsified;
    r.counterexamples.push_back({8, "1,7", "demo"});
    r.checked_count = 3;
    r.tool_version = "x";
    auto j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin() ; it != j.end() ; ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema", "target", "params", "status", "counterexamples",
            "checked_count", "elapsed_ms", "tool_version", "details"});
    CHECK(j["schema"] == "zs.verify-report/1");
    CHECK(j["status"] == "falsified");
    CHECK(j["counterexamples"][0]["seq"] == "1,7");
}

TEST_CASE("property suite passes over p in {11, 13}")
{
    property_config config;
    for (const auto & outcome : run_property_suite(config)) {
        INFO(outcome.name);
        CHECK(outcome.checked > 0);
        CHECK(outcome.passed());
    }
}

TEST_CASE("property suite is reproducible for a fixed seed")
{
    property_config config;
    config.seed = 99;
    auto a = run_property_suite(config), b = run_property_suite(config);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0 ; i < a.size() ; ++i)
        CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
}
