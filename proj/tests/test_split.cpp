#include "oracles.hpp"

#include "zs/enumerate.hpp"
#include "zs/errors.hpp"
#include "zs/index.hpp"
#include "zs/sigma.hpp"
#include "zs/split.hpp"

#include <doctest.h>

#include <random>

using namespace zs;

TEST_CASE("split edits one copy")
{
    auto s = parse_sequence("1,1,3", 5);
    auto t = split(s, {3, 1, 2});
    CHECK(format_sequence(t) == "1^3,2");
    CHECK(is_minimal_zero_sum(t));
    CHECK(format_sequence(split(parse_sequence("1,4", 5), {4, 2, 2})) == "1,2^2");

    CHECK_THROWS_AS((void) split(s, {7, 3, 4}), precondition_error);
    CHECK_THROWS_AS((void) split(s, {2, 1, 1}), precondition_error);
    CHECK_THROWS_AS((void) split(s, {3, 1, 1}), precondition_error);
}

TEST_CASE("brute-force splittability")
{
    auto w = is_splittable_bruteforce(parse_sequence("1,1,3", 5));
    REQUIRE(w.has_value());
    CHECK(*w == split_move{3, 1, 2});

    CHECK_FALSE(is_splittable_bruteforce(parse_sequence("1,1,1,7,7,5", 11)).has_value());
    CHECK_FALSE(is_splittable_bruteforce(parse_sequence("1,3,3,4,7", 9)).has_value());
    CHECK_FALSE(is_splittable_bruteforce(parse_sequence("1^5", 5)).has_value());
    CHECK_THROWS_AS((void) is_splittable_bruteforce(parse_sequence("1,1", 5)), precondition_error);
}

TEST_CASE("fast criterion")
{
    CHECK(is_unsplittable_fast(parse_sequence("1,1,1,7,7,5", 11)));
    CHECK_FALSE(is_unsplittable_fast(parse_sequence("1,1,3", 5)));
    CHECK(is_unsplittable_fast(parse_sequence("1^75,81^2,77", 157)));
    CHECK(is_unsplittable_fast(parse_sequence("1^73,80^4,78", 157)));
    CHECK_THROWS_AS((void) is_unsplittable_fast(parse_sequence("1,3,3,4,7", 9)), precondition_error);
    CHECK_THROWS_AS((void) is_unsplittable_fast(parse_sequence("1,1", 5)), precondition_error);
}

TEST_CASE("classify picks the legal method")
{
    auto prime = classify(parse_sequence("1,1,3", 5));
    CHECK(prime.method == split_method::sigma_criterion);
    CHECK_FALSE(prime.unsplittable);
    CHECK(prime.witness == split_move{3, 1, 2});

    auto composite = classify(parse_sequence("1,3,3,4,7", 9));
    CHECK(composite.method == split_method::brute_force);
    CHECK(composite.unsplittable);
    CHECK_FALSE(composite.witness.has_value());
    CHECK(to_string(split_method::sigma_criterion) == "sigma-criterion");
    CHECK(to_string(split_method::brute_force) == "brute-force");
}

TEST_CASE("brute-force scan agrees with the definition over every class for n <= 10")
{
    for (std::uint32_t n = 2 ; n <= 10 ; ++n) {
        enum_spec spec;
        spec.n = n;
        spec.min_length = 1;
        spec.max_length = n;
        for (const auto & c : collect_mzs(spec).classes) {
            auto elements = c.canonical.elements();
            REQUIRE(is_splittable_bruteforce(c.canonical).has_value() == oracle::naive_splittable(elements, n));
        }
    }
}

TEST_CASE("fast and brute-force splittability agree exhaustively for p in {5,7,11,13} up to length 8")
{
    std::uint64_t checked = 0;
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        enum_spec spec;
        spec.n = p;
        spec.min_length = 1;
        spec.max_length = std::min(p, 8u);
        for (const auto & c : collect_mzs(spec).classes) {
            REQUIRE(is_unsplittable_fast(c.canonical) == ! is_splittable_bruteforce(c.canonical).has_value());
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("split properties")
{
    std::mt19937_64 rng{13};
    for (std::uint32_t n : {7u, 9u, 10u, 11u, 12u, 13u}) {
        enum_spec spec;
        spec.n = n;
        spec.min_length = 2;
        spec.max_length = n - 1;
        cyclic_group group{n};
        for (const auto & c : collect_mzs(spec).classes) {
            const auto & s = c.canonical;
            auto support = s.support();
            auto target = support[std::uniform_int_distribution<std::size_t>{0, support.size() - 1}(rng)];
            auto x = std::uniform_int_distribution<residue>{0, n - 1}(rng);
            auto t = split(s, {target, x, group.sub(target, x)});
            CHECK(t.sum() == s.sum());
            CHECK(t.length() == s.length() + 1);

            // a split into a minimal zero-sum result can only raise the norm
            if (auto w = is_splittable_bruteforce(s)) {
                auto t2 = split(s, *w);
                REQUIRE(is_minimal_zero_sum(t2));
                if (group.is_prime()) {
                    for (auto h : group.units())
                        CHECK(g_norm(s, h) <= g_norm(t2, h));
                    CHECK(index(s) <= index(t2));
                }
            }
        }
    }
}

TEST_CASE("two-element support is always splittable for p <= 13")
{
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        enum_spec spec;
        spec.n = p;
        spec.min_length = 2;
        spec.max_length = p;
        for (const auto & c : collect_mzs(spec).classes)
            if (c.canonical.support().size() == 2)
                CHECK(is_splittable_bruteforce(c.canonical).has_value());
    }
}
