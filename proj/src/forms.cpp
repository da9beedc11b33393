#include "zs/forms.hpp"
#include "zs/errors.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

namespace zs::forms
{
    namespace
    {
        sequence build(std::uint32_t n, std::initializer_list<std::pair<residue, std::uint32_t>> terms)
        {
            cyclic_group group{n};
            std::vector<std::uint32_t> mult(n, 0);
            for (auto [r, m] : terms)
                mult[r % n] += m;
            return sequence{group, std::move(mult)};
        }

        void require_prime(std::uint32_t p, std::uint32_t at_least)
        {
            if (! is_prime(p) || p < at_least)
                throw precondition_error("expected a prime >= " + std::to_string(at_least) + ", got " + std::to_string(p));
        }
    }

    std::vector<sequence> odd_extremal(std::uint32_t n)
    {
        if (n % 2 == 0 || n < 9)
            throw precondition_error("odd extremal forms need odd n >= 9, got " + std::to_string(n));
        std::vector<sequence> result{build(n, {{1, (n - 5) / 2}, {(n + 3) / 2, 2}, {(n - 1) / 2, 1}})};
        if (n == 9)
            result.push_back(build(n, {{1, 1}, {3, 2}, {4, 1}, {7, 1}}));
        return result;
    }

    std::vector<sequence> even_extremal(std::uint32_t n)
    {
        if (n % 2 != 0 || n < 8)
            throw precondition_error("even extremal families need even n >= 8, got " + std::to_string(n));

        std::vector<sequence> result;
        auto add_unique = [&](sequence s) {
            if (std::find(result.begin(), result.end(), s) == result.end())
                result.push_back(std::move(s));
        };
        for (std::uint32_t x = 3 ; x < n ; x += 2)
            if (x != n + 2 - x)
                add_unique(build(n, {{2, n / 2 - 1}, {x, 1}, {n + 2 - x, 1}}));
        for (std::uint32_t l = 1 ; 2 * l < n / 2 ; ++l)
            add_unique(build(n, {{1, n / 2 - 2 * l}, {n / 2, 1}, {1 + n / 2, 2 * l}}));
        return result;
    }

    std::vector<sequence> prime_half_length(std::uint32_t p)
    {
        require_prime(p, 11);
        return {
            build(p, {{1, (p - 11) / 2}, {(p + 3) / 2, 4}, {(p - 1) / 2, 1}}),
            build(p, {{1, (p - 7) / 2}, {(p + 5) / 2, 2}, {(p - 3) / 2, 1}}),
        };
    }

    std::vector<sequence> prime_half_length_minus_one(std::uint32_t p)
    {
        require_prime(p, 17);
        return {
            build(p, {{1, (p - 17) / 2}, {(p + 3) / 2, 6}, {(p - 1) / 2, 1}}),
            build(p, {{1, (p - 9) / 2}, {(p + 7) / 2, 2}, {(p - 5) / 2, 1}}),
        };
    }

    sequence large_index(std::uint32_t n)
    {
        if (n == 0 || n % 8 != 0)
            throw precondition_error("the large-index family needs n ≡ 0 mod 8, got " + std::to_string(n));
        return build(n, {{1, n / 4}, {n / 2, 1}, {1 + n / 2, n / 4}});
    }
}
