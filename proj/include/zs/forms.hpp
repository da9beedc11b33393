#pragma once

#include "zs/cyclic.hpp"

#include <cstdint>
#include <vector>

// Closed-form sequence families, written with generator g = 1.
namespace zs::forms
{
    /// Unsplittable minimal zero-sum forms at length ⌊n/2⌋ + 1 for odd n >= 9:
    /// g^((n-5)/2) ((n+3)/2·g)^2 ((n-1)/2·g), plus g (3g)^2 (4g) (7g) at n = 9.
    [[nodiscard]] std::vector<sequence> odd_extremal(std::uint32_t n);

    /// Both families at length n/2 + 1 for even n >= 8:
    /// (2g)^(n/2-1) (x·g) ((n+2-x)·g) with x odd, 1 < x < n, x != n+2-x; and
    /// g^t (n/2·g) ((1+n/2)·g)^(2l) with t, l >= 1, t + 2l = n/2.
    /// Each member appears once.
    [[nodiscard]] std::vector<sequence> even_extremal(std::uint32_t n);

    /// Length (p-1)/2, prime p >= 11:
    /// g^((p-11)/2) ((p+3)/2·g)^4 ((p-1)/2·g) and g^((p-7)/2) ((p+5)/2·g)^2 ((p-3)/2·g).
    [[nodiscard]] std::vector<sequence> prime_half_length(std::uint32_t p);

    /// Length (p-3)/2, prime p >= 17:
    /// g^((p-17)/2) ((p+3)/2·g)^6 ((p-1)/2·g) and g^((p-9)/2) ((p+7)/2·g)^2 ((p-5)/2·g).
    [[nodiscard]] std::vector<sequence> prime_half_length_minus_one(std::uint32_t p);

    /// g^(n/4) (n/2·g) ((1+n/2)·g)^(n/4) for n ≡ 0 mod 8; its index is n/8 + 1.
    [[nodiscard]] sequence large_index(std::uint32_t n);
}
