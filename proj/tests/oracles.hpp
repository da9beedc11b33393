#pragma once

// Naive reference implementations used only by the tests. Each one follows a
// definition literally (enumerate every subsequence, every generator, every
// multiset) and shares no code path with the library beyond the value types.

#include "zs/cyclic.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace zs::oracle
{
    /// Σ(S) by walking all 2^|S| - 1 nonempty index subsets.
    inline std::set<residue> naive_sigma(const std::vector<residue> & elements, std::uint32_t n)
    {
        std::set<residue> result;
        const auto size = elements.size();
        for (std::uint64_t mask = 1 ; mask < (std::uint64_t{1} << size) ; ++mask) {
            std::uint64_t total = 0;
            for (std::size_t i = 0 ; i < size ; ++i)
                if (mask >> i & 1u)
                    total += elements[i];
            result.insert(static_cast<residue>(total % n));
        }
        return result;
    }

    /// Σ(S) by walking every nonempty sub-multiset (count vector c <= v).
    /// Same set as naive_sigma, far fewer visits when S repeats elements.
    inline std::set<residue> naive_sigma_counts(const std::vector<residue> & elements, std::uint32_t n)
    {
        std::vector<residue> values;
        std::vector<std::uint32_t> limit;
        for (auto a : elements) {
            if (! values.empty() && values.back() == a)
                ++limit.back();
            else {
                values.push_back(a);
                limit.push_back(1);
            }
        }
        std::set<residue> result;
        std::vector<std::uint32_t> count(values.size(), 0);
        while (true) {
            std::size_t i = 0;
            while (i < count.size() && count[i] == limit[i])
                count[i++] = 0;
            if (i == count.size())
                return result;
            ++count[i];
            std::uint64_t total = 0;
            for (std::size_t j = 0 ; j < count.size() ; ++j)
                total += std::uint64_t{count[j]} * values[j];
            result.insert(static_cast<residue>(total % n));
        }
    }

    /// Minimal zero-sum by definition: total zero, no proper nonempty subset zero.
    inline bool naive_minimal(const std::vector<residue> & elements, std::uint32_t n)
    {
        const auto size = elements.size();
        if (size == 0)
            return false;
        const std::uint64_t full = (std::uint64_t{1} << size) - 1;
        for (std::uint64_t mask = 1 ; mask <= full ; ++mask) {
            std::uint64_t total = 0;
            for (std::size_t i = 0 ; i < size ; ++i)
                if (mask >> i & 1u)
                    total += elements[i];
            bool zero = total % n == 0;
            if (mask == full)
                return zero;
            if (zero)
                return false;
        }
        return false;
    }

    struct naive_norm
    {
        std::uint64_t numerator;
        std::uint64_t denominator;
    };

    /// Index by scanning every g with ⟨g⟩ = ⟨supp⟩ and building the
    /// representative table x ↦ x·g for x in [1, ord(g)].
    inline naive_norm naive_index(const std::vector<residue> & elements, std::uint32_t n)
    {
        std::uint32_t d = n;
        for (auto a : elements)
            d = std::gcd(d, a);
        std::vector<std::uint32_t> subgroup;
        for (residue a = 0 ; a < n ; a += d)
            subgroup.push_back(a);

        naive_norm best{0, 0};
        for (residue g = 1 ; g < n ; ++g) {
            std::set<residue> generated;
            std::vector<std::uint64_t> rep(n, 0);
            std::uint64_t order = 0;
            for (std::uint64_t x = 1 ; ; ++x) {
                auto r = static_cast<residue>(x * g % n);
                if (generated.contains(r))
                    break;
                generated.insert(r);
                rep[r] = x;
                order = x;
            }
            if (generated != std::set<residue>(subgroup.begin(), subgroup.end()))
                continue;
            std::uint64_t total = 0;
            for (auto a : elements)
                total += rep[a];
            if (best.denominator == 0 || total * best.denominator < best.numerator * order)
                best = {total, order};
        }
        return best;
    }

    /// Splittable by definition: some g in S and x + y = g with S g⁻¹ x y
    /// minimal zero-sum; every x in [0, n) is tried.
    inline bool naive_splittable(const std::vector<residue> & elements, std::uint32_t n)
    {
        for (std::size_t i = 0 ; i < elements.size() ; ++i) {
            auto rest = elements;
            auto g = rest[i];
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            for (residue x = 0 ; x < n ; ++x) {
                auto candidate = rest;
                candidate.push_back(x);
                candidate.push_back((g + n - x) % n);
                if (naive_minimal(candidate, n))
                    return true;
            }
        }
        return false;
    }

    /// Lexicographically smallest sorted image under all unit scalings.
    inline std::vector<residue> naive_canonical(const std::vector<residue> & elements, std::uint32_t n)
    {
        std::vector<residue> best;
        for (residue u = 1 ; u < n ; ++u) {
            if (std::gcd(u, n) != 1)
                continue;
            std::vector<residue> scaled;
            for (auto a : elements)
                scaled.push_back(static_cast<residue>(std::uint64_t{a} * u % n));
            std::sort(scaled.begin(), scaled.end());
            if (best.empty() || scaled < best)
                best = scaled;
        }
        return best;
    }

    /// Calls f on every nondecreasing tuple of the given length over [lo, n).
    template <typename F>
    void for_each_multiset(std::uint32_t n, std::uint32_t length, residue lo, F && f)
    {
        std::vector<residue> tuple(length, lo);
        if (length == 0) {
            f(tuple);
            return;
        }
        while (true) {
            f(tuple);
            std::size_t i = length;
            while (i > 0 && tuple[i - 1] == n - 1)
                --i;
            if (i == 0)
                return;
            auto next = tuple[i - 1] + 1;
            for (std::size_t j = i - 1 ; j < length ; ++j)
                tuple[j] = next;
        }
    }

    /// Canonical minimal zero-sum tuples of one length from the full multiset list.
    inline std::vector<std::vector<residue>> naive_classes(std::uint32_t n, std::uint32_t length)
    {
        std::vector<std::vector<residue>> result;
        for_each_multiset(n, length, 1, [&](const std::vector<residue> & t) {
            if (naive_minimal(t, n) && naive_canonical(t, n) == t)
                result.push_back(t);
        });
        return result;
    }
}
