#include "zs/sigma.hpp"

#include <bit>

namespace zs
{
    namespace
    {
        constexpr std::size_t word_count(std::uint32_t n) { return (n + 63) / 64; }

        // dst = (src rotated so that bit i moves to bit (i + shift) mod n), for 0 < shift < n.
        void rotate_into(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, std::uint32_t n, std::uint32_t shift)
        {
            const auto words = src.size();
            const auto tail_bits = n & 63;
            const auto tail_mask = tail_bits == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail_bits) - 1;

            // left part: bits [0, n - shift) move up by shift
            const auto lw = shift >> 6, lb = shift & 63;
            for (std::size_t i = 0 ; i < words ; ++i) {
                std::uint64_t v = 0;
                if (i >= lw) {
                    v = src[i - lw] << lb;
                    if (lb != 0 && i >= lw + 1)
                        v |= src[i - lw - 1] >> (64 - lb);
                }
                dst[i] = v;
            }
            dst[words - 1] &= tail_mask;

            // wrapped part: bits [n - shift, n) move down by n - shift
            const auto down = n - shift;
            const auto rw = down >> 6, rb = down & 63;
            for (std::size_t i = 0 ; i + rw < words ; ++i) {
                std::uint64_t v = src[i + rw] >> rb;
                if (rb != 0 && i + rw + 1 < words)
                    v |= src[i + rw + 1] << (64 - rb);
                dst[i] |= v;
            }
        }
    }

    sum_set::sum_set(cyclic_group group) :
        group_(group),
        words_(word_count(group.order()), 0),
        scratch_(word_count(group.order()), 0)
    {
    }

    std::uint32_t sum_set::size() const noexcept
    {
        std::uint32_t total = 0;
        for (auto w : words_)
            total += static_cast<std::uint32_t>(std::popcount(w));
        return total;
    }

    std::vector<residue> sum_set::members() const
    {
        std::vector<residue> result;
        for (residue a = 0 ; a < group_.order() ; ++a)
            if (contains(a))
                result.push_back(a);
        return result;
    }

    bool sum_set::is_subset_of(const sum_set & other) const noexcept
    {
        if (! (group_ == other.group_))
            return false;
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    void sum_set::extend(residue a, std::uint32_t count)
    {
        const auto n = group_.order();
        for (std::uint32_t copy = 0 ; copy < count ; ++copy) {
            bool changed = false;
            // shift the sums of the previous copies before adding a itself
            if (a != 0) {
                rotate_into(words_, scratch_, n, a);
                for (std::size_t i = 0 ; i < words_.size() ; ++i) {
                    changed = changed || (scratch_[i] & ~words_[i]);
                    words_[i] |= scratch_[i];
                }
            }
            changed = changed || ! contains(a);
            set(a);
            // closed under +a: further copies add nothing
            if (! changed)
                break;
        }
    }

    sum_set sigma_set(const sequence & s)
    {
        sum_set result{s.group()};
        const auto & mult = s.multiplicities();
        for (residue a = 0 ; a < mult.size() ; ++a)
            if (mult[a] > 0)
                result.extend(a, mult[a]);
        return result;
    }

    bool is_zero_sum_free(const sequence & s)
    {
        return ! sigma_set(s).contains(0);
    }

    bool is_minimal_zero_sum(const sequence & s)
    {
        if (s.empty() || s.sum() != 0)
            return false;
        auto support = s.support();
        return is_zero_sum_free(s.with_removed(support.front()));
    }

    std::map<residue, std::uint32_t> sigma_complement_sizes(const sequence & s)
    {
        std::map<residue, std::uint32_t> result;
        for (auto g : s.support())
            result.emplace(g, sigma_set(s.with_removed(g)).size());
        return result;
    }
}
