#pragma once

#include "zs/cyclic.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace zs
{
    /// Σ(S): the residues reached by sums of nonempty subsequences, stored as an
    /// n-bit membership set.
    ///
    /// extend() is the dynamic-programming step used to build the set one
    /// element copy at a time; it performs no allocation.
    class sum_set
    {
    public:
        explicit sum_set(cyclic_group group);

        [[nodiscard]] const cyclic_group & group() const noexcept { return group_; }
        [[nodiscard]] bool contains(residue a) const noexcept
        {
            return (words_[a >> 6] >> (a & 63)) & 1u;
        }
        [[nodiscard]] std::uint32_t size() const noexcept;
        [[nodiscard]] bool empty() const noexcept { return size() == 0; }
        [[nodiscard]] bool full() const noexcept { return size() == group_.order(); }
        [[nodiscard]] std::vector<residue> members() const;
        [[nodiscard]] bool is_subset_of(const sum_set & other) const noexcept;

        /// Σ(T) -> Σ(T·a^count).
        void extend(residue a, std::uint32_t count = 1);

        bool operator==(const sum_set & other) const noexcept
        {
            return group_ == other.group_ && words_ == other.words_;
        }

    private:
        void set(residue a) noexcept { words_[a >> 6] |= std::uint64_t{1} << (a & 63); }

        cyclic_group group_;
        std::vector<std::uint64_t> words_;
        std::vector<std::uint64_t> scratch_;
    };

    [[nodiscard]] sum_set sigma_set(const sequence & s);

    [[nodiscard]] bool is_zero_sum_free(const sequence & s);

    /// σ(S) = 0 and no proper nonempty subsequence sums to zero. Decided with a
    /// single DP over S with one copy of its smallest support element removed:
    /// a zero-sum proper part or its complement avoids that copy.
    [[nodiscard]] bool is_minimal_zero_sum(const sequence & s);

    /// g -> |Σ(S·g⁻¹)| for every g in supp(S).
    [[nodiscard]] std::map<residue, std::uint32_t> sigma_complement_sizes(const sequence & s);
}
