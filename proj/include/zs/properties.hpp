#pragma once

#include "zs/enumerate.hpp"
#include "zs/report.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zs
{
    inline constexpr std::uint64_t default_seed = 20140527;

    /// Outcome of one structural property checked over many instances.
    struct property_outcome
    {
        explicit property_outcome(std::string name_) : name(std::move(name_)) {}

        std::string name;
        std::uint64_t checked = 0;
        std::uint64_t violation_count = 0;
        /// First few violations only.
        std::vector<counterexample> violations;

        [[nodiscard]] bool passed() const noexcept { return violation_count == 0; }
        void record(counterexample c);
    };

    struct property_config
    {
        /// Primes whose unsplittable / minimal classes are enumerated exhaustively.
        std::vector<std::uint32_t> primes{11, 13};
        std::uint64_t seed = default_seed;
        std::uint32_t random_partitions = 1000;
        std::uint32_t random_sets = 1000;
        std::uint32_t random_split_samples = 500;
        /// Fast-vs-brute splittability is exhaustive up to this length.
        std::uint32_t exhaustive_split_length = 8;
        search_limits limits;
    };

    /// Zero-sum-free S and a random partition S = S_1···S_t give
    /// |Σ(S)| >= Σ|Σ(S_i)|.
    [[nodiscard]] property_outcome check_partition_superadditivity(const property_config & config);

    /// A zero-sum-free set A over Z_p has |Σ(A)| >= min(p, |A|(|A|+1)/2).
    /// Exhaustive for p <= 13 and |A| <= 4, random beyond.
    [[nodiscard]] property_outcome check_zero_sum_free_set_bound(const property_config & config);

    /// For the unsplittable classes over each configured prime:
    /// coefficient condition, |Σ(g^k h)| = 2k+1, |Σ(g²h²)| = 8, the
    /// g^k (xg)^2 and g1^k g2 g3 bounds, and the one-removal bound for
    /// every subsequence with at least two distinct elements.
    [[nodiscard]] std::vector<property_outcome> check_unsplittable_structure(const property_config & config);

    /// Every minimal zero-sum sequence over Z_p with exactly two distinct
    /// elements is splittable (p <= 13 and the configured primes).
    [[nodiscard]] property_outcome check_two_element_support(const property_config & config);

    /// The sigma criterion agrees with the brute-force splitting scan, exhaustively
    /// over p in {5, 7, 11, 13} and the configured primes up to the configured
    /// length, plus random longer samples.
    [[nodiscard]] property_outcome check_split_criterion(const property_config & config);

    [[nodiscard]] std::vector<property_outcome> run_property_suite(const property_config & config);

    [[nodiscard]] json to_json(const property_outcome & outcome);
}
