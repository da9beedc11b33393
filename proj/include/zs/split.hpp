#pragma once

#include "zs/cyclic.hpp"

#include <optional>
#include <string>

namespace zs
{
    /// Replace one copy of `target` by `part_x` and `part_y`, part_x + part_y = target.
    struct split_move
    {
        residue target;
        residue part_x;
        residue part_y;

        bool operator==(const split_move &) const = default;
    };

    /// Throws precondition_error if target is absent or the parts do not add up.
    [[nodiscard]] sequence split(const sequence & s, const split_move & move);

    /// Scans x in [1, n-1] ascending, then g in supp(S) ascending, with
    /// y = g - x and x <= y; returns the first move whose result is minimal
    /// zero-sum, i.e. the one with the smallest (x, g).
    /// Throws precondition_error unless S is minimal zero-sum.
    [[nodiscard]] std::optional<split_move> is_splittable_bruteforce(const sequence & s);

    /// |Σ(S·g⁻¹)| = p - 1 for every g in supp(S). Prime order only; throws
    /// precondition_error for composite order or non-minimal S.
    [[nodiscard]] bool is_unsplittable_fast(const sequence & s);

    enum class split_method
    {
        sigma_criterion,
        brute_force
    };

    [[nodiscard]] std::string to_string(split_method method);

    struct split_classification
    {
        bool unsplittable;
        split_method method;
        /// Present iff splittable.
        std::optional<split_move> witness;
    };

    /// Chooses the sigma criterion for prime order and the brute-force scan
    /// otherwise. The witness always comes from the brute-force scan.
    [[nodiscard]] split_classification classify(const sequence & s);
}
