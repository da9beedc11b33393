#include "zs/split.hpp"
#include "zs/errors.hpp"
#include "zs/sigma.hpp"

namespace zs
{
    sequence split(const sequence & s, const split_move & move)
    {
        const auto & group = s.group();
        if (move.target >= group.order() || ! s.contains(move.target))
            throw precondition_error("split target " + std::to_string(move.target) + " is not in the support");
        if (move.part_x >= group.order() || move.part_y >= group.order()
                || group.add(move.part_x, move.part_y) != move.target)
            throw precondition_error("split parts " + std::to_string(move.part_x) + " + " + std::to_string(move.part_y)
                    + " do not sum to " + std::to_string(move.target));

        return s.with_removed(move.target).with_added(move.part_x).with_added(move.part_y);
    }

    namespace
    {
        void require_minimal(const sequence & s)
        {
            if (! is_minimal_zero_sum(s))
                throw precondition_error("sequence " + format_sequence(s) + " is not a minimal zero-sum sequence");
        }
    }

    std::optional<split_move> is_splittable_bruteforce(const sequence & s)
    {
        require_minimal(s);
        const auto & group = s.group();
        const auto support = s.support();
        for (residue x = 1 ; x < group.order() ; ++x) {
            for (auto g : support) {
                auto y = group.sub(g, x);
                if (x > y)
                    continue;
                split_move move{g, x, y};
                if (is_minimal_zero_sum(split(s, move)))
                    return move;
            }
        }
        return std::nullopt;
    }

    bool is_unsplittable_fast(const sequence & s)
    {
        if (! s.group().is_prime())
            throw precondition_error("the sigma unsplittability criterion needs prime order, got Z_"
                    + std::to_string(s.order()));
        require_minimal(s);
        const auto target = s.order() - 1;
        for (const auto & [g, size] : sigma_complement_sizes(s))
            if (size != target)
                return false;
        return true;
    }

    std::string to_string(split_method method)
    {
        switch (method) {
            case split_method::sigma_criterion: return "sigma-criterion";
            case split_method::brute_force: return "brute-force";
        }
        return "unknown";
    }

    split_classification classify(const sequence & s)
    {
        if (s.group().is_prime()) {
            if (is_unsplittable_fast(s))
                return {true, split_method::sigma_criterion, std::nullopt};
            return {false, split_method::sigma_criterion, is_splittable_bruteforce(s)};
        }
        auto witness = is_splittable_bruteforce(s);
        return {! witness.has_value(), split_method::brute_force, witness};
    }
}
