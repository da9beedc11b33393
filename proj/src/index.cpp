#include "zs/index.hpp"
#include "zs/errors.hpp"

#include <numeric>
#include <optional>
#include <vector>

namespace zs
{
    norm_value::norm_value(std::uint64_t numerator, std::uint64_t denominator) :
        numerator_(numerator),
        denominator_(denominator)
    {
        if (denominator == 0)
            throw precondition_error("norm denominator must be positive");
    }

    std::string norm_value::to_string() const
    {
        return std::to_string(numerator_) + "/" + std::to_string(denominator_);
    }

    std::string norm_value::reduced_string() const
    {
        auto d = std::gcd(numerator_, denominator_);
        if (d == 0)
            d = 1;
        if (denominator_ / d == 1)
            return std::to_string(numerator_ / d);
        return std::to_string(numerator_ / d) + "/" + std::to_string(denominator_ / d);
    }

    norm_value g_norm(const sequence & s, residue g)
    {
        const auto & group = s.group();
        const auto n = group.order();
        if (g % n == 0)
            throw precondition_error("g-norm needs a nonzero g");
        g %= n;

        const auto step = std::gcd(g, n);
        const auto m = n / step;
        // x·g = step·(x·k mod m) with k = g/step a unit mod m, so x = (s/step)·k⁻¹ mod m.
        const auto k = g / step;
        const auto k_inv = *cyclic_group{m}.inverse(k);

        std::uint64_t total = 0;
        const auto & mult = s.multiplicities();
        for (residue a = 0 ; a < n ; ++a) {
            if (mult[a] == 0)
                continue;
            if (a % step != 0)
                throw precondition_error("element " + std::to_string(a) + " is not in the subgroup generated by "
                        + std::to_string(g));
            std::uint64_t x = (std::uint64_t{a / step} * k_inv) % m;
            if (x == 0)
                x = m;
            total += x * mult[a];
        }
        return norm_value{total, m};
    }

    index_result index_with_generator(const sequence & s)
    {
        const auto & group = s.group();
        const auto n = group.order();

        std::uint32_t step = n;
        std::vector<residue> support;
        for (auto a : s.support()) {
            step = std::gcd(step, a);
            if (a != 0)
                support.push_back(a);
        }
        if (support.empty())
            throw precondition_error("index is undefined when supp(S) is contained in {0}");

        // ⟨supp(S)⟩ = ⟨step⟩ of order m; its generators are step·k, k a unit mod m.
        const auto m = n / step;
        const auto zero_count = std::uint64_t{s.multiplicity(0)} * m;
        const auto & mult = s.multiplicities();

        std::optional<index_result> best;
        cyclic_group sub{m};
        for (residue k = 1 ; k < m ; ++k) {
            if (! sub.is_unit(k))
                continue;
            const auto k_inv = *sub.inverse(k);
            std::uint64_t total = zero_count;
            for (auto a : support) {
                std::uint64_t x = (std::uint64_t{a / step} * k_inv) % m;
                if (x == 0)
                    x = m;
                total += x * mult[a];
            }
            norm_value value{total, m};
            // k ascends, so the first generator reaching the minimum has the smallest residue
            if (! best || value < best->value)
                best = index_result{value, step * k};
        }
        return *best;
    }
}
