#include "zs/cyclic.hpp"
#include "zs/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace zs
{
    bool is_prime(std::uint64_t n)
    {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    cyclic_group::cyclic_group(std::uint32_t order) :
        order_(order),
        prime_(zs::is_prime(order))
    {
        if (order < 2)
            throw precondition_error("group order must be at least 2, got " + std::to_string(order));
        if (order > max_order)
            throw precondition_error("group order " + std::to_string(order) + " exceeds the dense representation cap of "
                    + std::to_string(max_order));
    }

    bool cyclic_group::is_unit(residue r) const noexcept
    {
        return r < order_ && std::gcd(r, order_) == 1;
    }

    std::optional<residue> cyclic_group::inverse(residue r) const noexcept
    {
        if (! is_unit(r))
            return std::nullopt;

        // extended Euclid on (r, n)
        std::int64_t old_r = r, cur_r = order_, old_s = 1, cur_s = 0;
        while (cur_r != 0) {
            auto q = old_r / cur_r;
            old_r = std::exchange(cur_r, old_r - q * cur_r);
            old_s = std::exchange(cur_s, old_s - q * cur_s);
        }
        auto inv = old_s % static_cast<std::int64_t>(order_);
        if (inv < 0)
            inv += order_;
        return static_cast<residue>(inv);
    }

    std::vector<residue> cyclic_group::units() const
    {
        std::vector<residue> result;
        for (residue u = 1 ; u < order_ ; ++u)
            if (std::gcd(u, order_) == 1)
                result.push_back(u);
        return result;
    }

    std::uint32_t cyclic_group::unit_count() const noexcept
    {
        std::uint32_t count = 0;
        for (residue u = 1 ; u < order_ ; ++u)
            if (std::gcd(u, order_) == 1)
                ++count;
        return count;
    }

    std::uint32_t cyclic_group::element_order(residue r) const noexcept
    {
        return order_ / std::gcd(r % order_, order_);
    }

    sequence::sequence(cyclic_group group) :
        group_(group),
        mult_(group.order(), 0)
    {
    }

    sequence::sequence(cyclic_group group, std::vector<std::uint32_t> multiplicities) :
        group_(group),
        mult_(std::move(multiplicities))
    {
        if (mult_.size() != group_.order())
            throw precondition_error("multiplicity vector has " + std::to_string(mult_.size()) + " entries, expected "
                    + std::to_string(group_.order()));

        std::uint64_t weighted = 0;
        for (residue a = 0 ; a < mult_.size() ; ++a) {
            length_ += mult_[a];
            weighted = (weighted + std::uint64_t{a} * mult_[a]) % group_.order();
        }
        sum_ = static_cast<residue>(weighted);
    }

    sequence sequence::from_residues(cyclic_group group, std::span<const residue> residues)
    {
        std::vector<std::uint32_t> mult(group.order(), 0);
        for (auto r : residues) {
            if (r >= group.order())
                throw precondition_error("residue " + std::to_string(r) + " out of range for Z_" + std::to_string(group.order()));
            ++mult[r];
        }
        return sequence{group, std::move(mult)};
    }

    std::vector<residue> sequence::support() const
    {
        std::vector<residue> result;
        for (residue a = 0 ; a < mult_.size() ; ++a)
            if (mult_[a] > 0)
                result.push_back(a);
        return result;
    }

    std::uint32_t sequence::max_multiplicity() const noexcept
    {
        return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
    }

    std::vector<residue> sequence::elements() const
    {
        std::vector<residue> result;
        result.reserve(length_);
        for (residue a = 0 ; a < mult_.size() ; ++a)
            result.insert(result.end(), mult_[a], a);
        return result;
    }

    sequence sequence::with_added(residue a, std::uint32_t count) const
    {
        if (a >= group_.order())
            throw precondition_error("residue " + std::to_string(a) + " out of range for Z_" + std::to_string(group_.order()));
        auto mult = mult_;
        mult[a] += count;
        return sequence{group_, std::move(mult)};
    }

    sequence sequence::with_removed(residue a, std::uint32_t count) const
    {
        if (a >= group_.order() || mult_[a] < count)
            throw precondition_error("cannot remove " + std::to_string(count) + " copies of " + std::to_string(a));
        auto mult = mult_;
        mult[a] -= count;
        return sequence{group_, std::move(mult)};
    }

    bool sequence::divides(const sequence & other) const
    {
        if (group_ != other.group_)
            return false;
        for (residue a = 0 ; a < mult_.size() ; ++a)
            if (mult_[a] > other.mult_[a])
                return false;
        return true;
    }

    std::strong_ordering sequence::compare_tuples(const sequence & other) const noexcept
    {
        // Walk both ascending expansions in lockstep without materialising them.
        residue a = 0, b = 0;
        std::uint32_t left_a = mult_.empty() ? 0 : mult_[0], left_b = other.mult_.empty() ? 0 : other.mult_[0];
        auto advance = [](const std::vector<std::uint32_t> & m, residue & r, std::uint32_t & left) {
            while (left == 0 && ++r < m.size())
                left = m[r];
        };
        advance(mult_, a, left_a);
        advance(other.mult_, b, left_b);
        while (true) {
            bool end_a = a >= mult_.size(), end_b = b >= other.mult_.size();
            if (end_a || end_b)
                return end_a == end_b ? std::strong_ordering::equal
                    : end_a ? std::strong_ordering::less : std::strong_ordering::greater;
            if (a != b)
                return a <=> b;
            auto step = std::min(left_a, left_b);
            left_a -= step;
            left_b -= step;
            advance(mult_, a, left_a);
            advance(other.mult_, b, left_b);
        }
    }

    namespace
    {
        std::uint64_t parse_number(std::string_view token, std::string_view what, std::string_view text)
        {
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
                throw parse_error("malformed " + std::string(what) + " '" + std::string(token) + "' in sequence '"
                        + std::string(text) + "'");
            return value;
        }
    }

    sequence parse_sequence(std::string_view text, std::uint32_t n)
    {
        cyclic_group group{n};
        if (text.empty())
            throw parse_error("empty sequence text");

        std::vector<std::uint32_t> mult(n, 0);
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            auto term = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);

            std::string_view residue_part = term, mult_part;
            if (auto caret = term.find('^') ; caret != std::string_view::npos) {
                residue_part = term.substr(0, caret);
                mult_part = term.substr(caret + 1);
                if (mult_part.empty())
                    throw parse_error("missing multiplicity after '^' in '" + std::string(text) + "'");
            }

            auto r = parse_number(residue_part, "residue", text);
            if (r >= n)
                throw parse_error("residue " + std::to_string(r) + " out of range for Z_" + std::to_string(n));
            std::uint64_t m = 1;
            if (! mult_part.empty()) {
                m = parse_number(mult_part, "multiplicity", text);
                if (m == 0)
                    throw parse_error("multiplicity must be at least 1 in '" + std::string(text) + "'");
            }
            if (mult[r] + m > std::numeric_limits<std::uint32_t>::max())
                throw parse_error("multiplicity overflow in '" + std::string(text) + "'");
            mult[r] += static_cast<std::uint32_t>(m);

            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        return sequence{group, std::move(mult)};
    }

    std::string format_sequence(const sequence & s)
    {
        std::ostringstream out;
        bool first = true;
        for (residue a = 0 ; a < s.order() ; ++a) {
            auto m = s.multiplicity(a);
            if (m == 0)
                continue;
            if (! first)
                out << ',';
            first = false;
            out << a;
            if (m > 1)
                out << '^' << m;
        }
        return out.str();
    }

    sequence scale(const sequence & s, residue u)
    {
        const auto & group = s.group();
        if (! group.is_unit(u))
            throw precondition_error(std::to_string(u) + " is not a unit of Z_" + std::to_string(group.order()));

        std::vector<std::uint32_t> mult(group.order(), 0);
        const auto & src = s.multiplicities();
        for (residue a = 0 ; a < group.order() ; ++a)
            if (src[a] > 0)
                mult[group.mul(a, u)] = src[a];
        return sequence{group, std::move(mult)};
    }

    sequence_class canonical_class(const sequence & s)
    {
        const auto & group = s.group();
        std::optional<sequence> best;
        std::uint32_t fixing_units = 0;
        for (auto u : group.units()) {
            auto scaled = scale(s, u);
            if (scaled == s)
                ++fixing_units;
            if (! best || scaled.compare_tuples(*best) < 0)
                best = std::move(scaled);
        }
        // orbit-stabiliser over the unit group
        return sequence_class{std::move(*best), group.unit_count() / fixing_units};
    }

    bool is_orbit_minimum(const cyclic_group & group, std::span<const residue> sorted)
    {
        std::vector<residue> scaled(sorted.size());
        for (residue u = 2 ; u < group.order() ; ++u) {
            if (! group.is_unit(u))
                continue;
            for (std::size_t i = 0 ; i < sorted.size() ; ++i)
                scaled[i] = group.mul(sorted[i], u);
            std::sort(scaled.begin(), scaled.end());
            if (std::lexicographical_compare(scaled.begin(), scaled.end(), sorted.begin(), sorted.end()))
                return false;
        }
        return true;
    }
}
