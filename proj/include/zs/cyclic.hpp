#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zs
{
    using residue = std::uint32_t;

    /// Largest group order accepted by the dense multiplicity representation.
    inline constexpr std::uint32_t max_order = 1u << 16;

    [[nodiscard]] bool is_prime(std::uint64_t n);

    /// The cyclic group Z_n, 2 <= n <= max_order.
    class cyclic_group
    {
    public:
        explicit cyclic_group(std::uint32_t order);

        [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
        [[nodiscard]] bool is_prime() const noexcept { return prime_; }

        [[nodiscard]] bool is_unit(residue r) const noexcept;
        [[nodiscard]] std::optional<residue> inverse(residue r) const noexcept;
        [[nodiscard]] std::vector<residue> units() const;
        [[nodiscard]] std::uint32_t unit_count() const noexcept;

        /// Order of r as a group element, n / gcd(r, n).
        [[nodiscard]] std::uint32_t element_order(residue r) const noexcept;

        [[nodiscard]] residue add(residue a, residue b) const noexcept
        {
            auto s = a + b;
            return s >= order_ ? s - order_ : s;
        }
        [[nodiscard]] residue sub(residue a, residue b) const noexcept { return a >= b ? a - b : a + order_ - b; }
        [[nodiscard]] residue neg(residue a) const noexcept { return a == 0 ? 0 : order_ - a; }
        [[nodiscard]] residue mul(residue a, residue b) const noexcept
        {
            return static_cast<residue>(std::uint64_t{a} * b % order_);
        }

        bool operator==(const cyclic_group &) const = default;

    private:
        std::uint32_t order_;
        bool prime_;
    };

    /// A finite multiset over Z_n stored as a dense multiplicity vector.
    /// Immutable after construction; all edits return a new value.
    class sequence
    {
    public:
        explicit sequence(cyclic_group group);
        sequence(cyclic_group group, std::vector<std::uint32_t> multiplicities);

        /// Residues must already lie in [0, n).
        static sequence from_residues(cyclic_group group, std::span<const residue> residues);

        [[nodiscard]] const cyclic_group & group() const noexcept { return group_; }
        [[nodiscard]] std::uint32_t order() const noexcept { return group_.order(); }
        [[nodiscard]] std::uint32_t multiplicity(residue a) const { return mult_.at(a); }
        [[nodiscard]] const std::vector<std::uint32_t> & multiplicities() const noexcept { return mult_; }
        [[nodiscard]] std::uint64_t length() const noexcept { return length_; }
        [[nodiscard]] residue sum() const noexcept { return sum_; }
        [[nodiscard]] bool empty() const noexcept { return length_ == 0; }

        [[nodiscard]] std::vector<residue> support() const;
        [[nodiscard]] std::uint32_t max_multiplicity() const noexcept;
        [[nodiscard]] bool contains(residue a) const { return a < mult_.size() && mult_[a] > 0; }

        /// Elements with repetition, ascending.
        [[nodiscard]] std::vector<residue> elements() const;

        [[nodiscard]] sequence with_added(residue a, std::uint32_t count = 1) const;
        /// Throws precondition_error unless at least `count` copies of a are present.
        [[nodiscard]] sequence with_removed(residue a, std::uint32_t count = 1) const;

        /// True iff every multiplicity here is at most the one in `other`.
        [[nodiscard]] bool divides(const sequence & other) const;

        bool operator==(const sequence & other) const noexcept
        {
            return group_ == other.group_ && mult_ == other.mult_;
        }

        /// Lexicographic order of the ascending element tuples; shorter prefix first.
        [[nodiscard]] std::strong_ordering compare_tuples(const sequence & other) const noexcept;

    private:
        cyclic_group group_;
        std::vector<std::uint32_t> mult_;
        std::uint64_t length_ = 0;
        residue sum_ = 0;
    };

    /// Unit-orbit representative.
    struct sequence_class
    {
        sequence canonical;
        std::uint32_t orbit_size;
    };

    /// Grammar: term ("," term)*, term = residue | residue "^" mult.
    [[nodiscard]] sequence parse_sequence(std::string_view text, std::uint32_t n);

    /// Canonical text "a1^m1,a2,..." with ascending residues and ^1 omitted.
    [[nodiscard]] std::string format_sequence(const sequence & s);

    /// Multiplies every element by the unit u; throws precondition_error otherwise.
    [[nodiscard]] sequence scale(const sequence & s, residue u);

    [[nodiscard]] sequence_class canonical_class(const sequence & s);

    /// True iff the ascending tuple is lexicographically minimal among all its
    /// unit scalings. The tuple must be sorted ascending.
    [[nodiscard]] bool is_orbit_minimum(const cyclic_group & group, std::span<const residue> sorted);
}
