#pragma once

#include "zs/cyclic.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace zs
{
    /// Exact rational (Σ x_i) / m kept unreduced. Equality and ordering compare
    /// values by cross-multiplication, never representations.
    class norm_value
    {
    public:
        norm_value(std::uint64_t numerator, std::uint64_t denominator);

        [[nodiscard]] std::uint64_t numerator() const noexcept { return numerator_; }
        [[nodiscard]] std::uint64_t denominator() const noexcept { return denominator_; }

        [[nodiscard]] bool is_integer() const noexcept { return numerator_ % denominator_ == 0; }
        /// Smallest integer >= the value.
        [[nodiscard]] std::uint64_t ceil() const noexcept { return (numerator_ + denominator_ - 1) / denominator_; }

        /// "num/den" as stored.
        [[nodiscard]] std::string to_string() const;
        /// Lowest terms, "k" when integral.
        [[nodiscard]] std::string reduced_string() const;

        friend bool operator==(const norm_value & a, const norm_value & b) noexcept
        {
            return static_cast<unsigned __int128>(a.numerator_) * b.denominator_
                == static_cast<unsigned __int128>(b.numerator_) * a.denominator_;
        }

        friend std::strong_ordering operator<=>(const norm_value & a, const norm_value & b) noexcept
        {
            return static_cast<unsigned __int128>(a.numerator_) * b.denominator_
                <=> static_cast<unsigned __int128>(b.numerator_) * a.denominator_;
        }

        friend bool operator==(const norm_value & a, std::uint64_t k) noexcept
        {
            return a == norm_value{k, 1};
        }

    private:
        std::uint64_t numerator_;
        std::uint64_t denominator_;
    };

    /// ‖S‖_g with representatives x in [1, ord(g)]; the element 0 maps to ord(g).
    /// Throws precondition_error if g = 0 or supp(S) is not inside ⟨g⟩.
    [[nodiscard]] norm_value g_norm(const sequence & s, residue g);

    struct index_result
    {
        norm_value value;
        /// Smallest residue among the generators attaining the minimum.
        residue generator;
    };

    /// Minimum g-norm over the generators g of ⟨supp(S)⟩.
    /// Throws precondition_error when supp(S) ⊆ {0}.
    [[nodiscard]] index_result index_with_generator(const sequence & s);

    [[nodiscard]] inline norm_value index(const sequence & s) { return index_with_generator(s).value; }
}
