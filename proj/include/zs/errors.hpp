#pragma once

#include <stdexcept>
#include <string>

namespace zs
{
    /// Base class for every error raised by the library.
    class error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed sequence text or an out-of-range residue.
    class parse_error : public error
    {
    public:
        using error::error;
    };

    /// An operation was called outside its domain (non-unit scale factor,
    /// composite order for a prime-only criterion, non-minimal input, ...).
    class precondition_error : public error
    {
    public:
        using error::error;
    };
}
