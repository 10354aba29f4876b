#ifndef CAUCHY_ERROR_HPP
#define CAUCHY_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cauchy
{

/// Precision index: an approximation at precision k carries error at most 2^-k.
using Precision = std::int64_t;

/// Root of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A dyadic exponent left the representable range. Internal invariant violation.
class ExponentOverflow : public Error
{
public:
    using Error::Error;
};

/// A precision, term count or iteration budget was exceeded.
class ResourceLimit : public Error
{
public:
    using Error::Error;
};

/// An apartness certificate failed revalidation against the value it claims to describe.
class InvalidCertificate : public Error
{
public:
    using Error::Error;
};

/// Malformed input text. position() is a byte offset into the input.
class ParseError : public Error
{
public:
    ParseError(std::size_t position, const std::string &message)
        : Error("parse error at byte " + std::to_string(position) + ": " + message), position_(position)
    {
    }

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Largest precision any node will accept. Requests beyond it raise ResourceLimit.
inline constexpr Precision max_supported_precision = Precision{1} << 22;

} // namespace cauchy

#endif
