#pragma once

#include <stdexcept>
#include <string>

namespace planewidth
{
    // Base class for every error the library raises.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Invalid arguments: bad generator parameters, out-of-range vertices, size mismatches.
    class ParameterError : public Error
    {
    public:
        using Error::Error;
    };

    // A supplied certificate (coloring, homomorphism, circular coloring) does not hold.
    class CertificateError : public Error
    {
    public:
        using Error::Error;
    };

    // An operation's geometric precondition is violated (width over threshold, diameter too large).
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    // A realization cannot be made valid (coincident adjacent images).
    class InfeasibleError : public Error
    {
    public:
        using Error::Error;
    };

    // Internal inconsistency, e.g. an inverted bound interval. Always a bug.
    class ConsistencyError : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        using Error::Error;
    };
}
