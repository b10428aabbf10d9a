#ifndef ECMOD_ERROR_HH
#define ECMOD_ERROR_HH

#include <stdexcept>
#include <string>

namespace ecmod
{
    enum class ErrorKind
    {
        Argument,
        Domain,
        Parse,
        Size,
        Contract
    };

    class Error : public std::runtime_error
    {
    private:
        ErrorKind _kind;

    public:
        Error(ErrorKind kind, const std::string & message) :
            std::runtime_error(message),
            _kind(kind)
        {
        }

        auto kind() const -> ErrorKind { return _kind; }
    };

    /// Bad argument: out of range vertex, malformed token, q < 3 and so on.
    struct ArgumentError : Error
    {
        explicit ArgumentError(const std::string & m) : Error(ErrorKind::Argument, m) {}
    };

    /// The operation is not defined on this input (e.g. switching a 3-edge-coloured graph).
    struct DomainError : Error
    {
        explicit DomainError(const std::string & m) : Error(ErrorKind::Domain, m) {}
    };

    struct ParseError : Error
    {
        explicit ParseError(const std::string & m) : Error(ErrorKind::Parse, m) {}
    };

    /// Input too large for an exhaustive routine.
    struct SizeError : Error
    {
        explicit SizeError(const std::string & m) : Error(ErrorKind::Size, m) {}
    };

    /// A caller-side precondition was detected as violated.
    struct ContractError : Error
    {
        explicit ContractError(const std::string & m) : Error(ErrorKind::Contract, m) {}
    };
}

#endif
