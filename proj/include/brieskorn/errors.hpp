#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brieskorn {

/// Base class for every error raised by the library. The CLI maps
/// SearchBudgetError to exit code 3 and everything else to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class CoprimalityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DefinitenessError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnimodularityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadVertexError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class CharacteristicParityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedFramingError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Raised instead of running a search whose size exceeds the configured
/// budget; `attempted()` is the size that was refused.
class SearchBudgetError : public Error {
public:
    SearchBudgetError(const std::string& what, std::uint64_t attempted)
        : Error(what + " (attempted size " + std::to_string(attempted) + ")")
        , attempted_(attempted)
    {
    }

    std::uint64_t attempted() const noexcept { return attempted_; }

private:
    std::uint64_t attempted_;
};

} // namespace brieskorn
