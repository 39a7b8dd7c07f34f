#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

// Base class for all error conditions raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeCharacteristic final : Error { using Error::Error; };
struct NonPrimitivePolynomial final : Error { using Error::Error; };
struct OrderDoesNotDivide final : Error { using Error::Error; };
struct MixedFields final : Error { using Error::Error; };

struct MalformedBlock final : Error { using Error::Error; };
struct DesignParametersInadmissible final : Error { using Error::Error; };
struct MissingEmbedding final : Error { using Error::Error; };
struct NonInjectiveEmbedding final : Error { using Error::Error; };
struct IndexOutOfRange final : Error { using Error::Error; };
struct NonCanonicalRepresentative final : Error { using Error::Error; };

struct ModeMismatch final : Error { using Error::Error; };
struct InvalidFamily final : Error { using Error::Error; };
struct UnknownFamilyName final : Error { using Error::Error; };

struct SizeBudgetExceeded final : Error { using Error::Error; };
struct EmptyColumn final : Error { using Error::Error; };
struct LabelingMismatch final : Error { using Error::Error; };

struct IoError final : Error { using Error::Error; };

} // namespace steiner
