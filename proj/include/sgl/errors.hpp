#pragma once

#include <stdexcept>
#include <string>

namespace sgl {

// Error taxonomy shared across the pipeline. Every named failure mode maps to
// one of these; nothing in the library calls abort() or exits.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidLabel : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct NoPersonDetected : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct SpecError : Error { using Error::Error; };
struct ConfigMismatch : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };
struct EmptyDataset : Error { using Error::Error; };
struct EmptyEvaluation : Error { using Error::Error; };
struct EmptySequence : Error { using Error::Error; };
struct WindowError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace sgl
