#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hddlogic {

// Every error raised by the library derives from Error, so callers that only
// care about "the pipeline failed" can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A field amplitude that cannot define a switching threshold.
class OutOfRange : public Error {
public:
    using Error::Error;
};

// A doubled word containing a 10/01 pair, or an odd number of symbols.
class MalformedDoubling : public Error {
public:
    using Error::Error;
};

// Train/track length mismatch, mismatched guard parameters, bad window index.
class GeometryError : public Error {
public:
    using Error::Error;
};

// First pass of a superimposition did not saturate the medium.
class WeakEraseError : public Error {
public:
    using Error::Error;
};

// A bit window produced a (1,0) or (0,1) flag pair.
class DesyncError : public Error {
public:
    using Error::Error;
};

class NonterminationError : public Error {
public:
    using Error::Error;
};

class ImageError : public Error {
public:
    using Error::Error;
};

class ImageVersionError : public ImageError {
public:
    using ImageError::ImageError;
};

class MalformedImageError : public ImageError {
public:
    using ImageError::ImageError;
};

class CellCountError : public ImageError {
public:
    using ImageError::ImageError;
};

// Raised by run_program; wraps the failing step's diagnostic.
class ProgramError : public Error {
public:
    ProgramError(std::size_t step, const std::string& what)
        : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace hddlogic
