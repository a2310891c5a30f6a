#pragma once

#include <stdexcept>
#include <string>

namespace slicelab {

/// Base class for all slicelab domain errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroNormal : Error {
    ZeroNormal() : Error("normal vector is zero") {}
};

struct AllZeroNormal : Error {
    AllZeroNormal() : Error("all entries of the normal are zero") {}
};

struct DimensionTooSmall : Error {
    explicit DimensionTooSmall(std::size_t n)
        : Error("dimension must be at least 2, got " + std::to_string(n)) {}
};

struct DimensionOutOfRange : Error {
    explicit DimensionOutOfRange(std::size_t n)
        : Error("exact pipeline supports dimensions 2..8, got " + std::to_string(n)) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct AxisOutOfRange : Error {
    explicit AxisOutOfRange(std::size_t axis, std::size_t n)
        : Error("axis " + std::to_string(axis) + " out of range for dimension " +
                std::to_string(n)) {}
};

struct NotThreeDimensional : Error {
    NotThreeDimensional() : Error("slice is not 3-dimensional") {}
};

struct DimensionUnsupported : Error {
    explicit DimensionUnsupported(std::size_t d)
        : Error("zonotope recognition supports slice dimension <= 3, got " +
                std::to_string(d)) {}
};

struct InvalidPolygon : Error {
    using Error::Error;
};

struct NotCentrallySymmetric : Error {
    NotCentrallySymmetric() : Error("polygon is not centrally symmetric") {}
};

struct ZeroGenerator : Error {
    ZeroGenerator() : Error("zonotope generator is the zero vector") {}
};

struct ZeroDirection : Error {
    ZeroDirection() : Error("projection direction is the zero vector") {}
};

struct ToleranceUnreachable : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace slicelab
