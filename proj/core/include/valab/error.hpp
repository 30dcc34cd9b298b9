#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions, or a dimension is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Requested tensor rank exceeds the configured maximum.
class RankError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the operation's domain (zero direction, non-unit
/// vector, non-positive scale factor, unsupported field, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input points do not span the ambient space.
class DegenerateBodyError : public Error {
 public:
  DegenerateBodyError(std::size_t affine_rank, std::size_t dim)
      : Error("degenerate point set: affine rank " + std::to_string(affine_rank) +
              " in dimension " + std::to_string(dim)),
        affine_rank_(affine_rank),
        dim_(dim) {}

  std::size_t affine_rank() const noexcept { return affine_rank_; }
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t affine_rank_;
  std::size_t dim_;
};

/// A geometric computation produced inconsistent results (fit residuals,
/// hull invariants).
class GeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace valab
