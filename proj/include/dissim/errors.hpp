#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dissim {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyDataset : Error {
  EmptyDataset() : Error("dataset is empty") {}
};

struct EmptyStreamline : Error {
  explicit EmptyStreamline(std::size_t streamline_index)
      : Error("streamline " + std::to_string(streamline_index) + " has no points"),
        index(streamline_index) {}
  std::size_t index;
};

struct NonFiniteCoordinate : Error {
  explicit NonFiniteCoordinate(std::size_t streamline_index)
      : Error("streamline " + std::to_string(streamline_index) +
              " contains a non-finite coordinate"),
        index(streamline_index) {}
  std::size_t index;
};

struct MixedDimension : Error {
  MixedDimension(std::size_t streamline_index, long expected, long got)
      : Error("streamline " + std::to_string(streamline_index) + " has dimension " +
              std::to_string(got) + ", expected " + std::to_string(expected)),
        index(streamline_index) {}
  std::size_t index;
};

struct DimensionMismatch : Error {
  using Error::Error;
  DimensionMismatch() : Error("operands have different dimensions") {}
};

struct LengthMismatch : Error {
  LengthMismatch(long a, long b)
      : Error("vector lengths differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct TooManyPrototypes : Error {
  TooManyPrototypes(long p, long n)
      : Error("requested " + std::to_string(p) + " prototypes from a dataset of size " +
              std::to_string(n)) {}
};

struct ZeroVariance : Error {
  using Error::Error;
  ZeroVariance() : Error("sample has zero variance") {}
};

struct ParseError : Error {
  ParseError(std::size_t line_number, const std::string& what)
      : Error("parse error at line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  std::size_t line;
};

}  // namespace dissim
