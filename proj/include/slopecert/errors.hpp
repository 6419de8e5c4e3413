#ifndef SLOPECERT_ERRORS_HPP
#define SLOPECERT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slopecert {

/** Base class for all slopecert domain errors. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Malformed input text (triangulation files, slopes, matrices, JSON). */
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what
                       : what),
        line_(line),
        column_(column) {}

  /** 1-based line of the offending token, or 0 when not applicable. */
  std::size_t line() const { return line_; }
  /** 1-based column of the offending token, or 0 when not applicable. */
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/** The operation requires a knot-manifold-shaped triangulation
 *  (orientable, one vertex, single torus boundary) and the input is not. */
class NotAKnotManifoldError : public Error {
 public:
  using Error::Error;
};

/** A set-distance query was given an empty slope set. */
class EmptySetError : public Error {
 public:
  using Error::Error;
};

/** Certification was asked for with an empty enumerated slope set; the
 *  result would be degenerate, so no verdict is produced. */
class EmptyDeltaError : public Error {
 public:
  using Error::Error;
};

/** A gluing matrix whose determinant is not +1 or -1. */
class InvalidMatrixError : public Error {
 public:
  using Error::Error;
};

/** A coordinate vector that violates the admissibility rules (or the
 *  matching equations) of its triangulation. */
class InadmissibleVectorError : public Error {
 public:
  using Error::Error;
};

/** Enumeration exceeded its configured resource cap.  The result is
 *  partial and is never returned or cached. */
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::size_t ray_count, std::size_t cap)
      : Error("enumeration exceeded the intermediate-ray cap (" +
              std::to_string(ray_count) + " rays, cap " + std::to_string(cap) +
              "); result discarded as partial"),
        ray_count_(ray_count),
        cap_(cap) {}

  std::size_t ray_count() const { return ray_count_; }
  std::size_t cap() const { return cap_; }
  /** Always true: the computation stopped before completing. */
  bool partial() const { return true; }

 private:
  std::size_t ray_count_;
  std::size_t cap_;
};

}  // namespace slopecert

#endif  // SLOPECERT_ERRORS_HPP
