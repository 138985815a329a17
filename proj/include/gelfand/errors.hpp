#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gelfand {

enum class ErrorCode {
  mixed_fields,
  division_by_zero,
  infinite_field,
  none_found,
  wrong_kind,
  arity_mismatch,
  not_monic,
  zero_polynomial,
  has_root,
  too_large,
  point_out_of_range,
  not_proper,
  common_zero,
  origin_in_image,
  avoidance_exhausted,
  parse_error,
  invalid_argument,
};

/// Name of an error code as used in reports, e.g. "MixedFields".
const char* error_name(ErrorCode code) noexcept;

/// Base of every error raised by the library. The code is stable; the message
/// is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& text)
      : Error(ErrorCode::parse_error,
              "parse error at position " + std::to_string(position) + ": expected " +
                  expected + " in \"" + text + "\""),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// A univariate polynomial claimed root-free has a root; carries the root's text.
class HasRoot : public Error {
 public:
  explicit HasRoot(std::string root)
      : Error(ErrorCode::has_root, "polynomial has a root at " + root), root_(std::move(root)) {}

  const std::string& root() const noexcept { return root_; }

 private:
  std::string root_;
};

/// The functions of a would-be cover all vanish at `point`.
class CommonZero : public Error {
 public:
  explicit CommonZero(std::size_t point)
      : Error(ErrorCode::common_zero, "functions share a common zero at point " + std::to_string(point)),
        point_(point) {}

  std::size_t point() const noexcept { return point_; }

 private:
  std::size_t point_;
};

/// Every affine point [a,1] of the projective line is hit at `step`.
class AvoidanceExhausted : public Error {
 public:
  explicit AvoidanceExhausted(std::size_t step)
      : Error(ErrorCode::avoidance_exhausted,
              "no avoidable [a,1] at step " + std::to_string(step) +
                  "; the image covers the affine line (try interpolation instead)"),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace gelfand
