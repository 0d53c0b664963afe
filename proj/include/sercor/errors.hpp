#pragma once

#include <stdexcept>
#include <string>

namespace sercor {

// Stable error codes; the CLI prints them as "error: <CODE>: message".
enum class ErrorCode {
  SingularDesign,
  DimensionError,
  LagOutOfRange,
  DegenerateResiduals,
  NonpositiveVariance,
  ZeroLeverageComplement,
  NonstationaryParameters,
  ParseError,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

struct SingularDesign : Error {
  explicit SingularDesign(const std::string& w) : Error(ErrorCode::SingularDesign, w) {}
};
struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error(ErrorCode::DimensionError, w) {}
};
struct LagOutOfRange : Error {
  explicit LagOutOfRange(const std::string& w) : Error(ErrorCode::LagOutOfRange, w) {}
};
struct DegenerateResiduals : Error {
  explicit DegenerateResiduals(const std::string& w) : Error(ErrorCode::DegenerateResiduals, w) {}
};
struct NonpositiveVariance : Error {
  explicit NonpositiveVariance(const std::string& w) : Error(ErrorCode::NonpositiveVariance, w) {}
};
struct ZeroLeverageComplement : Error {
  explicit ZeroLeverageComplement(const std::string& w) : Error(ErrorCode::ZeroLeverageComplement, w) {}
};
struct NonstationaryParameters : Error {
  explicit NonstationaryParameters(const std::string& w) : Error(ErrorCode::NonstationaryParameters, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::ParseError, w) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorCode::ConfigError, w) {}
};

}  // namespace sercor
