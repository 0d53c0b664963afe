#include "sercor/errors.hpp"

namespace sercor {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularDesign: return "SINGULAR_DESIGN";
    case ErrorCode::DimensionError: return "DIMENSION_ERROR";
    case ErrorCode::LagOutOfRange: return "LAG_OUT_OF_RANGE";
    case ErrorCode::DegenerateResiduals: return "DEGENERATE_RESIDUALS";
    case ErrorCode::NonpositiveVariance: return "NONPOSITIVE_VARIANCE";
    case ErrorCode::ZeroLeverageComplement: return "ZERO_LEVERAGE_COMPLEMENT";
    case ErrorCode::NonstationaryParameters: return "NONSTATIONARY_PARAMETERS";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ConfigError: return "CONFIG_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace sercor
