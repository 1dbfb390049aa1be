#pragma once

#include <stdexcept>
#include <string>

namespace toricfill {

// Typed domain errors. The code survives into CLI error documents.
class Error : public std::runtime_error {
public:
  enum class Code {
    NotPrimitive,
    NotCoprime,
    DivisionByZero,
    TooShort,
    InvalidSite,
    NotMinusOne,
    NoRealization,
    RaysDoNotCoincide,
    EndEdgesNotParallel,
    NoClosedRealization,
    NotToric,
    InvalidLens,
    UnsupportedTarget,
    DimensionMismatch,
    DegenerateAngle,
    InvalidGraph,
    IoError,
  };

  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

  const char* code_name() const { return code_name(code_); }

  static const char* code_name(Code c) {
    switch (c) {
      case Code::NotPrimitive: return "NotPrimitive";
      case Code::NotCoprime: return "NotCoprime";
      case Code::DivisionByZero: return "DivisionByZero";
      case Code::TooShort: return "TooShort";
      case Code::InvalidSite: return "InvalidSite";
      case Code::NotMinusOne: return "NotMinusOne";
      case Code::NoRealization: return "NoRealization";
      case Code::RaysDoNotCoincide: return "RaysDoNotCoincide";
      case Code::EndEdgesNotParallel: return "EndEdgesNotParallel";
      case Code::NoClosedRealization: return "NoClosedRealization";
      case Code::NotToric: return "NotToric";
      case Code::InvalidLens: return "InvalidLens";
      case Code::UnsupportedTarget: return "UnsupportedTarget";
      case Code::DimensionMismatch: return "DimensionMismatch";
      case Code::DegenerateAngle: return "DegenerateAngle";
      case Code::InvalidGraph: return "InvalidGraph";
      case Code::IoError: return "IoError";
    }
    return "Unknown";
  }

private:
  Code code_;
};

}  // namespace toricfill
