// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biosig {

enum class ErrorCode {
  InvalidArgument,
  // signal-core
  MissingFile,
  MissingSampleRate,
  NonNumericCell,
  EmptyRow,
  DegenerateRange,
  WindowTooLong,
  TooShort,
  InvalidFrequency,
  // wavelets and denoising
  UnknownWavelet,
  NonPositiveScale,
  LevelOutOfRange,
  ShapeMismatch,
  EmptyCoefficients,
  NegativeThreshold,
  LengthMismatch,
  IdenticalSignals,
  ZeroSignal,
  InsufficientLevels,
  EmptySpace,
  // time-frequency
  WrongKind,
  EmptyScales,
  // encoders
  NotNormalized,
  NonPositiveEpsilon,
  TooFewSamples,
  DegenerateData,
  NonSquareChannel,
  IoFailure,
  // qrs
  SamplingTooLow,
  TooFewPeaks,
  // harness
  KTooLarge,
  DimensionMismatch,
  EmptyInput,
  ConfigError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::MissingSampleRate: return "MissingSampleRate";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::DegenerateRange: return "DegenerateRange";
    case ErrorCode::WindowTooLong: return "WindowTooLong";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::InvalidFrequency: return "InvalidFrequency";
    case ErrorCode::UnknownWavelet: return "UnknownWavelet";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EmptyCoefficients: return "EmptyCoefficients";
    case ErrorCode::NegativeThreshold: return "NegativeThreshold";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IdenticalSignals: return "IdenticalSignals";
    case ErrorCode::ZeroSignal: return "ZeroSignal";
    case ErrorCode::InsufficientLevels: return "InsufficientLevels";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::EmptyScales: return "EmptyScales";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::NonSquareChannel: return "NonSquareChannel";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::SamplingTooLow: return "SamplingTooLow";
    case ErrorCode::TooFewPeaks: return "TooFewPeaks";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the contract
/// violation; `what()` carries the human-readable context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  /// what() without the code prefix.
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

namespace detail {

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace detail

}  // namespace biosig
