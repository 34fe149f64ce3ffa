#pragma once

#include <sixv/qism/oracle.hpp>
#include <sixv/qism/weights.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sixv::cli {

enum class Backend { rational, real };

/// Thrown for invalid flags or flag combinations (exit code 2).
struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::optional<std::string> weights;  // "a,b,c"
  std::optional<std::string> angles;   // "lambda,eta" as decimals
  std::optional<std::string> lambda;   // comma-separated decimals
  std::optional<std::string> nu;
  std::optional<std::string> eta;
  std::string backend = "auto";
  unsigned digits = kDefaultDigits;
  OracleBounds bounds{};
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
  bool timing = false;

  /// rational unless angles or spectral lists are given.
  Backend resolved_backend() const;
  bool inhomogeneous() const { return lambda.has_value() || nu.has_value(); }
  void validate() const;

  VertexWeights<Rational> rational_weights() const;
  VertexWeights<Real> real_weights() const;
  /// Eta from --eta, else from --angles.
  Real real_eta() const;
  SpectralParams spectral(std::size_t n) const;
};

std::vector<std::string> split_list(const std::string& text);
std::vector<std::size_t> parse_positions(const std::string& text);

}  // namespace sixv::cli
