#include "config.hpp"

#include <sstream>

namespace sixv::cli {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<std::size_t> parse_positions(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-') throw UsageError("bad position '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Backend RunConfig::resolved_backend() const {
  if (backend == "rational") return Backend::rational;
  if (backend == "float") return Backend::real;
  if (backend != "auto") throw UsageError("backend must be rational or float");
  return (angles || inhomogeneous() || eta) ? Backend::real : Backend::rational;
}

void RunConfig::validate() const {
  const Backend b = resolved_backend();
  if (weights && angles) throw UsageError("give either --weights or --angles, not both");
  if (b == Backend::rational && (angles || inhomogeneous() || eta)) {
    throw UsageError("rational backend only accepts a rational weight triple");
  }
  if (b == Backend::real && digits < 30) throw UsageError("float backend needs --digits >= 30");
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
}

namespace {

template <class F, class Parse>
VertexWeights<F> triple(const std::optional<std::string>& text, Parse parse) {
  if (!text) return {F(1), F(1), F(1)};
  auto parts = split_list(*text);
  if (parts.size() != 3) throw UsageError("--weights needs a,b,c");
  try {
    return {parse(parts[0]), parse(parts[1]), parse(parts[2])};
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Real real_or_usage(const std::string& s) {
  try {
    return parse_real(s);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

VertexWeights<Rational> RunConfig::rational_weights() const {
  return triple<Rational>(weights, [](const std::string& s) {
    try {
      return parse_rational(s);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  });
}

VertexWeights<Real> RunConfig::real_weights() const {
  if (angles) {
    auto parts = split_list(*angles);
    if (parts.size() != 2) throw UsageError("--angles needs lambda,eta");
    try {
      return weights_from_angles(real_or_usage(parts[0]), real_or_usage(parts[1]));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return triple<Real>(weights, real_or_usage);
}

Real RunConfig::real_eta() const {
  if (eta) return real_or_usage(*eta);
  if (angles) {
    auto parts = split_list(*angles);
    if (parts.size() == 2) return real_or_usage(parts[1]);
  }
  throw UsageError("spectral parameters need --eta");
}

SpectralParams RunConfig::spectral(std::size_t n) const {
  if (!lambda || !nu) throw UsageError("inhomogeneous input needs both --lambda and --nu");
  std::vector<Real> l, v;
  for (const auto& s : split_list(*lambda)) l.push_back(real_or_usage(s));
  for (const auto& s : split_list(*nu)) v.push_back(real_or_usage(s));
  if (l.size() != n || v.size() != n) throw UsageError("--lambda and --nu need N entries each");
  try {
    SpectralParams p(std::move(l), std::move(v), real_eta());
    p.require_distinct();
    return p;
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace sixv::cli
