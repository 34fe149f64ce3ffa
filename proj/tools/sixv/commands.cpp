#include "commands.hpp"

#include <sixv/efp/efp_engine.hpp>
#include <sixv/ik/determinant.hpp>
#include <sixv/row/row_engine.hpp>
#include <sixv/verify/verifier.hpp>

#include <chrono>
#include <functional>
#include <set>

namespace sixv::cli {
namespace {

const char* backend_name(Backend b) { return b == Backend::rational ? "rational" : "float"; }

struct Routed {
  std::string route;
  std::string value;
  std::optional<double> ms;
};

// Evaluates `fn` and records its runtime only when timing is on, so that
// default output stays byte-identical between runs.
template <class F>
std::pair<F, std::optional<double>> timed(const RunConfig& cfg, const std::function<F()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  F v = fn();
  if (!cfg.timing) return {std::move(v), std::nullopt};
  const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
  return {std::move(v), d.count()};
}

template <class F>
Json pairwise(const std::vector<std::pair<std::string, F>>& values, std::size_t i) {
  if (values.size() < 2) return nullptr;
  Json a = Json::object();
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j != i) a[values[j].first] = ScalarTraits<F>::equal(values[i].second, values[j].second);
  }
  return a;
}

template <class F>
void push_routes(std::vector<Record>& out, const Json& query, Backend b,
                 const std::vector<std::pair<std::string, F>>& values, const std::vector<std::optional<double>>& ms) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.push_back({query, backend_name(b), values[i].first, to_string(values[i].second), pairwise(values, i), ms[i]});
  }
}

Json input_of(const RunConfig& cfg) {
  Json in = Json::object();
  if (cfg.weights) in["weights"] = *cfg.weights;
  if (cfg.angles) in["angles"] = *cfg.angles;
  if (cfg.lambda) in["lambda"] = *cfg.lambda;
  if (cfg.nu) in["nu"] = *cfg.nu;
  if (cfg.eta) in["eta"] = *cfg.eta;
  return in;
}

std::vector<std::string> pick_routes(const std::string& route, const std::string& both_a, const std::string& both_b) {
  if (route == "both") return {both_a, both_b};
  if (route == both_a || route == both_b) return {route};
  throw UsageError("route must be " + both_a + ", " + both_b + " or both");
}

template <class F>
CommandResult partition_homogeneous(const RunConfig& cfg, const PartitionArgs& args, const VertexWeights<F>& w,
                                    const std::function<F()>& determinant) {
  const Backend b = cfg.resolved_backend();
  Json query = {{"command", "partition"}, {"N", args.n}, {"input", input_of(cfg)}};
  std::vector<std::pair<std::string, F>> values;
  std::vector<std::optional<double>> ms;
  for (const auto& route : pick_routes(args.route, "oracle", "determinant")) {
    std::function<F()> fn = route == "oracle" ? std::function<F()>([&] {
      return partition_qism(LatticeWeights<F>::homogeneous(w, args.n), cfg.bounds);
    })
                                              : determinant;
    auto [v, t] = timed<F>(cfg, fn);
    values.emplace_back(route, v);
    ms.push_back(t);
  }
  CommandResult res;
  push_routes(res.records, query, b, values, ms);
  return res;
}

template <class F>
CommandResult rowprob_impl(const RunConfig& cfg, const RowProbArgs& args, const VertexWeights<F>& w) {
  const Backend b = cfg.resolved_backend();
  if (args.s > args.n) throw UsageError("rowprob needs s <= N");
  detail::check_qism(args.n, cfg.bounds);
  RowEngine<F> row(w, cfg.bounds);
  const auto lw = LatticeWeights<F>::homogeneous(w, args.n);
  const auto routes = pick_routes(args.route, "formula", "oracle");

  std::vector<RowConfig> configs;
  if (args.positions) {
    try {
      configs.emplace_back(args.n, parse_positions(*args.positions));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (configs.front().row() != args.s) throw UsageError("--positions must list s entries");
  } else {
    configs = RowConfig::all(args.n, args.s);
  }

  CommandResult res;
  std::vector<F> sums(routes.size(), F(0));
  for (const auto& c : configs) {
    Json query = {{"command", "rowprob"}, {"N", args.n}, {"s", args.s}, {"positions", c.positions()},
                  {"input", input_of(cfg)}};
    std::vector<std::pair<std::string, F>> values;
    std::vector<std::optional<double>> ms;
    for (std::size_t i = 0; i < routes.size(); ++i) {
      std::function<F()> fn = routes[i] == "formula"
                                  ? std::function<F()>([&] { return row.row_prob_formula(c); })
                                  : std::function<F()>([&] { return row_prob_oracle(c, lw, cfg.bounds); });
      auto [v, t] = timed<F>(cfg, fn);
      sums[i] += v;
      values.emplace_back(routes[i], v);
      ms.push_back(t);
    }
    push_routes(res.records, query, b, values, ms);
  }
  if (!args.positions) {
    Json query = {{"command", "rowprob"}, {"N", args.n}, {"s", args.s}, {"normalization", true},
                  {"input", input_of(cfg)}};
    std::vector<std::pair<std::string, F>> values;
    for (std::size_t i = 0; i < routes.size(); ++i) {
      if (!ScalarTraits<F>::equal(sums[i], F(1))) {
        throw Error("normalization of the " + routes[i] + " table is " + to_string(sums[i]) + ", not 1");
      }
      values.emplace_back(routes[i], sums[i]);
    }
    push_routes(res.records, query, b, values, std::vector<std::optional<double>>(values.size()));
  }
  return res;
}

template <class F>
CommandResult efp_impl(const RunConfig& cfg, const EfpArgs& args, const VertexWeights<F>& w) {
  const Backend b = cfg.resolved_backend();
  const EfpQuery q{args.n, args.r, args.s};
  try {
    q.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  detail::check_qism(args.n, cfg.bounds);
  RowEngine<F> row(w, cfg.bounds);
  EfpEngine<F> efp(row);
  const std::map<std::string, std::function<F()>> known{
      {"oracle", [&] { return efp.oracle(q); }},    {"row-sum", [&] { return efp.from_row_sum(q); }},
      {"rep1", [&] { return efp.rep1(q); }},        {"rep2", [&] { return efp.rep2(q); }},
      {"double", [&] { return efp.efp_double(q); }}};
  std::vector<std::pair<std::string, F>> values;
  std::vector<std::optional<double>> ms;
  std::set<std::string> seen;
  for (const auto& route : split_list(args.routes)) {
    auto it = known.find(route);
    if (it == known.end()) throw UsageError("unknown EFP route '" + route + "'");
    if (!seen.insert(route).second) throw UsageError("EFP route '" + route + "' listed twice");
    auto [v, t] = timed<F>(cfg, it->second);
    values.emplace_back(route, v);
    ms.push_back(t);
  }
  Json query = {{"command", "efp"}, {"N", args.n}, {"r", args.r}, {"s", args.s}, {"input", input_of(cfg)}};
  CommandResult res;
  push_routes(res.records, query, b, values, ms);
  return res;
}

}  // namespace

CommandResult cmd_partition(const RunConfig& cfg, const PartitionArgs& args) {
  cfg.validate();
  if (args.n == 0) throw UsageError("N must be positive");
  detail::check_qism(args.n, cfg.bounds);
  if (cfg.resolved_backend() == Backend::rational) {
    const auto w = cfg.rational_weights();
    return partition_homogeneous<Rational>(cfg, args, w, [&] { return ik_det_hom_exact(args.n, w); });
  }
  if (!cfg.inhomogeneous()) {
    const auto w = cfg.real_weights();
    if (cfg.angles) {
      const auto parts = split_list(*cfg.angles);
      const Real lambda = parse_real(parts[0]), eta = parse_real(parts[1]);
      return partition_homogeneous<Real>(cfg, args, w, [&] { return ik_det_hom(args.n, lambda, eta); });
    }
    return partition_homogeneous<Real>(cfg, args, w, [&] { return ik_det_hom_weights(args.n, w); });
  }
  const SpectralParams p = cfg.spectral(args.n);
  Json query = {{"command", "partition"}, {"N", args.n}, {"input", input_of(cfg)}};
  std::vector<std::pair<std::string, Real>> values;
  std::vector<std::optional<double>> ms;
  for (const auto& route : pick_routes(args.route, "oracle", "determinant")) {
    std::function<Real()> fn = route == "oracle" ? std::function<Real()>([&] {
      return partition_qism(LatticeWeights<Real>::trigonometric(p), cfg.bounds);
    })
                                                 : std::function<Real()>([&] { return ik_det_inhom(p); });
    auto [v, t] = timed<Real>(cfg, fn);
    values.emplace_back(route, v);
    ms.push_back(t);
  }
  CommandResult res;
  push_routes(res.records, query, Backend::real, values, ms);
  return res;
}

CommandResult cmd_rowprob(const RunConfig& cfg, const RowProbArgs& args) {
  cfg.validate();
  if (cfg.inhomogeneous()) throw UsageError("rowprob takes homogeneous weights only");
  if (cfg.resolved_backend() == Backend::rational) return rowprob_impl<Rational>(cfg, args, cfg.rational_weights());
  return rowprob_impl<Real>(cfg, args, cfg.real_weights());
}

CommandResult cmd_efp(const RunConfig& cfg, const EfpArgs& args) {
  cfg.validate();
  if (cfg.inhomogeneous()) throw UsageError("efp takes homogeneous weights only");
  if (cfg.resolved_backend() == Backend::rational) return efp_impl<Rational>(cfg, args, cfg.rational_weights());
  return efp_impl<Real>(cfg, args, cfg.real_weights());
}

CommandResult cmd_verify(const RunConfig& cfg, const VerifyArgs& args) {
  cfg.validate();
  if (cfg.resolved_backend() != Backend::rational) throw UsageError("verify runs on the rational backend only");
  std::optional<VertexWeights<Rational>> given;
  if (cfg.weights) given = cfg.rational_weights();
  std::vector<TDelta> params;
  if (given) params.emplace_back(given->t(), given->delta());

  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (args.suite == "sum-identity") {
      rep = check_sum_identity(args.s, args.degree);
    } else if (args.suite == "identity1") {
      std::vector<VertexWeights<Rational>> ws;
      if (given) ws.push_back(*given);
      else ws = {{1, 1, 1}, {3, 4, 5}, {2, 1, 2}};
      rep = check_identity1({args.s, args.trials, cfg.seed, ws, cfg.bounds});
    } else if (args.suite == "identity2") {
      rep = check_identity2({args.s, args.trials, cfg.seed, params});
    } else if (args.suite == "w-lemma") {
      rep = check_w_lemma({args.s, args.trials, args.r.value_or(args.s + 1), cfg.seed, params});
    } else if (args.suite == "cross-check") {
      rep = cross_check_suite(given.value_or(VertexWeights<Rational>{1, 1, 1}),
                              {args.n_max, cfg.seed, cfg.bounds, std::min<std::size_t>(args.trials, 5)});
    } else {
      throw UsageError("suite must be identity1, identity2, sum-identity, w-lemma or cross-check");
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const BudgetError& e) {
    throw UsageError(e.what());
  }
  std::optional<double> total_ms;
  if (cfg.timing) {
    total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  CommandResult res;
  for (const auto& item : rep.items) {
    Json query = {{"command", "verify"}, {"suite", args.suite}, {"check", item.name}};
    res.records.push_back({query, "rational", args.suite, item.passed ? "pass" : "fail: " + item.detail,
                           item.passed, std::nullopt});
  }
  Json query = {{"command", "verify"}, {"suite", args.suite}, {"summary", true}, {"seed", cfg.seed}};
  res.records.push_back({query, "rational", args.suite,
                         std::to_string(rep.items.size() - rep.failures()) + "/" + std::to_string(rep.items.size()) +
                             " passed",
                         rep.passed(), total_ms});
  res.exit_code = rep.passed() ? 0 : 1;
  return res;
}

}  // namespace sixv::cli
