#include "sixv/verify/verifier.hpp"

#include "sixv/algebra/antisym.hpp"
#include "sixv/algebra/residue.hpp"
#include "sixv/efp/efp_engine.hpp"
#include "sixv/ik/determinant.hpp"
#include "sixv/row/row_engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

namespace sixv {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return std::size_t(std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return !c.passed; }));
}

void Report::add(std::string name, bool ok, std::string detail) {
  items.push_back({std::move(name), ok, std::move(detail)});
}

void Report::append(const Report& other) {
  for (const auto& item : other.items) {
    items.push_back({other.suite.empty() ? item.name : other.suite + "/" + item.name, item.passed, item.detail});
  }
}

Rational RationalSampler::next() {
  const std::uint64_t x = rng_();
  const long p = long(x % 21) - 10;
  const long q = 1 + long((x >> 32) % 9);
  return Rational(p, q);
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational v = next();
    if (v != 0) return v;
  }
}

std::vector<Rational> RationalSampler::distinct_point(std::size_t s) {
  std::vector<Rational> z;
  while (z.size() < s) {
    Rational v = next();
    if (v == 0 || v == 1 || std::find(z.begin(), z.end(), v) != z.end()) continue;
    z.push_back(v);
  }
  return z;
}

namespace {

using P = MultiPoly<Rational>;

std::string point_str(const std::vector<Rational>& z) {
  std::string out = "z=(";
  for (std::size_t i = 0; i < z.size(); ++i) out += (i ? "," : "") + to_string(z[i]);
  return out + ")";
}

std::string params_str(const Rational& t, const Rational& d) {
  return "t=" + to_string(t) + " Delta=" + to_string(d);
}

void require_size(std::size_t s, std::size_t max, const char* what) {
  if (s < 1) throw DomainError(std::string(what) + " needs s >= 1");
  if (s > max) throw BudgetError(std::string(what) + " limited to s <= " + std::to_string(max));
}

// Retries `attempt` on fresh points while it lands on a pole.
template <class Fn>
void sample_until_regular(const char* what, Fn attempt) {
  for (unsigned i = 0; i < kMaxResample; ++i) {
    try {
      attempt();
      return;
    } catch (const SingularError&) {
    }
  }
  throw Error(std::string(what) + ": no regular sample point found");
}

TDelta draw_params(RationalSampler& rs) {
  Rational t = rs.next_nonzero();
  Rational d = rs.next();
  return {t, d};
}

// prod_{j<k} ((t^2-2Dt) z_j + 1)(t^2 z_j z_k - 2Dt z_k + 1)/(z_j - 1)
Rational shared_bracket(std::span<const Rational> z, const Rational& t, const Rational& d) {
  Rational acc(1);
  const Rational lin = t * t - Rational(2) * d * t;
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (std::size_t k = j + 1; k < z.size(); ++k) {
      if (z[j] == 1) throw SingularError("bracket pole at z_j = 1");
      acc *= (lin * z[j] + Rational(1)) * (t * t * z[j] * z[k] - Rational(2) * d * t * z[k] + Rational(1)) /
             (z[j] - Rational(1));
    }
  }
  return acc;
}

}  // namespace

Report check_sum_identity(std::size_t s, unsigned degree) {
  require_size(s, 8, "sum identity");
  if (degree < s) throw DomainError("sum identity needs D >= s");
  if (degree > kMaxExponent) throw BudgetError("sum identity degree exceeds 255");
  Report rep{"sum-identity", {}};
  RingPtr ring = PolyRing::numbered("X", s);

  // Left side as a direct finite sum. With r fixed, e_j = r - s + j - r_j
  // runs over e_1 >= ... >= e_s >= 0; enumerate r_s, r_{s-1}, ... downwards.
  const long r = long(s) + 1;
  std::vector<P::Term> terms;
  std::vector<long> rj(s);
  std::function<void(std::size_t, long, unsigned)> rec = [&](std::size_t j, long upper, unsigned used) {
    // j counts down from s-1; upper is the largest admissible r_j.
    for (long v = upper;; --v) {
      const long e = r - long(s) + long(j) + 1 - v;
      if (used + unsigned(e) > degree) break;
      rj[j] = v;
      if (j == 0) {
        Monomial m = 0;
        for (std::size_t i = 0; i < s; ++i) m |= mono::unit(i, unsigned(r - long(s) + long(i) + 1 - rj[i]));
        terms.emplace_back(m, Rational(1));
      } else {
        rec(j - 1, v - 1, used + unsigned(e));
      }
    }
  };
  rec(s - 1, r, 0);
  P lhs = P::from_terms(ring, std::move(terms));

  Monomial bound = 0;
  for (std::size_t i = 0; i < s; ++i) bound |= mono::unit(i, degree);
  P rhs = P::constant(ring, Rational(1));
  P prefix = rhs;
  for (std::size_t j = 0; j < s; ++j) {
    prefix *= P::variable(ring, j);
    rhs = rhs.mul_truncated(inverse_series(P::constant(ring, Rational(1)) - prefix, bound), bound)
              .truncated_total(degree);
  }

  P diff = lhs - rhs;
  std::ostringstream name;
  name << "s=" << s << " D=" << degree;
  if (diff.is_zero()) {
    rep.add(name.str(), true);
  } else {
    // Smallest total degree first.
    const P::Term* first = &diff.terms().front();
    for (const auto& term : diff.terms()) {
      if (mono::total_degree(term.first) < mono::total_degree(first->first)) first = &term;
    }
    P lead = P::term(ring, first->first, Rational(1));
    rep.add(name.str(), false,
            "first mismatch at " + lead.str() + ": lhs " + to_string(lhs.coefficient(first->first)) + ", rhs " +
                to_string(rhs.coefficient(first->first)));
  }
  return rep;
}

Report check_identity1(const Identity1Options& opt) {
  require_size(opt.s, kMaxIdentitySize, "identity1");
  if (opt.weights.empty()) throw DomainError("identity1 needs at least one weight triple");
  const std::size_t s = opt.s;
  Report rep{"identity1", {}};
  RationalSampler rs(opt.seed);

  // Z_s and h_{s,s} per weight triple, from the oracle.
  std::vector<std::unique_ptr<RowEngine<Rational>>> engines;
  std::vector<Rational> zs;
  std::vector<P> hss;
  for (const auto& w : opt.weights) {
    engines.push_back(std::make_unique<RowEngine<Rational>>(w, opt.bounds));
    zs.push_back(partition_qism(LatticeWeights<Rational>::homogeneous(w, s), opt.bounds));
    hss.push_back(engines.back()->h_multi_build(s, s).poly);
  }

  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const std::size_t wi = trial % opt.weights.size();
    const auto& w = opt.weights[wi];
    const Rational t = w.t(), d = w.delta();
    const Rational lin = w.t2_minus_2delta_t();
    std::vector<Rational> z;
    Rational lhs, rhs;
    sample_until_regular("identity1", [&] {
      z = rs.distinct_point(s);
      std::vector<Rational> u;
      for (const auto& zj : z) u.push_back(u_of_z(zj, t, d));
      lhs = antisymmetrize_at<Rational>(
          [&](std::span<const Rational> x) { return shared_bracket(x, t, d); }, std::span<const Rational>(z));
      Rational r = zs[wi] / (Rational(factorial(unsigned(s))) * power(w.a, long(s * (s - 1))) *
                             power(w.c, long(s)));
      for (const auto& zj : z) r *= power(Rational(lin * zj + Rational(1)) / (zj - Rational(1)), long(s - 1));
      r *= vandermonde_value<Rational>(z);
      r *= hss[wi].evaluate(u);
      rhs = r;
    });
    std::ostringstream name;
    name << "s=" << s << " trial " << trial + 1;
    const bool ok = lhs == rhs;
    rep.add(name.str(), ok,
            ok ? std::string()
               : "a=" + to_string(w.a) + " b=" + to_string(w.b) + " c=" + to_string(w.c) + " " + point_str(z) +
                     " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
  }
  return rep;
}

Report check_identity2(const Identity2Options& opt) {
  require_size(opt.s, kMaxIdentitySize, "identity2");
  const std::size_t s = opt.s;
  Report rep{"identity2", {}};
  RationalSampler rs(opt.seed);
  const Rational sign = (s * (s + 1) / 2) % 2 ? Rational(-1) : Rational(1);
  const Rational sfact(factorial(unsigned(s)));

  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const TDelta td = opt.params.empty() ? draw_params(rs) : opt.params[trial % opt.params.size()];
    const Rational& t = td.first;
    const Rational& d = td.second;
    std::vector<Rational> z;
    Rational lhs, rhs;
    sample_until_regular("identity2", [&] {
      z = rs.distinct_point(s);
      lhs = sfact * antisymmetrize_at<Rational>(
                        [&](std::span<const Rational> x) {
                          Rational v = phi_s_at_ones<Rational>(x, t, d);
                          for (std::size_t j = 0; j < s; ++j) {
                            for (std::size_t k = j + 1; k < s; ++k) {
                              v *= x[j] * (t * t * x[j] * x[k] - Rational(2) * d * t * x[k] + Rational(1));
                            }
                          }
                          return v;
                        },
                        std::span<const Rational>(z));
      Rational den(1);
      for (const auto& zj : z) den *= zj - Rational(1);
      rhs = sign / den *
            antisymmetrize_at<Rational>([&](std::span<const Rational> x) { return shared_bracket(x, t, d); },
                                        std::span<const Rational>(z));
    });
    std::ostringstream name;
    name << "s=" << s << " trial " << trial + 1;
    const bool ok = lhs == rhs;
    rep.add(name.str(), ok,
            ok ? std::string()
               : params_str(t, d) + " " + point_str(z) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
  }
  return rep;
}

Report check_w_lemma(const WLemmaOptions& opt) {
  require_size(opt.s, kMaxWLemmaSize, "w-lemma");
  const std::size_t s = opt.s;
  Report rep{"w-lemma", {}};
  RationalSampler rs(opt.seed);
  RingPtr ring = PolyRing::numbered("w", s);
  const std::size_t kk = s * (s - 1) / 2;
  const Rational sign = kk % 2 ? Rational(-1) : Rational(1);
  const Rational sfact(factorial(unsigned(s)));
  std::vector<std::size_t> vars(s);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  const P vand = vandermonde<Rational>(ring, std::span<const std::size_t>(vars));
  const std::vector<Rational> ones(s, Rational(1));

  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const TDelta td = opt.params.empty() ? draw_params(rs) : opt.params[trial % opt.params.size()];
    const Rational& t = td.first;
    const Rational& d = td.second;
    std::vector<Rational> z;
    Rational lhs, rhs;
    sample_until_regular("w-lemma", [&] {
      z = rs.distinct_point(s);
      rhs = sign * sfact * phi_s_at_ones<Rational>(std::span<const Rational>(z), t, d);
      // prod (w_j - w_k)^2 / prod (w_k - w_j) leaves prod_{j<k} (w_k - w_j).
      std::vector<P> base{vand};
      std::vector<DenominatorFactor<Rational>> den;
      for (std::size_t j = 0; j < s; ++j) {
        base.push_back(P::term(ring, mono::unit(j, unsigned(opt.r)), Rational(1)));
        den.push_back({kernel::shifted_var<Rational>(ring, j, Rational(1)), unsigned(s)});
      }
      std::vector<P> pairs;
      std::vector<P> prods;
      P wp = P::constant(ring, Rational(1));
      Rational zp(1);
      for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t k = j + 1; k < s; ++k) pairs.push_back(kernel::pair_factor(ring, j, k, t, d));
        wp *= P::variable(ring, j);
        zp *= z[j];
        if (zp == 1) throw SingularError("bracket pole at z_1...z_j = 1");
        prods.push_back(wp - zp);
      }
      Rational total(0);
      std::vector<std::size_t> target(s);
      for (const auto& perm : signed_permutations(s)) {
        for (std::size_t i = 0; i < s; ++i) target[i] = perm.image[i];
        std::vector<P> num = base;
        for (const auto& p : pairs) num.push_back(p.permuted(target));
        std::vector<DenominatorFactor<Rational>> dd = den;
        for (const auto& p : prods) dd.push_back({p.permuted(target), 1u});
        Rational res = residue_of_product<Rational>(num, dd, ones);
        total += perm.sign > 0 ? res : Rational(-res);
      }
      lhs = total / sfact;
    });
    std::ostringstream name;
    name << "s=" << s << " r=" << opt.r << " trial " << trial + 1;
    const bool ok = lhs == rhs;
    rep.add(name.str(), ok,
            ok ? std::string()
               : params_str(t, d) + " " + point_str(z) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
  }
  return rep;
}

namespace {

std::string weights_str(const VertexWeights<Rational>& w) {
  return "(" + to_string(w.a) + "," + to_string(w.b) + "," + to_string(w.c) + ")";
}

std::string mismatch(const Rational& x, const Rational& y) { return to_string(x) + " != " + to_string(y); }

}  // namespace

Report cross_check_suite(const VertexWeights<Rational>& w, const CrossCheckOptions& opt) {
  if (opt.n_max < 1) throw DomainError("cross-check needs N_max >= 1");
  if (opt.n_max > opt.bounds.qism_max) throw BudgetError("cross-check N_max exceeds the oracle bound");
  Report rep{"cross-check", {}};
  RowEngine<Rational> row(w, opt.bounds);
  EfpEngine<Rational> efp(row);
  const std::string tag = " w=" + weights_str(w);

  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    const auto lw = LatticeWeights<Rational>::homogeneous(w, n);
    const std::string nn = "N=" + std::to_string(n);
    const Rational zq = partition_qism(lw, opt.bounds);

    const Rational zh = partition_qism_horizontal(lw, opt.bounds);
    rep.add("partition " + nn + " qism-vertical=horizontal", zq == zh, zq == zh ? "" : mismatch(zq, zh) + tag);
    if (n <= opt.bounds.dfs_max) {
      const Rational zd = enumerate_dfs(lw, opt.bounds).value;
      rep.add("partition " + nn + " dfs=qism", zd == zq, zd == zq ? "" : mismatch(zd, zq) + tag);
    }
    const PartitionValue<Rational> pv = row.partition(n);
    rep.add("partition " + nn + " " + pv.route + "=qism", pv.value == zq,
            pv.value == zq ? "" : mismatch(pv.value, zq) + tag);

    for (std::size_t s = 0; s <= n; ++s) {
      const std::string ns = nn + " s=" + std::to_string(s);
      std::string top_bad, bot_bad;
      Rational sum_oracle(0), sum_formula(0);
      for (const auto& cfg : RowConfig::all(n, s)) {
        const Rational to = ztop_oracle(cfg, lw, opt.bounds), tr = row.ztop_residue(cfg);
        const Rational bo = zbot_oracle(cfg, lw, opt.bounds), br = row.zbot_residue(cfg);
        if (to != tr && top_bad.empty()) top_bad = cfg.str() + ": " + mismatch(tr, to);
        if (bo != br && bot_bad.empty()) bot_bad = cfg.str() + ": " + mismatch(br, bo);
        sum_oracle += to * bo / zq;
        sum_formula += tr * br / pv.value;
      }
      rep.add("ztop residue=oracle " + ns, top_bad.empty(), top_bad.empty() ? "" : top_bad + tag);
      rep.add("zbot residue=oracle " + ns, bot_bad.empty(), bot_bad.empty() ? "" : bot_bad + tag);
      const bool norm = sum_oracle == 1 && sum_formula == 1;
      rep.add("normalization " + ns, norm,
              norm ? "" : "oracle " + to_string(sum_oracle) + ", formula " + to_string(sum_formula) + tag);
    }

    for (std::size_t s = 1; s <= n; ++s) {
      for (std::size_t r = 1; r <= n; ++r) {
        const EfpQuery q{n, r, s};
        const Rational ref = efp.oracle(q);
        const std::vector<std::pair<const char*, Rational>> routes{{"row-sum", efp.from_row_sum(q)},
                                                                   {"rep1", efp.rep1(q)},
                                                                   {"rep2", efp.rep2(q)},
                                                                   {"double", efp.efp_double(q)}};
        std::string bad;
        for (const auto& [name, v] : routes) {
          if (v != ref && bad.empty()) bad = std::string(name) + ": " + mismatch(v, ref);
        }
        if (r < s && ref != 0 && bad.empty()) bad = "expected 0, got " + to_string(ref);
        if (r == n && ref != 1 && bad.empty()) bad = "expected 1, got " + to_string(ref);
        rep.add("efp " + nn + " r=" + std::to_string(r) + " s=" + std::to_string(s), bad.empty(),
                bad.empty() ? "" : bad + tag);
      }
    }
  }

  // Inhomogeneous determinant against the oracle at distinct parameters.
  {
    PrecisionScope scope(std::max(working_digits(), kDefaultDigits));
    RationalSampler rs(opt.seed);
    const Real eta = Real(Rational(3, 10));
    for (std::size_t n = 1; n <= opt.n_max; ++n) {
      std::vector<Real> lambda, nu;
      for (std::size_t i = 0; i < n; ++i) {
        lambda.push_back(Real(Rational(long(i) + 1, 3) + rs.next() / Rational(100)));
        nu.push_back(Real(Rational(-long(i), 5) + rs.next() / Rational(100)));
      }
      SpectralParams p(lambda, nu, eta);
      const Real ik = ik_det_inhom(p);
      const Real oracle = partition_qism(LatticeWeights<Real>::trigonometric(p), opt.bounds);
      const Real rel = relative_difference(ik, oracle);
      const bool ok = rel <= Real("1e-25");
      rep.add("ik-inhom=qism N=" + std::to_string(n), ok, ok ? "" : "relative difference " + to_string(rel));
    }
  }

  const std::size_t s_max = std::min<std::size_t>(opt.n_max, kMaxWLemmaSize);
  for (std::size_t s = 1; s <= s_max; ++s) {
    rep.append(check_sum_identity(s, unsigned(2 * s + 2)));
    rep.append(check_identity1({s, opt.identity_trials, opt.seed, {w}, opt.bounds}));
    rep.append(check_identity2({s, opt.identity_trials, opt.seed, {{w.t(), w.delta()}}}));
    rep.append(check_w_lemma({s, 2, s + 1, opt.seed, {{w.t(), w.delta()}}}));
  }
  return rep;
}

}  // namespace sixv
