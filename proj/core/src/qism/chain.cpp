#include "sixv/qism/chain.hpp"

namespace sixv {

ChainVector<Real> apply_monodromy_entry(Entry entry, Orientation orientation, const Real& spectral,
                                        std::span<const Real> site_params, const Real& eta,
                                        const ChainVector<Real>& v) {
  if (site_params.size() != v.sites()) throw DomainError("site parameter list does not match the chain length");
  const Real c = sin(Real(2) * eta);
  std::vector<SiteWeight<Real>> w;
  w.reserve(site_params.size());
  for (const Real& p : site_params) {
    Real diff = orientation == Orientation::vertical ? Real(spectral - p) : Real(p - spectral);
    w.push_back({sin(diff + eta), sin(diff - eta), c});
  }
  return apply_entry<Real>(entry, w, v);
}

}  // namespace sixv
