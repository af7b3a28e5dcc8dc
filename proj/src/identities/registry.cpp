#include <algorithm>

#include "common.hpp"

namespace ehi {

bool IdentityInfo::supports(NM v) const { return std::find(nm.begin(), nm.end(), v) != nm.end(); }

const std::vector<IdentityInfo>& registry() {
  static const std::vector<IdentityInfo> all = [] {
    checks::Registry r;
    checks::register_specfun(r);
    checks::register_univariate(r);
    checks::register_matrix(r);
    checks::register_multivariate(r);
    checks::register_linear_algebra(r);
    return r;
  }();
  return all;
}

const IdentityInfo* find_identity(std::string_view name) {
  for (const auto& id : registry())
    if (id.name == name) return &id;
  return nullptr;
}

Draw draw_for(const IdentityInfo& id, std::uint64_t seed, int trial, NM nm) {
  if (!id.supports(nm))
    throw Error(ErrorKind::invalid_argument, id.name + " does not support (n, m) = (" +
                                                 std::to_string(nm.first) + ", " +
                                                 std::to_string(nm.second) + ")");
  const std::uint64_t s = seed + static_cast<std::uint64_t>(trial);
  Sampler sampler(s, id.name);
  Draw d = id.draw(sampler, nm);
  d.seed = s;
  return d;
}

IdentityReport run_identity(const IdentityInfo& id, std::uint64_t seed, int trial, NM nm,
                            const CheckOptions& opt) {
  return id.check(draw_for(id, seed, trial, nm), opt);
}

}  // namespace ehi
