#include "swampstab/gieseker.hpp"

#include <algorithm>

namespace swampstab {

long euler_p(long n, long d, int r, int g) { return d + r * (n + 1 - g); }

Linearization make_linearization(long p_n, const Rational& delta1,
                                 const Rational& delta2, int a1, int a2, int r) {
  const Rational eta_target = Rational(p_n) - delta1 * a1 - delta2 * a2;
  if (eta_target <= 0)
    throw Error("NonPositiveEta", "p(n) - a1 delta1 - a2 delta2 must be positive");
  const Rational t1 = delta1 * r, t2 = delta2 * r;
  const long z = lcm_of_denominators({eta_target, t1, t2});
  Linearization lin;
  lin.z = z;
  lin.eta = Rational(eta_target * z).get_num();
  lin.theta1 = Rational(t1 * z).get_num();
  lin.theta2 = Rational(t2 * z).get_num();
  return lin;
}

Rational gies_weight_quot(const SectionFlag& flag, int r) {
  Rational w = 0;
  for (int j = 0; j < flag.length(); ++j)
    w += flag.weights[j] *
         (Rational(flag.total_dim) * flag.gen_ranks[j] - Rational(r) * flag.dims[j]);
  return w;
}

Rational gies_weight_tensor(const SectionFlag& flag,
                            const std::function<bool(const IndexTuple&)>& support,
                            int a_m) {
  const int k = flag.length();
  if (a_m == 0) return Rational(0);
  bool found = false;
  Rational min_weight = 0;
  IndexTuple tuple(a_m, 1);
  while (true) {
    if (support(tuple)) {
      Rational w = 0;
      for (int j = 1; j <= k; ++j)
        w += flag.weights[j - 1] *
             (Rational(a_m) * flag.dims[j - 1] -
              Rational(flag.total_dim) * tuple_nu(tuple, j));
      if (!found || w < min_weight) min_weight = w;
      found = true;
    }
    int i = a_m - 1;
    while (i >= 0 && tuple[i] == k + 1) tuple[i--] = 1;
    if (i < 0) break;
    ++tuple[i];
  }
  if (!found) throw Error("EmptySupport", "no supported index tuple");
  return -min_weight;
}

Rational total_gies_weight(const Linearization& lin, const Rational& wM,
                           const Rational& wT1, const Rational& wT2) {
  return Rational(lin.eta) * wM + Rational(lin.theta1) * wT1 +
         Rational(lin.theta2) * wT2;
}

SectionFlag transport_gamma(const NumericFlag& eflag,
                            const std::vector<long>& h0_steps, long h0_total) {
  if (static_cast<int>(h0_steps.size()) != eflag.length())
    throw Error("InconsistentH0", "one section count per flag step required");
  long prev = 0;
  for (long h : h0_steps) {
    if (h < prev || h > h0_total)
      throw Error("InconsistentH0", "section counts must ascend and stay below the total");
    prev = h;
  }
  SectionFlag out;
  out.total_dim = static_cast<int>(h0_total);
  for (int j = 0; j < eflag.length(); ++j) {
    if (h0_steps[j] == 0) continue;  // J(0): merged into the trivial stage
    if (!out.dims.empty() && out.dims.back() == h0_steps[j]) {
      out.weights.back() += eflag.weights[j];
      out.gen_ranks.back() = std::max(out.gen_ranks.back(), eflag.ranks[j]);
    } else {
      out.dims.push_back(static_cast<int>(h0_steps[j]));
      out.weights.push_back(eflag.weights[j]);
      out.gen_ranks.push_back(eflag.ranks[j]);
    }
  }
  return out;
}

NumericFlag transport_q(const SectionFlag& yflag,
                        const std::vector<GeneratedStep>& generated, int rank) {
  if (static_cast<int>(generated.size()) != yflag.length())
    throw Error("InconsistentH0", "one generated-subsheaf record per Y step required");
  NumericFlag out;
  for (int h = 0; h < yflag.length(); ++h) {
    const GeneratedStep& g = generated[h];
    if (!g.h1_zero) continue;
    if (!out.ranks.empty() && out.ranks.back() == g.rank &&
        out.degrees.back() == g.degree) {
      out.weights.back() += yflag.weights[h];
      continue;
    }
    if (!out.ranks.empty() && g.rank <= out.ranks.back())
      throw Error("NonAscendingChain", "generated ranks must ascend on retained steps");
    if (g.rank == 0 || g.rank >= rank) continue;  // trivial or full steps drop out
    out.ranks.push_back(g.rank);
    out.degrees.push_back(g.degree);
    out.weights.push_back(yflag.weights[h]);
    const Subspace sp = g.coords.empty()
                            ? Subspace::zero(rank)
                            : Subspace::coordinate(rank, g.coords);
    out.generic_chain.push_back(sp);
    out.x0_chain.push_back(sp);
  }
  return out;
}

}  // namespace swampstab
