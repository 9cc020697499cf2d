#pragma once

#include <map>
#include <vector>

#include "troplat/entropy.hpp"

namespace troplat {

/// Point of extended n-space; min-plus semimodule element.
using TropicalPoint = std::vector<ExtRational>;

bool all_finite(const TropicalPoint& v);

TropicalPoint make_point(std::vector<Rational> coords);

struct PhiResult {
  Rational value;
  std::vector<Mask> active;  // ascending masks attaining the maximum
};

/// Evaluates max over finite-h subsets J of (v_J - h_J) together with the
/// set of maximizers. Requires all coordinates finite.
PhiResult phi_eval(const EntropyVector& h, const TropicalPoint& v);

/// Union-of-active-sets membership criterion: v lies in the tropical lattice
/// iff the active subsets jointly cover every coordinate.
bool is_member(const EntropyVector& h, const TropicalPoint& v);

/// Equivalent directional criterion: phi(v + t e_j) = phi(v) + t for every j
/// and small t > 0, with t chosen exactly as half the least positive gap
/// between distinct monomial values at v.
bool is_member_directional(const EntropyVector& h, const TropicalPoint& v);

using GeneratorSet = std::map<Mask, TropicalPoint>;

/// The vectors u_J, one per proper subset J with finite h_J:
/// u_{J,j} = h_{J+j} - h_J off J and infinity on J.
GeneratorSet generators(const EntropyVector& h);

TropicalPoint trop_add(const TropicalPoint& x, const TropicalPoint& y);
TropicalPoint trop_scale(const ExtRational& lambda, const TropicalPoint& x);

struct ReconstructResult {
  std::map<Mask, ExtRational> lambda;  // one weight per generator subset
  TropicalPoint recombined;
  bool ok;
  int mismatch_coordinate;  // -1 when ok
};

/// Writes a member x as a min-plus combination of the generators with
/// weights lambda_J = phi(x) + h_J - x_J, then verifies the identity.
ReconstructResult reconstruct(const EntropyVector& h, const TropicalPoint& x);

/// Restriction of h to the r-subsets (the tropical Pluecker vector of the
/// spanned linear space); r must equal the rank encoded in h.
std::map<Mask, ExtRational> plucker_from_entropy(const EntropyVector& h, int r);

/// Valuated-matroid membership of a point of n-space modulo the all-ones
/// line: for every (r+1)-subset S, the minimum of p(S - j) + w_j over j in S
/// is attained at least twice.
bool trop_linear_member(const std::map<Mask, ExtRational>& plucker,
                        const std::vector<Rational>& w, int n);

}  // namespace troplat
