#pragma once
// Replay of the 2-adic invariant computation at the place u of M: the point
// P over M_u with inv_u(B(P)) = 1/2, the global point Q with inv_u(B(Q)) = 0,
// and the resulting obstruction sum.  Every reduction step of the chain is
// machine-verified and logged:
//   R1  symbol killed by restriction from a subfield of even index
//   R2  square factors replaced inside one argument
//   R3  corestriction to a subfield (relative norm / cores_quad)
//   R4  base-case invariant over Q2
//   identity  algebraic identities (surface membership, factorizations)

#include <array>
#include <string>
#include <vector>

#include "qb/dyadic.hpp"
#include "qb/geometry.hpp"

namespace qb {

using DyPoint = SurfacePoint<DyadicElt>;

// l over Q2(sqrt2) with l^4 = d = 1 - 8 sqrt2 (3 + 2 sqrt2) and
// l^2 = 33 + 20 sqrt2 mod pi^11.
DyadicElt lemma_l(int prec = 0);

// P = (2^{-1/4}, l 2^{-1/4}, 1 + sqrt2) over M_u (chart w = 1).
DyPoint build_point_P(int prec = 0);

// Q = (2, -1, 2), exact over the global field M.
std::array<NFElement, 3> build_point_Q();
// Q viewed in M_u.
DyPoint local_point_Q(int prec = 0);

struct DerivStep {
  std::string step;    // human-readable description
  std::string rule;    // R1 | R2 | R3 | R4 | identity
  std::string inputs;
  std::string output;
  bool verified = false;
};

struct InvReport {
  InvValue value;
  std::vector<DerivStep> log;
  bool all_verified() const;
};

// Evaluate the three quaternions of B at the point and reduce the invariant
// down the verified chain.  K must be M_u.
InvReport eval_B_at(const DyPoint& pt, const DyadicField& K);

struct ObstructionReport {
  InvReport at_P, at_Q;
  InvValue sum;
  std::string note;  // the quoted global cancellation argument
};
ObstructionReport obstruction_sum();

}  // namespace qb
