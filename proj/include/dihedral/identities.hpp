#pragma once

// Numerical checks of the identities that connect the representations:
// the S_N finite-sum identity and its boundary case, the Poisson kernel and
// the generating function built from it, the Chebyshev factorization, the
// Dirichlet integral, the alternating Pochhammer sum, the duplication
// formula, the closed form of 2F1(s/2, (s+1)/2; s+1; z) and the disk-Bessel
// identity.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dihedral/types.hpp"

namespace dihedral {

struct IdentityCheck {
  std::string label;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t cases = 0;
  bool passed = false;
};

struct IdentitySuite {
  std::string name;
  std::vector<IdentityCheck> checks;

  bool passed() const;
  double max_deviation() const;
};

/// sN, idgeg, poisson, factorization, dirichlet, altsum, duplication,
/// 2f1closed, diskbessel.
const std::vector<std::string>& identity_names();

/// Runs one suite. Random angles are drawn from the counter-based generator
/// with `seed`. Throws std::invalid_argument for unknown names.
IdentitySuite run_identity(std::string_view which, std::uint64_t seed = kDefaultSeed);

}  // namespace dihedral
