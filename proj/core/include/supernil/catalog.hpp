#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "supernil/superalgebra.hpp"

namespace supernil {

/// Request for one member of a cataloged family.
///
/// Parameter keys follow the command-line syntax: "a4".."an" and "theta",
/// "tau" for the L/M shapes; "b4".."bn", "gamma", "delta" for G/H; "gamma4"
/// for M's extra coefficient; "alpha" for Leibn1. Missing keys default to
/// zero; unknown keys are rejected.
struct FamilySpec {
  std::string name;
  unsigned n = 0;
  unsigned m = 0;
  std::map<std::string, Scalar> params;
};

/// The accepted family names.
const std::vector<std::string>& family_names();

/// Builds the family's bracket table over the smallest cyclotomic field
/// containing every parameter. With verify (the default) the defining
/// identity is checked exhaustively and a residual raises DomainError;
/// verify=false returns the table anyway for residual forensics.
SuperAlgebra make_family(const FamilySpec& spec, bool verify = true);

/// Parameter vectors the normalization operators act on, positions 1..k.
using ParamVector = std::vector<Scalar>;

/// Zeroes positions below j, puts 1 at j, multiplies position i > j by
/// S_{m,j}^i where S_{m,t} = e^(2 pi i m / t). j = k+1 gives the zero
/// vector. Requires 1 <= j <= k+1 and 0 <= m < j.
ParamVector op_V(long m, unsigned j, const ParamVector& vec);

/// Acts on (v_1..v_k, g) with (v_i) in V-normal form (zeros, then 1 at some
/// position j). Keeps the 1 at j, plants 1 at s+j, carries the tail with
/// S_{m,s} weights and the trailing coefficient with weight S_{m,s}^(k+6-2j);
/// s = k+1-j and s = k+2-j degenerate to the two truncated shapes. Requires
/// 1 <= s <= k+2-j and, below the truncated range, 0 <= m < min(j, s).
ParamVector op_W(long m, unsigned s, const ParamVector& vec);

struct CatalogEntry {
  std::string label;
  FamilySpec spec;
  SuperAlgebra algebra;
};

/// The classification roster at dimensions (n, n-1) [families L, G] or
/// (n, n) [families M, H]: the two zero/one-parameter members of each family
/// plus one V-normalized entry per (j, m) and one W-normalized entry per
/// (j, s). Free parameters are sampled from the seed; operator positions
/// 1..k map to parameter subscripts 4..n.
std::vector<CatalogEntry> classified_list(unsigned n, unsigned m, std::uint64_t seed);

}  // namespace supernil
