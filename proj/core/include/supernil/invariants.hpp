#pragma once

#include <cstdint>
#include <vector>

#include "supernil/linalg.hpp"
#include "supernil/subspace.hpp"
#include "supernil/superalgebra.hpp"

namespace supernil {

/// Descending central series A = A^1 >= A^2 >= ... with A^{k+1} = [A^k, A].
struct SeriesReport {
  /// terms[k] is A^{k+1}; the last term is zero when nilpotent, otherwise the
  /// first repeated (stabilized) term.
  std::vector<Subspace> terms;
  bool nilpotent = false;
  /// Minimal s with A^s = 0; meaningful only when nilpotent.
  unsigned nilindex = 0;

  /// dim A^1, dim A^2, ... as stored in `terms`.
  std::vector<unsigned> dims() const;
};

SeriesReport central_series(const SuperAlgebra& a);

/// dim A - dim A^2. Throws NotNilpotentError.
unsigned minimal_generator_count(const SuperAlgebra& a);

/// Descending Jordan block sizes of a nilpotent operator.
struct NilpotentProfile {
  std::vector<unsigned> blocks;

  friend bool operator==(const NilpotentProfile& a, const NilpotentProfile& b) {
    return a.blocks == b.blocks;
  }
};

/// Lexicographic comparison after padding the shorter with zeros; returns
/// -1, 0, or 1.
int compare_profiles(const NilpotentProfile& a, const NilpotentProfile& b);

/// Block sizes recovered from the rank sequence: the number of blocks of size
/// at least k equals rank(N^{k-1}) - rank(N^k). Throws DomainError when the
/// matrix is not square or not nilpotent.
NilpotentProfile jordan_profile(const Matrix& n);

enum class CharSeqStrategy { BasisCandidates, SeededRandom, Combined };

struct CharSeqOptions {
  CharSeqStrategy strategy = CharSeqStrategy::Combined;
  /// Number of random candidates for the random strategies.
  unsigned random_candidates = 16;
  std::uint64_t seed = 0;
};

/// The pair of independent maxima over candidates x in L0 \ L0^2 of the block
/// profiles of right multiplication on the even and odd blocks, with the
/// candidates attaining them.
struct CharSequence {
  NilpotentProfile c0, c1;
  GradedVector witness0, witness1;
};

/// Throws NotNilpotentError, and DomainError when no candidate lies outside
/// L0^2 (empty even part).
CharSequence char_sequence(const SuperAlgebra& a, const CharSeqOptions& opts = {});

/// The associated graded algebra of the central-series filtration, realized as
/// a concrete algebra on an adapted basis ordered layer by layer within each
/// parity block.
struct GradedAlgebra {
  /// layers[i-1] = dim(A^i / A^{i+1}).
  std::vector<unsigned> layers;
  SuperAlgebra algebra;
  /// 1-based layer of each basis element of `algebra`.
  std::vector<unsigned> layer_of_even, layer_of_odd;

  unsigned layer_of(BasisIndex b) const {
    return b.parity == Parity::Even ? layer_of_even[b.index - 1]
                                    : layer_of_odd[b.index - 1];
  }
  /// Coordinate span of the basis elements in the given layer.
  Subspace layer_span(unsigned layer) const;
};

/// Throws NotNilpotentError.
GradedAlgebra natural_gradation(const SuperAlgebra& a);

/// Necessary isomorphism data: equal values are required, not sufficient, for
/// two algebras to be isomorphic. Witnesses are carried for reporting but do
/// not take part in equality.
struct Fingerprint {
  std::vector<unsigned> series_dims;
  unsigned nilindex = 0;
  CharSequence char_seq;
  unsigned annihilator_dim = 0;
  bool lie = false;
};

bool operator==(const Fingerprint& a, const Fingerprint& b);
inline bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }

/// Throws NotNilpotentError.
Fingerprint invariant_fingerprint(const SuperAlgebra& a, const CharSeqOptions& opts = {});

}  // namespace supernil
