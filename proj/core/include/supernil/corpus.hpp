#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supernil/invariants.hpp"
#include "supernil/superalgebra.hpp"

namespace supernil {

/// Where a corpus entry came from.
struct Provenance {
  enum class Kind { CatalogSpec, File, BasisChange };
  Kind kind = Kind::CatalogSpec;
  /// Family spec or file path; empty for basis changes.
  std::string detail;
  /// Label of the source entry; basis changes only.
  std::string parent;
  /// Seed of the basis-change transformation; basis changes only.
  std::uint64_t seed = 0;
};

struct CorpusEntry {
  std::string label;
  SuperAlgebra algebra;
  Provenance provenance;
};

struct Corpus {
  std::vector<CorpusEntry> entries;

  const CorpusEntry* find(const std::string& label) const;
};

struct CorpusConfig {
  /// Largest even dimension enumerated; families scale their shapes off it.
  unsigned max_n = 6;
  std::uint64_t seed = 1;
  /// Random-basis-change copies appended per base entry.
  unsigned mutation_count = 0;
};

/// Deterministic enumeration: the catalog families over every legal shape
/// with n <= max_n, the sampled parameter points of classified_list, a
/// graded-algebra edge instance, and mutation_count seeded basis-changed
/// copies of each. Labels are unique and every entry satisfies the defining
/// identity.
Corpus build_corpus(const CorpusConfig& config);

/// Basis change with unimodular integer blocks; cheap to invert exactly and
/// conductor-preserving.
SuperAlgebra random_basis_change(const SuperAlgebra& a, std::uint64_t seed);

/// Isomorphic copy in which the odd basis satisfies [y_j, x1] = y_{j+1} for
/// 1 <= j <= m-1 with x1 the renamed witness of the odd characteristic
/// block. The transforms express the new basis in the old coordinates, one
/// block per parity. Inputs already in that form come back unchanged.
struct AdaptedBasis {
  SuperAlgebra algebra;
  Matrix even_change, odd_change;
};

/// Throws DomainError when the odd part is empty or the odd characteristic
/// maximum is not a single block.
AdaptedBasis adapted_basis(const SuperAlgebra& a);

struct TheoremViolation {
  std::string label;
  std::string details;
};

struct TheoremReport {
  std::string theorem_id;
  /// One sentence on which entries the claim was checked over.
  std::string scope;
  unsigned instances_checked = 0;
  std::vector<TheoremViolation> violations;

  bool pass() const { return violations.empty(); }
};

/// Checks one catalogued claim over the corpus. Ids: Thm2.1 (single-generated
/// entries reach nilindex n+m+1), Lemma3.2 and Cor3.1 (graded even-part
/// dimension bounds), Thm3.3 (no entry of characteristic sequence
/// (n1,...|m) with n1 <= n-2 attains nilindex n+m, checked in contrapositive),
/// Eq1-adapted (adapted_basis lands on the normal form). Unknown id throws
/// DomainError.
TheoremReport verify_theorem(const std::string& theorem_id, const Corpus& corpus);

}  // namespace supernil
