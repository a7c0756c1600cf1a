#include "supernil/invariants.hpp"

#include <random>
#include <string>

#include "supernil/errors.hpp"

namespace supernil {

namespace {

/// Residue of v after elimination against reduced echelon rows.
std::vector<Scalar> reduce_against(const std::vector<std::vector<Scalar>>& rows,
                                   std::vector<Scalar> v) {
  const std::size_t cols = v.size();
  for (const auto& row : rows) {
    std::size_t p = 0;
    while (p < cols && row[p].is_zero()) ++p;
    if (p == cols || v[p].is_zero()) continue;
    Scalar factor = v[p];
    for (std::size_t j = p; j < cols; ++j) v[j] -= factor * row[j];
  }
  return v;
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<unsigned> SeriesReport::dims() const {
  std::vector<unsigned> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(static_cast<unsigned>(t.dim()));
  return out;
}

SeriesReport central_series(const SuperAlgebra& a) {
  SeriesReport report;
  Subspace whole = a.whole_space();
  report.terms.push_back(whole);
  while (!report.terms.back().is_zero()) {
    Subspace next = product_span(a, report.terms.back(), whole);
    if (next.dim() == report.terms.back().dim()) {
      report.nilpotent = false;
      report.terms.push_back(next);
      return report;
    }
    report.terms.push_back(next);
  }
  report.nilpotent = true;
  report.nilindex = static_cast<unsigned>(report.terms.size());
  return report;
}

unsigned minimal_generator_count(const SuperAlgebra& a) {
  SeriesReport sr = central_series(a);
  if (!sr.nilpotent) {
    throw NotNilpotentError("generator count requires a nilpotent algebra");
  }
  unsigned square_dim = sr.terms.size() > 1 ? static_cast<unsigned>(sr.terms[1].dim()) : 0;
  return a.dim() - square_dim;
}

int compare_profiles(const NilpotentProfile& a, const NilpotentProfile& b) {
  const std::size_t len = std::max(a.blocks.size(), b.blocks.size());
  for (std::size_t i = 0; i < len; ++i) {
    unsigned x = i < a.blocks.size() ? a.blocks[i] : 0;
    unsigned y = i < b.blocks.size() ? b.blocks[i] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

NilpotentProfile jordan_profile(const Matrix& n) {
  if (n.rows() != n.cols()) throw DomainError("Jordan profile of a non-square matrix");
  const std::size_t d = n.rows();
  NilpotentProfile profile;
  if (d == 0) return profile;

  // ranks[k] = rank(N^k); stop at the first zero power.
  std::vector<std::size_t> ranks = {d};
  Matrix power = n;
  while (!power.is_zero()) {
    if (ranks.size() > d) throw DomainError("operator is not nilpotent");
    ranks.push_back(rank(power));
    power = power * n;
  }
  ranks.push_back(0);

  const std::size_t top = ranks.size() - 1;  // smallest k with N^k = 0
  auto count_at_least = [&](std::size_t k) {
    return k > top ? 0 : ranks[k - 1] - ranks[k];
  };
  for (std::size_t size = top; size >= 1; --size) {
    std::size_t mult = count_at_least(size) - count_at_least(size + 1);
    for (std::size_t i = 0; i < mult; ++i) {
      profile.blocks.push_back(static_cast<unsigned>(size));
    }
  }
  return profile;
}

CharSequence char_sequence(const SuperAlgebra& a, const CharSeqOptions& opts) {
  SeriesReport sr = central_series(a);
  if (!sr.nilpotent) {
    throw NotNilpotentError("characteristic sequence requires a nilpotent algebra");
  }
  const unsigned n = a.even_dim();
  const unsigned m = a.odd_dim();
  const unsigned conductor = a.conductor();

  SuperAlgebra even = a.even_part();
  Subspace even_square = product_span(even, even.whole_space(), even.whole_space());
  auto outside_square = [&](const GradedVector& x) {
    GradedVector projected(n, 0, conductor);
    projected.even = x.even;
    return !even_square.contains(projected);
  };

  std::vector<GradedVector> candidates;
  if (opts.strategy != CharSeqStrategy::SeededRandom) {
    for (unsigned i = 1; i <= n; ++i) {
      GradedVector x = GradedVector::unit(n, m, conductor, {Parity::Even, i});
      if (outside_square(x)) candidates.push_back(std::move(x));
    }
  }
  if (opts.strategy != CharSeqStrategy::BasisCandidates && n > 0) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);
    for (unsigned k = 0; k < opts.random_candidates; ++k) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        GradedVector x(n, m, conductor);
        for (auto& c : x.even) {
          c = Scalar::from_rational(Rational(num(rng), den(rng)), conductor);
        }
        if (outside_square(x)) {
          candidates.push_back(std::move(x));
          break;
        }
      }
    }
  }
  if (candidates.empty()) {
    throw DomainError("characteristic sequence has no candidate outside L0^2");
  }

  CharSequence best;
  bool first = true;
  for (const auto& x : candidates) {
    NilpotentProfile p0 = jordan_profile(a.right_multiplication_on(Parity::Even, x));
    NilpotentProfile p1 = jordan_profile(a.right_multiplication_on(Parity::Odd, x));
    if (first || compare_profiles(p0, best.c0) > 0) {
      best.c0 = p0;
      best.witness0 = x;
    }
    if (first || compare_profiles(p1, best.c1) > 0) {
      best.c1 = p1;
      best.witness1 = x;
    }
    first = false;
  }
  return best;
}

Subspace GradedAlgebra::layer_span(unsigned layer) const {
  std::vector<GradedVector> gens;
  for (unsigned i = 1; i <= algebra.even_dim(); ++i) {
    if (layer_of_even[i - 1] == layer) {
      gens.push_back(algebra.basis_vector({Parity::Even, i}));
    }
  }
  for (unsigned j = 1; j <= algebra.odd_dim(); ++j) {
    if (layer_of_odd[j - 1] == layer) {
      gens.push_back(algebra.basis_vector({Parity::Odd, j}));
    }
  }
  return Subspace::span(algebra.even_dim(), algebra.odd_dim(), algebra.conductor(), gens);
}

GradedAlgebra natural_gradation(const SuperAlgebra& a) {
  SeriesReport sr = central_series(a);
  if (!sr.nilpotent) {
    throw NotNilpotentError("natural gradation requires a nilpotent algebra");
  }
  const unsigned n = a.even_dim();
  const unsigned m = a.odd_dim();
  const unsigned conductor = a.conductor();

  // Homogeneous representatives of A^i mod A^{i+1}, layer by layer. Rows of
  // the canonical bases are homogeneous because every series term is a graded
  // subspace, so elimination never mixes the parity blocks.
  struct Rep {
    unsigned layer;
    GradedVector vec;
  };
  std::vector<Rep> even_reps, odd_reps;
  std::vector<unsigned> layer_dims;
  for (std::size_t i = 0; i + 1 < sr.terms.size(); ++i) {
    std::vector<std::vector<Scalar>> echelon = sr.terms[i + 1].rows();
    unsigned count = 0;
    for (const auto& row : sr.terms[i].rows()) {
      std::vector<Scalar> residue = reduce_against(echelon, row);
      if (all_zero(residue)) continue;
      GradedVector v = GradedVector::split(row, n, m);
      const unsigned layer = static_cast<unsigned>(i + 1);
      if (v.is_homogeneous(Parity::Even)) {
        even_reps.push_back({layer, std::move(v)});
      } else if (v.is_homogeneous(Parity::Odd)) {
        odd_reps.push_back({layer, std::move(v)});
      } else {
        throw DomainError("series term has a non-homogeneous canonical row");
      }
      echelon.push_back(std::move(residue));
      rref_in_place(echelon);
      ++count;
    }
    layer_dims.push_back(count);
  }
  if (even_reps.size() != n || odd_reps.size() != m) {
    throw DomainError("adapted basis does not fill the space");
  }

  Matrix pe(n, n, conductor), po(m, m, conductor);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) pe.at(i, j) = even_reps[j].vec.even[i];
  }
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned i = 0; i < m; ++i) po.at(i, j) = odd_reps[j].vec.odd[i];
  }
  Matrix pe_inv = n > 0 ? inverse(pe) : Matrix(0, 0, conductor);
  Matrix po_inv = m > 0 ? inverse(po) : Matrix(0, 0, conductor);

  std::vector<unsigned> layer_of_even, layer_of_odd;
  for (const auto& r : even_reps) layer_of_even.push_back(r.layer);
  for (const auto& r : odd_reps) layer_of_odd.push_back(r.layer);

  auto rep_of = [&](BasisIndex b) -> const GradedVector& {
    return b.parity == Parity::Even ? even_reps[b.index - 1].vec
                                    : odd_reps[b.index - 1].vec;
  };
  auto layer_of = [&](BasisIndex b) {
    return b.parity == Parity::Even ? layer_of_even[b.index - 1]
                                    : layer_of_odd[b.index - 1];
  };

  // Quotient product: bracket the representatives, express in the adapted
  // basis, keep the target layer; lower layers must not appear.
  std::vector<BasisIndex> order;
  for (unsigned i = 1; i <= n; ++i) order.push_back({Parity::Even, i});
  for (unsigned j = 1; j <= m; ++j) order.push_back({Parity::Odd, j});
  std::vector<BracketEntry> entries;
  for (BasisIndex ai : order) {
    for (BasisIndex bi : order) {
      GradedVector w = a.bracket(rep_of(ai), rep_of(bi));
      if (w.is_zero()) continue;
      GradedVector adapted(n, m, conductor);
      adapted.even = pe_inv.apply(w.even);
      adapted.odd = po_inv.apply(w.odd);
      const unsigned target = layer_of(ai) + layer_of(bi);
      GradedVector kept(n, m, conductor);
      for (unsigned i = 0; i < n; ++i) {
        if (adapted.even[i].is_zero()) continue;
        if (layer_of_even[i] < target) {
          throw DomainError("graded product leaked below its target layer");
        }
        if (layer_of_even[i] == target) kept.even[i] = adapted.even[i];
      }
      for (unsigned j = 0; j < m; ++j) {
        if (adapted.odd[j].is_zero()) continue;
        if (layer_of_odd[j] < target) {
          throw DomainError("graded product leaked below its target layer");
        }
        if (layer_of_odd[j] == target) kept.odd[j] = adapted.odd[j];
      }
      if (!kept.is_zero()) entries.push_back({ai, bi, std::move(kept)});
    }
  }

  GradedAlgebra result{std::move(layer_dims),
                       SuperAlgebra(n, m, conductor, entries),
                       std::move(layer_of_even),
                       std::move(layer_of_odd)};
  return result;
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
  return a.series_dims == b.series_dims && a.nilindex == b.nilindex &&
         a.char_seq.c0 == b.char_seq.c0 && a.char_seq.c1 == b.char_seq.c1 &&
         a.annihilator_dim == b.annihilator_dim && a.lie == b.lie;
}

Fingerprint invariant_fingerprint(const SuperAlgebra& a, const CharSeqOptions& opts) {
  SeriesReport sr = central_series(a);
  if (!sr.nilpotent) {
    throw NotNilpotentError("fingerprint requires a nilpotent algebra");
  }
  Fingerprint fp;
  fp.series_dims = sr.dims();
  fp.nilindex = sr.nilindex;
  fp.char_seq = char_sequence(a, opts);
  fp.annihilator_dim = static_cast<unsigned>(a.right_annihilator().dim());
  fp.lie = a.is_lie();
  return fp;
}

}  // namespace supernil
