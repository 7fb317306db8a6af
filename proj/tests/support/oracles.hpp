// Test-side oracles, kept independent of the implementation paths they check:
//  - k-form evaluation by explicit permutation sums (vs iterated contraction)
//  - Jacobi identity by direct triple-bracket expansion (vs d.d = 0)
//  - torsion tensor of an endomorphism from hardcoded bracket tables
#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "hexforms/kform.hpp"
#include "hexforms/liealg.hpp"

namespace oracles {

using namespace hexforms;

inline Frac evaluate_by_permutations(const KForm& w, const std::vector<Vector>& args) {
  const int k = w.degree();
  Frac acc = Frac::zero(w.ring());
  for (const auto& [mask, c] : w.terms()) {
    std::vector<int> idx;
    for (int b = 1; b <= kFrameDim; ++b)
      if (mask & (1u << (b - 1))) idx.push_back(b);
    // det of the k x k matrix M[a][b] = args[b][idx[a]]
    std::vector<int> perm(k);
    for (int p = 0; p < k; ++p) perm[p] = p;
    Frac det = Frac::zero(w.ring());
    do {
      int inv = 0;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (perm[a] > perm[b]) ++inv;
      Frac prod = Frac::constant(w.ring(), GaussRational(inv % 2 ? -1 : 1));
      for (int a = 0; a < k; ++a) prod *= args[perm[a]][idx[a]];
      det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc += c * det;
  }
  return acc;
}

// Direct Jacobi check on basis triples via the bracket (no differential).
inline bool jacobi_holds_directly(const LieAlgebra& g) {
  const RingPtr& ring = g.ring();
  for (int i = 1; i <= kFrameDim; ++i) {
    for (int j = i + 1; j <= kFrameDim; ++j) {
      for (int k = j + 1; k <= kFrameDim; ++k) {
        Vector ei = Vector::basis(ring, i), ej = Vector::basis(ring, j),
               ek = Vector::basis(ring, k);
        Vector sum = g.bracket(g.bracket(ei, ej), ek) + g.bracket(g.bracket(ej, ek), ei) +
                     g.bracket(g.bracket(ek, ei), ej);
        if (!sum.is_zero()) return false;
      }
    }
  }
  return true;
}

// Torsion tensor N_F from an explicit 3-dimensional bracket table
// brk[i][j] = [e_{i+1}, e_{j+1}] given as component triples.
struct Brackets3 {
  // brk[i][j][k] = k-th component of [e_i, e_j] (0-based, antisymmetric)
  std::array<std::array<std::array<int, 3>, 3>, 3> c{};
  void set(int i, int j, std::array<int, 3> v) {
    for (int k = 0; k < 3; ++k) {
      c[i][j][k] = v[k];
      c[j][i][k] = -v[k];
    }
  }
};

inline std::array<Frac, 3> bracket3(const Brackets3& b, const std::array<Frac, 3>& x,
                                    const std::array<Frac, 3>& y, const RingPtr& ring) {
  std::array<Frac, 3> out{Frac::zero(ring), Frac::zero(ring), Frac::zero(ring)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int k = 0; k < 3; ++k) {
        if (b.c[i][j][k] == 0) continue;
        out[k] += x[i] * y[j] * Frac::constant(ring, GaussRational(b.c[i][j][k]));
      }
    }
  return out;
}

// N_F(e_a, e_b) = [Fe_a, Fe_b] - F[e_a, Fe_b] - F[Fe_a, e_b] - [e_a, e_b]
inline std::array<Frac, 3> torsion3(const Brackets3& b,
                                    const std::array<std::array<Frac, 3>, 3>& F_cols, int a,
                                    int bb, const RingPtr& ring) {
  auto basis = [&](int k) {
    std::array<Frac, 3> v{Frac::zero(ring), Frac::zero(ring), Frac::zero(ring)};
    v[k] = Frac::constant(ring, GaussRational(1));
    return v;
  };
  auto applyF = [&](const std::array<Frac, 3>& x) {
    std::array<Frac, 3> out{Frac::zero(ring), Frac::zero(ring), Frac::zero(ring)};
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) out[i] += F_cols[j][i] * x[j];
    return out;
  };
  auto ea = basis(a), eb = basis(bb);
  auto Fa = applyF(ea), Fb = applyF(eb);
  auto t1 = bracket3(b, Fa, Fb, ring);
  auto t2 = applyF(bracket3(b, ea, Fb, ring));
  auto t3 = applyF(bracket3(b, Fa, eb, ring));
  auto t4 = bracket3(b, ea, eb, ring);
  std::array<Frac, 3> out{Frac::zero(ring), Frac::zero(ring), Frac::zero(ring)};
  for (int k = 0; k < 3; ++k) out[k] = t1[k] - t2[k] - t3[k] - t4[k];
  return out;
}

}  // namespace oracles
