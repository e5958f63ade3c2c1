#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lgt/fields.hpp"
#include "lgt/gauge.hpp"
#include "lgt/lattice.hpp"
#include "lgt/symmetric_operator.hpp"

namespace lgt {

/// u_p = u(x,x+e_j) + u(x+e_j,x+e_j+e_k) - u(x+e_k,x+e_j+e_k) - u(x,x+e_k).
template <class T>
T plaquette_value(const Lattice& lat, std::span<const T> u, const Plaquette& p) {
  const auto e = lat.plaquette_edges(p);
  return u[e[0]] + u[e[1]] - u[e[2]] - u[e[3]];
}

/// Plaquette form sum_p u_p v_p, evaluated directly from the plaquette list.
template <class T>
T sigma_form(const Lattice& lat, std::span<const T> u, std::span<const T> v) {
  T s{};
  for (const auto& p : lat.plaquettes()) s += plaquette_value(lat, u, p) * plaquette_value(lat, v, p);
  return s;
}

/// Matrix of the plaquette form from its stencil: 2(d-1) - stratum on the
/// diagonal, +1 / -1 on positive / negative neighbours, 0 elsewhere. Exact.
IntegerSymmetricMatrix assemble_sigma_exact(const Lattice& lat);
SymmetricOperator assemble_sigma(const Lattice& lat);

/// Principal submatrix on the free edges of the gauge.
SymmetricOperator restrict_to_axial(const SymmetricOperator& sigma, const AxialGauge& gauge);

/// Q_d on a zero-extended one-form living on padded_grid(lat).
OneForm apply_Qd(const OneForm& w);
/// (R_d w)_i(x) = stratum(x, x+e_i) * w_i(x) on edge slots, 0 elsewhere.
OneForm apply_Rd(const Lattice& lat, const OneForm& w);

struct SplitCheck {
  double lhs;  // plaquette form sigma(u, u)
  double rhs;  // <w, Q_d w> - <w, R_d w>
  double error() const;
};
/// Evaluates both sides of sigma(u,u) = <w,Q_d w> - <w,R_d w> for w = w(u)
/// by independent code paths.
SplitCheck verify_sigma_split(const EdgeField& u);

/// Gram-type matrix M_ab = <b_a, Q b_b> over an orthonormal family of sparse
/// one-forms on `grid`; the operator is Q_d on zero-extended grids and the
/// torus operator on periodic grids. Throws std::invalid_argument if the
/// family deviates from orthonormal by more than 1e-10.
SymmetricOperator assemble_projected_maxwell(const Grid& grid, int components,
                                             std::span<const SparseOneForm> basis, std::string name);

/// max |G - I| for the Gram matrix of a sparse family.
double orthonormality_defect(std::span<const SparseOneForm> basis);

}  // namespace lgt
