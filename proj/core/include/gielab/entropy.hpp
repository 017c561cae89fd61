#pragma once

#include "gielab/two_qubit.hpp"

namespace gielab {

/// Entanglement entropy of a pure two-qubit state, in nats. The 4-vector is
/// reshaped into the 2x2 matrix M[k][l]; the squared singular values are the
/// Schmidt weights and the entropy is -sum p ln p (0 ln 0 := 0).
/// Range [0, ln 2]; zero iff the state is a product.
double entanglement_entropy(const TwoQubitPureState& state);

/// Minimum eigenvalue of the partial transpose of rho over qubit 2.
/// For two qubits, >= 0 (up to -1e-12) certifies separability.
double ppt_min_eigenvalue(const TwoQubitMixedState& rho);

} // namespace gielab
