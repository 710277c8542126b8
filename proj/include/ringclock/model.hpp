#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>

#include "ringclock/errors.hpp"

namespace ringclock {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cxd = std::complex<double>;

/// Parameters of the two-ramp exponential coupling ansatz
/// g_j = -mu_l e^{-j/lambda_l} + g + mu_r e^{(j-(n-1))/lambda_r}.
struct AnsatzParams {
    double mu_l = 0.0;
    double g = 1.0;
    double mu_r = 0.0;
    double lambda_l = 1.0;
    double lambda_r = 1.0;

    bool valid() const { return g > 0.0 && lambda_l > 0.0 && lambda_r > 0.0; }
};

/// The n-1 nearest-neighbor couplings of an n-site ring, in units of the
/// tick rate. All values strictly positive and finite.
struct CouplingProfile {
    int n = 1;
    VectorXd values;  // size n-1

    CouplingProfile() = default;
    CouplingProfile(int n_, VectorXd values_);

    static CouplingProfile flat(int n, double g);
};

/// Dense-matrix caps. Constructions beyond these throw DimensionOverflow
/// instead of thrashing.
struct DenseLimits {
    int hilbert = 2000;       // n x n operators
    int superoperator = 80;   // n^2 x n^2 generators
};

/// Ring clock: coupling profile, tick rate Gamma, and the reversal weight
/// delta = e^{-Sigma_tick} of the backward jump.
struct RingClockModel {
    CouplingProfile profile;
    double gamma = 1.0;
    double delta = 0.0;

    RingClockModel() = default;
    RingClockModel(CouplingProfile profile_, double gamma_ = 1.0, double delta_ = 0.0);

    int n() const { return profile.n; }

    /// Entropy produced per forward tick, -ln(delta); infinite at delta = 0.
    double sigma_tick() const {
        return delta > 0.0 ? -std::log(delta) : std::numeric_limits<double>::infinity();
    }
};

/// Evaluate the ansatz on an n-site ring. Throws NonPositiveCoupling if any
/// resulting coupling is <= 0 (rejection, never clamping).
CouplingProfile coupling_profile(int n, const AnsatzParams& p);

/// Real symmetric tridiagonal hopping Hamiltonian with zero diagonal.
MatrixXd hamiltonian(const CouplingProfile& profile);

/// Hopping Hamiltonian with the ring closed periodically. The closing bond
/// uses the median coupling (equal to g for flat profiles).
MatrixXd hamiltonian_periodic(const CouplingProfile& profile);

/// H_eff = H - (i/2) Gamma |n-1><n-1| - (i/2) delta Gamma |0><0|.
/// Generates the no-click conditional evolution; its anti-Hermitian part is
/// negative semidefinite.
MatrixXcd effective_hamiltonian(const RingClockModel& model);

/// Vectorized tilted generator L(chi, delta) under column stacking,
/// vec(A X B) = (B^T kron A) vec(X):
///   L = -i(I kron H - H^T kron I)
///       + e^{+i chi} conj(J) kron J - (1/2)(I kron J'J + (J'J)^T kron I)
///       + delta [ e^{-i chi} conj(J') kron J'
///                 - (1/2)(I kron JJ' + (JJ')^T kron I) ]
/// with J = sqrt(Gamma)|0><n-1|. At chi = 0 the trace functional is a left
/// null vector.
MatrixXcd liouvillian(const RingClockModel& model, double chi, double delta,
                      const DenseLimits& limits = {});

/// Column-stacking helpers.
VectorXcd vec(const MatrixXcd& m);
MatrixXcd unvec(const VectorXcd& v, int n);

}  // namespace ringclock
