#include "ringclock/model.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ringclock {

CouplingProfile::CouplingProfile(int n_, VectorXd values_) : n(n_), values(std::move(values_)) {
    if (n < 1) throw BadDimension("CouplingProfile: n must be >= 1");
    if (values.size() != n - 1)
        throw BadDimension("CouplingProfile: expected " + std::to_string(n - 1) + " couplings, got " +
                           std::to_string(values.size()));
    for (Eigen::Index j = 0; j < values.size(); ++j) {
        if (!(values[j] > 0.0) || !std::isfinite(values[j]))
            throw NonPositiveCoupling("CouplingProfile: coupling " + std::to_string(j) +
                                      " is not strictly positive and finite");
    }
}

CouplingProfile CouplingProfile::flat(int n, double g) {
    return CouplingProfile(n, VectorXd::Constant(std::max(n - 1, 0), g));
}

RingClockModel::RingClockModel(CouplingProfile profile_, double gamma_, double delta_)
    : profile(std::move(profile_)), gamma(gamma_), delta(delta_) {
    if (!(gamma > 0.0)) throw Error("RingClockModel: gamma must be positive");
    if (delta < 0.0 || delta > 1.0) throw Error("RingClockModel: delta must lie in [0, 1]");
}

CouplingProfile coupling_profile(int n, const AnsatzParams& p) {
    if (n < 2) throw BadDimension("coupling_profile: n must be >= 2");
    if (!p.valid()) throw Error("coupling_profile: invalid ansatz parameters");
    VectorXd g(n - 1);
    for (int j = 0; j < n - 1; ++j) {
        g[j] = -p.mu_l * std::exp(-j / p.lambda_l) + p.g +
               p.mu_r * std::exp((j - (n - 1)) / p.lambda_r);
        if (!(g[j] > 0.0))
            throw NonPositiveCoupling("coupling_profile: ansatz yields g_" + std::to_string(j) +
                                      " <= 0");
    }
    return CouplingProfile(n, std::move(g));
}

MatrixXd hamiltonian(const CouplingProfile& profile) {
    const int n = profile.n;
    MatrixXd h = MatrixXd::Zero(n, n);
    for (int j = 0; j < n - 1; ++j) {
        h(j, j + 1) = profile.values[j];
        h(j + 1, j) = profile.values[j];
    }
    return h;
}

MatrixXd hamiltonian_periodic(const CouplingProfile& profile) {
    const int n = profile.n;
    MatrixXd h = hamiltonian(profile);
    if (n >= 2) {
        std::vector<double> v(profile.values.begin(), profile.values.end());
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        const double close = v[v.size() / 2];
        h(0, n - 1) += close;
        h(n - 1, 0) += close;
    }
    return h;
}

MatrixXcd effective_hamiltonian(const RingClockModel& model) {
    const int n = model.n();
    MatrixXcd h = hamiltonian(model.profile).cast<cxd>();
    h(n - 1, n - 1) -= cxd(0.0, 0.5 * model.gamma);
    h(0, 0) -= cxd(0.0, 0.5 * model.gamma * model.delta);
    return h;
}

MatrixXcd liouvillian(const RingClockModel& model, double chi, double delta,
                      const DenseLimits& limits) {
    const int n = model.n();
    if (n > limits.superoperator)
        throw DimensionOverflow("liouvillian: n = " + std::to_string(n) +
                                " exceeds dense superoperator limit " +
                                std::to_string(limits.superoperator));
    const MatrixXcd h = hamiltonian(model.profile).cast<cxd>();
    const MatrixXcd id = MatrixXcd::Identity(n, n);
    const double gam = model.gamma;

    MatrixXcd j = MatrixXcd::Zero(n, n);
    j(0, n - 1) = std::sqrt(gam);
    const MatrixXcd jd = j.adjoint();
    const MatrixXcd jdj = jd * j;  // Gamma |n-1><n-1|
    const MatrixXcd jjd = j * jd;  // Gamma |0><0|

    auto kron = [](const MatrixXcd& a, const MatrixXcd& b) {
        MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index k = 0; k < a.cols(); ++k) out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
        return out;
    };

    MatrixXcd l = cxd(0.0, -1.0) * (kron(id, h) - kron(h.transpose(), id));
    l += std::exp(cxd(0.0, chi)) * kron(j.conjugate(), j);
    l -= 0.5 * (kron(id, jdj) + kron(jdj.transpose(), id));
    if (delta != 0.0) {
        l += delta * (std::exp(cxd(0.0, -chi)) * kron(jd.conjugate(), jd) -
                      0.5 * (kron(id, jjd) + kron(jjd.transpose(), id)));
    }
    return l;
}

VectorXcd vec(const MatrixXcd& m) {
    return Eigen::Map<const VectorXcd>(m.data(), m.size());
}

MatrixXcd unvec(const VectorXcd& v, int n) {
    if (v.size() != Eigen::Index(n) * n) throw BadDimension("unvec: size mismatch");
    return Eigen::Map<const MatrixXcd>(v.data(), n, n);
}

}  // namespace ringclock
