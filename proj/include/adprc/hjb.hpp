#pragma once

#include <Eigen/Dense>

namespace adprc {

struct CostConfig {
  double eta = 2.0;
  Eigen::MatrixXd R;  // N x N, symmetric positive definite
  Eigen::MatrixXd R_inv;
  double t_f = 0.0;  // horizon, informational

  static CostConfig scalar(double eta, double r, int n, double t_f = 0.0);
  static CostConfig full(double eta, const Eigen::MatrixXd& R, double t_f = 0.0);
};

// eta * e'e + u'Ru
double utility(const Eigen::VectorXd& e, const Eigen::VectorXd& u, const CostConfig& cfg);

// utility + V_e' * e_dot
double hamiltonian(const Eigen::VectorXd& e, const Eigen::VectorXd& u,
                   const Eigen::VectorXd& V_e, const Eigen::VectorXd& e_dot,
                   const CostConfig& cfg);

// Stationary point of the Hamiltonian in u: -1/2 R^-1 g' V_e
Eigen::VectorXd optimal_control(const Eigen::VectorXd& V_e, const Eigen::MatrixXd& g_mat,
                                const CostConfig& cfg);

// eta * e'e + V_e' f - 1/4 V_e' g R^-1 g' V_e; zero at the true value gradient.
double hjb_residual(const Eigen::VectorXd& e, const Eigen::VectorXd& V_e,
                    const Eigen::VectorXd& f_val, const Eigen::MatrixXd& g_mat,
                    const CostConfig& cfg);

// Positive root of 2*a*P - (b^2/r)*P^2 + eta = 0, the value coefficient of
// the scalar plant e_dot = a*e + b*u under cost eta*e^2 + r*u^2. For b = 0
// the plant must already be stable and P = -eta / (2a).
double riccati_scalar(double a, double b, double r, double eta);

}  // namespace adprc
