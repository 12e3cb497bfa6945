#ifndef SFWNAV_DRL_MLP_HPP_
#define SFWNAV_DRL_MLP_HPP_

#include <Eigen/Core>
#include <vector>

#include "core/rng.hpp"

namespace sfwnav {

/// Fully-connected network with rectified-linear hidden layers and a linear
/// output. Parameters live in one flat vector (weights then bias per layer,
/// in declaration order) so optimizers, checkpoints and finite-difference
/// probes all address the same storage.
class DenseNet {
 public:
  explicit DenseNet(std::vector<int> layer_sizes);

  /// Uniform fan-in init: W, b ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in)).
  static DenseNet init_fan_in(std::vector<int> layer_sizes, Rng& rng);

  int input_dim() const { return sizes_.front(); }
  int output_dim() const { return sizes_.back(); }
  const std::vector<int>& layer_sizes() const { return sizes_; }
  int layer_count() const { return static_cast<int>(sizes_.size()) - 1; }

  Eigen::VectorXd& params() { return params_; }
  const Eigen::VectorXd& params() const { return params_; }
  std::size_t param_count() const { return static_cast<std::size_t>(params_.size()); }

  Eigen::Map<const Eigen::MatrixXd> weight(int layer) const;
  Eigen::Map<const Eigen::VectorXd> bias(int layer) const;

  /// x is [input_dim x batch]; returns [output_dim x batch].
  Eigen::MatrixXd forward(const Eigen::MatrixXd& x) const;

  /// Post-activation values per layer, kept for the backward pass.
  struct Cache {
    std::vector<Eigen::MatrixXd> act;  // act[0] = input, act[L] = output
  };
  Eigen::MatrixXd forward(const Eigen::MatrixXd& x, Cache& cache) const;

  /// Backpropagates d_loss/d_output. When param_grad is non-null the
  /// parameter gradient is accumulated into it (callers zero it first).
  /// Returns d_loss/d_input.
  Eigen::MatrixXd backward(const Cache& cache, const Eigen::MatrixXd& d_out,
                           Eigen::VectorXd* param_grad) const;

  /// this = tau * src + (1 - tau) * this (Polyak averaging).
  void polyak_from(const DenseNet& src, double tau);

 private:
  std::vector<int> sizes_;
  std::vector<std::ptrdiff_t> w_offsets_;
  std::vector<std::ptrdiff_t> b_offsets_;
  Eigen::VectorXd params_;
};

/// Adam over a flat parameter vector.
class Adam {
 public:
  Adam() = default;
  Adam(std::size_t n, double lr) : lr_(lr) {
    m_ = Eigen::VectorXd::Zero(n);
    v_ = Eigen::VectorXd::Zero(n);
  }

  void step(Eigen::VectorXd& params, const Eigen::VectorXd& grad);

  double learning_rate() const { return lr_; }
  void set_learning_rate(double lr) { lr_ = lr; }
  long iterations() const { return t_; }
  Eigen::VectorXd& m() { return m_; }
  Eigen::VectorXd& v() { return v_; }
  void set_iterations(long t) { t_ = t; }

 private:
  double lr_ = 3e-4;
  double beta1_ = 0.9;
  double beta2_ = 0.999;
  double eps_ = 1e-8;
  long t_ = 0;
  Eigen::VectorXd m_, v_;
};

}  // namespace sfwnav

#endif
